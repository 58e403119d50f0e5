#ifndef ISOCENSUS_SYMPLECTIC_HPP
#define ISOCENSUS_SYMPLECTIC_HPP

#include <optional>
#include <vector>

#include "isocensus/zmod.hpp"

namespace isocensus {

inline constexpr i64 default_symplectic_bound = i64(1) << 24;

/* (Z/ell^m)^4 with basis (u1, u2 | v1, v2); the u's span the ordinary
 * factor, the v's the supersingular one, and the pairing has Gram matrix
 * [[0,1],[-1,0]] + [[0,1],[-1,0]]. */
struct symplectic_module {
    i64 ell = 2;
    unsigned m = 1;
    zmod_ring ring;
    zmat gram;
};

symplectic_module make_symplectic_module(i64 ell, unsigned m);

i64 pairing(zvec const & x, zvec const & y, symplectic_module const & M);

submodule orthogonal_complement(submodule const & H, symplectic_module const & M);

bool is_isotropic(submodule const & H, symplectic_module const & M);

/* closed form l^{3m} + l^{3m-1} + l^{3m-2} + l^{3m-3} */
i64 lagrangian_count_formula(i64 ell, unsigned m);

/* Cyclic submodules of order ell^j in (Z/ell^m)^rank, one generator
 * ell^(m-j) v per subgroup with v normalized (first unit coordinate 1,
 * earlier ones divisible by ell). */
std::vector<submodule> cyclic_subgroups(i64 ell, unsigned m, unsigned rank, unsigned j);

std::vector<submodule> enumerate_isotropic_lines(symplectic_module const & M,
                                                 i64 bound = default_symplectic_bound);

/* sorted by canonical rows */
std::vector<submodule> enumerate_lagrangians(symplectic_module const & M,
                                             i64 bound = default_symplectic_bound);

struct isotropy_type {
    enum class kind { product, non_product };
    kind tag = kind::product;
    /* for products: H meet E-block and H meet E_ss-block (coordinates of
     * each block) */
    std::optional<submodule> line_e, line_ss;
    /* for graph planes {(x, Mx)}: M acting on block coordinates */
    std::optional<zmat> graph;
};

isotropy_type classify_type(submodule const & H, symplectic_module const & M);

/* number of 2x2 matrices over Z/ell^m with det = -1 */
i64 graph_plane_count(i64 ell, unsigned m);

} // namespace isocensus

#endif
