#ifndef ISOCENSUS_FROBENIUS_HPP
#define ISOCENSUS_FROBENIUS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "isocensus/ff_curves.hpp"
#include "isocensus/zmod.hpp"

namespace isocensus {

struct frobenius_matrix {
    i64 ell = 2;
    unsigned m = 1;
    zmat entries; /* 2x2 (or 4x4 for the surface) over Z/ell^m */
};

/* [[0, -q^n], [1, t_n]] */
frobenius_matrix companion_matrix(frobenius_data const & fd, i64 ell, unsigned m);

/* pi^n acting on the order of discriminant D_order (default: the maximal
 * order of Q(pi)) with basis (1, w), w = (D + sqrt D)/2.  The order must
 * contain pi^n. */
frobenius_matrix order_model_matrix(frobenius_data const & fd, i64 ell, unsigned m,
                                    i64 D_order = 0);

/* q^n-power map on an explicit basis of E[ell^m]; E is defined over F_q */
frobenius_matrix explicit_frobenius_matrix(elliptic_curve const & E, unsigned n, i64 ell,
                                           unsigned m, u64 bound = default_enumeration_bound);

/* fundamental discriminant of Q(pi) */
i64 frobenius_field_disc(frobenius_data const & fd);

enum class frobenius_tag { irreducible, distinct_eigen, scalar, congruent_eigen, non_semisimple };
std::string_view to_string(frobenius_tag t);
/* case labels: a, b1, b2, b3, ns */
std::string_view case_label(frobenius_tag t);

struct frobenius_class {
    frobenius_tag tag = frobenius_tag::irreducible;
    /* eigenvalues mod ell^m for b1/b2 and rational b3; for the other cases
     * lambda holds the common residue mod ell^r */
    std::optional<i64> lambda, mu;
    unsigned r = 0;
    bool rational_eigenvalues = true;
    /* largest s with the matrix scalar mod ell^s */
    unsigned scalar_level = 0;
};

frobenius_class classify(frobenius_matrix const & fm);

/* largest s with fm = lambda I mod ell^s */
unsigned matrix_scalar_level(zmat const & A, zmod_ring const & R);

/* floor(v_ell(delta_n) / 2), no ramification check */
unsigned discriminant_level(frobenius_data const & fd, i64 ell);
/* discriminant_level for ell not dividing the field discriminant */
unsigned scalar_level(frobenius_data const & fd, i64 ell);

std::vector<submodule> stable_cyclic_subgroups(frobenius_matrix const & fm, unsigned j);

int horizontal_count(frobenius_class const & c);

i64 unramified_part(frobenius_data const & fd, i64 disc_K);

enum class n_filter { coprime, non_coprime, all };
std::string_view to_string(n_filter f);
n_filter parse_n_filter(std::string_view s);
/* coprime: gcd(n, l) = 1 for every l | disc_K; non_coprime: l | n for every
 * l | disc_K */
bool passes_filter(unsigned n, i64 disc_K, n_filter mode);

struct growth_row {
    i64 ell;
    unsigned n;
    int valuation;
};

std::vector<growth_row> ramified_growth_report(i64 t, i64 q, i64 disc_K, unsigned n_from,
                                               unsigned n_to, n_filter mode);

} // namespace isocensus

#endif
