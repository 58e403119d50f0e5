#ifndef ISOCENSUS_ENDO_COUNTS_HPP
#define ISOCENSUS_ENDO_COUNTS_HPP

#include <array>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "isocensus/arith.hpp"
#include "isocensus/zmod.hpp"

namespace isocensus {

using rational = boost::rational<i64>;

/* ---------- imaginary quadratic orders ---------- */

enum class splitting { split, inert, ramified };
std::string_view to_string(splitting s);

splitting splitting_type(i64 D, i64 ell);

struct quadratic_order {
    i64 disc = 0;
    i64 fundamental_disc = 0;
    i64 conductor = 1;
};

quadratic_order make_quadratic_order(i64 D);

/* number of units: 6, 4 or 2 */
int unit_count(i64 D);

struct profile_entry {
    i64 prime;
    int exponent;
    splitting tag;
};
std::vector<profile_entry> factorization_profile(i64 D, i64 d);

/* ideals of norm d (unit normalization: elements = ideals * units when the
 * class number is one) */
i64 count_norm_d(i64 D, i64 d);
/* primitive ideals of norm d, i.e. cyclic quotient */
i64 count_cyclic_norm_d(i64 D, i64 d);

/* norm of x + y w with w = (D + sqrt D)/2 */
i64 quadratic_norm(i64 D, i64 x, i64 y);

/* all (x, y) with quadratic_norm(D, x, y) = d, sorted */
std::vector<std::array<i64, 2>> elements_of_norm(i64 D, i64 d);

struct binary_form {
    i64 a, b, c;
    bool operator==(binary_form const &) const = default;
};

/* reduced primitive positive definite forms of discriminant D */
std::vector<binary_form> reduced_forms(i64 D);
i64 class_number(i64 D);

/* sum of h(D/f^2) over the orders containing the order of discriminant D,
 * unweighted (number of F_q-classes per ordinary trace) */
i64 kronecker_class_number(i64 D);
/* same sum weighted by 2/w, the Hurwitz class number H(|D|) */
rational hurwitz_class_number(i64 D);

/* cyclic subgroups of order ell^m in (Z/ell^m)^2 */
i64 cyclic_subgroup_count(i64 ell, unsigned m);

/* ---------- quaternary forms ---------- */

inline constexpr i64 default_representation_limit = 10000;

/* N(x) = x^T G x / 2 with G even on the diagonal */
struct quaternary_form {
    std::string name;
    std::array<std::array<i64, 4>, 4> gram{};

    i64 det() const;
    i64 value(std::array<i64, 4> const & x) const;
};

quaternary_form four_squares_form();
quaternary_form hurwitz_p2_form();
quaternary_form maximal_p3_form();
/* "four_squares", "hurwitz_p2", "maximal_p3" */
quaternary_form form_by_name(std::string const & name);

/* exact lower bound 2^-s k <= smallest eigenvalue of the Gram matrix */
rational min_eigenvalue_lower_bound(quaternary_form const & f);

i64 count_representations(quaternary_form const & f, i64 n,
                          i64 limit = default_representation_limit);
std::vector<std::array<i64, 4>> representations(quaternary_form const & f, i64 n,
                                                i64 limit = default_representation_limit);

/* ---------- quaternion orders ---------- */

/* A maximal order in the quaternion algebra (a, b) ramified at p and
 * infinity.  Basis elements are stored as coordinates on 1, i, j, k scaled
 * by 4. */
struct quaternion_order {
    i64 p = 0;
    i64 a = 0, b = 0;
    std::array<std::array<i64, 4>, 4> basis{};
    /* mult[r][s] = coordinates of basis[r] * basis[s] on the basis */
    std::array<std::array<std::array<i64, 4>, 4>, 4> mult{};
    quaternary_form norm_form;
};

/* p = 2, p = 3 mod 4 and p = 5 mod 8 are supported */
quaternion_order maximal_order(i64 p);

using qelem = std::array<i64, 4>; /* coordinates on the order basis */

qelem qmul(quaternion_order const & O, qelem const & x, qelem const & y);
i64 qnorm(quaternion_order const & O, qelem const & x);
i64 qtrace(quaternion_order const & O, qelem const & x);
/* integer matrix of y -> x y on the order basis */
zmat left_regular(quaternion_order const & O, qelem const & x);

} // namespace isocensus

#endif
