#ifndef ISOCENSUS_FF_CURVES_HPP
#define ISOCENSUS_FF_CURVES_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "isocensus/arith.hpp"

namespace isocensus {

inline constexpr u64 default_enumeration_bound = 1000000;

struct prime_power {
    i64 p = 0;
    unsigned k = 0;
    i64 q = 0;

    bool operator==(prime_power const &) const = default;
};

/* q = p^k with p >= 5 */
prime_power make_prime_power(i64 q);

/* GF(p^K) as F_p[x]/(f).  Elements are indices sum c_i p^i of their
 * coefficient vectors, so 0 and 1 are the field's zero and one and the prime
 * field sits at indices [0, p). */
class finite_field
{
  public:
    using elem = std::uint32_t;

    finite_field(i64 p, unsigned degree, u64 bound = default_enumeration_bound);

    i64 characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    u64 order() const { return order_; }
    /* low coefficients c_0..c_{K-1} of the monic modulus */
    std::vector<i64> const & modulus() const { return modulus_; }
    elem generator() const { return exp_[1 % exp_.size()]; }

    elem from_int(i64 v) const { return static_cast<elem>(mod(v, p_)); }
    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    elem pow(elem a, i64 e) const;
    bool is_square(elem a) const { return a == 0 || (log_[a] & 1) == 0; }
    /* a square root when one exists (the one with even discrete log/2) */
    std::optional<elem> sqrt(elem a) const;
    /* a -> a^(p^e) */
    elem frobenius(elem a, u64 e) const;
    u64 log(elem a) const;
    elem exp(u64 e) const { return exp_[e % (order_ - 1)]; }

    std::vector<i64> digits(elem a) const;
    elem from_digits(std::vector<i64> const & d) const;

    /* Table mapping the elements of sub (a field with the same
     * characteristic and degree dividing ours) into this field. */
    std::vector<elem> embedding_from(finite_field const & sub) const;

  private:
    i64 p_;
    unsigned degree_;
    u64 order_;
    std::vector<i64> modulus_;
    std::vector<elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

using field_ptr = std::shared_ptr<finite_field const>;

field_ptr make_field(i64 p, unsigned degree, u64 bound = default_enumeration_bound);

struct curve_point {
    finite_field::elem x = 0, y = 0;
    bool infinity = true;

    bool operator==(curve_point const &) const = default;
    auto operator<=>(curve_point const &) const = default;
};

/* y^2 = x^3 + a x + b over the field it carries. */
struct elliptic_curve {
    field_ptr field;
    finite_field::elem a = 0, b = 0;

    prime_power base() const;
    bool on_curve(curve_point const & P) const;
    curve_point neg(curve_point const & P) const;
    curve_point add(curve_point const & P, curve_point const & Q) const;
    curve_point mul(i64 k, curve_point const & P) const;
    finite_field::elem j_invariant() const;
    /* every affine point plus infinity, in index order; bounded by field order */
    std::vector<curve_point> points() const;
};

/* validates nonsingularity */
elliptic_curve make_curve(field_ptr F, i64 a, i64 b);

elliptic_curve base_change(elliptic_curve const & E, unsigned n,
                           u64 bound = default_enumeration_bound);

/* #E(F_{q^n}) by the x-loop; q^n must stay under bound */
i64 point_count(elliptic_curve const & E, unsigned n = 1,
                u64 bound = default_enumeration_bound);

i64 trace_of_frobenius(elliptic_curve const & E);

struct frobenius_data {
    i64 t = 0;
    i64 q = 0;
    unsigned n = 1;
    i64 t_n = 0;
    i64 delta_n = 0;

    bool operator==(frobenius_data const &) const = default;
};

/* trace of pi^n by the recurrence t_j = t t_{j-1} - q t_{j-2} */
i64 trace_power(i64 t, i64 q, unsigned n);

frobenius_data make_frobenius_data(i64 t, i64 q, unsigned n);

bool is_ordinary(elliptic_curve const & E);
bool is_ordinary(frobenius_data const & fd);

/* point-wise q-power map on coordinates (q = order of the curve's base
 * subfield given by sub_degree over F_p) */
curve_point frobenius_map(elliptic_curve const & E, curve_point const & P,
                          unsigned p_power);

elliptic_curve velu_quotient(elliptic_curve const & E,
                             std::vector<curve_point> const & kernel);

/* the subgroup generated by P */
std::vector<curve_point> cyclic_subgroup(elliptic_curve const & E,
                                         curve_point const & P);

i64 point_order(elliptic_curve const & E, curve_point const & P, i64 multiple);

/* all points killed by N over E's own field */
std::vector<curve_point> torsion_points(elliptic_curve const & E, i64 N);

/* Smallest extension degree e with E[N] fully rational over F_{q^e}.
 * Returns the base-changed curve.  torsion_not_found if none within bound. */
struct torsion_field {
    unsigned degree = 0;
    elliptic_curve curve;
    std::vector<curve_point> torsion;
};
torsion_field full_torsion(elliptic_curve const & E, i64 ell, unsigned m,
                           u64 bound = default_enumeration_bound);

/* basis (P1, P2) of E[ell^m] from its full point list */
std::array<curve_point, 2> torsion_basis(elliptic_curve const & E,
                                         std::vector<curve_point> const & tors,
                                         i64 ell, unsigned m);

/* first (a, b) in index order with the given trace and j not in {0, 1728} */
std::optional<elliptic_curve> find_curve_with_trace(field_ptr F, i64 t);

} // namespace isocensus

#endif
