#ifndef ISOCENSUS_CENSUS_HPP
#define ISOCENSUS_CENSUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isocensus/endo_counts.hpp"
#include "isocensus/ff_curves.hpp"
#include "isocensus/frobenius.hpp"
#include "isocensus/symplectic.hpp"
#include "isocensus/zmod.hpp"

namespace isocensus {

/* ---- endomorphism action on torsion ---------------------------------- */

/* End(E) x End(E_ss) acting on (Z/ell^M)^4, or End(E) alone on
 * (Z/ell^M)^2.  The ordinary factor is the quadratic order of
 * discriminant disc in the basis (1, w); the supersingular factor is a
 * maximal quaternion order acting on a rank 2 left ideal mod ell^M. */
struct endo_action_ring {
    i64 ell = 2;
    unsigned M = 1;
    zmod_ring ring;
    bool trivial = false;
    i64 disc = 0;
    zmat omega;
    std::optional<quaternion_order> ss;
    std::array<zmat, 4> ss_basis; /* action of each order basis element */
    /* Frobenius of E_ss over the working field; elements of the order must
     * commute with it to be defined there */
    std::optional<qelem> ss_frobenius;

    unsigned rank() const { return ss ? 4 : 2; }
};

endo_action_ring make_ordinary_ring(i64 disc, i64 ell, unsigned M);
endo_action_ring make_surface_ring(i64 disc, i64 p, i64 ell, unsigned M);
/* identity only; no merging */
endo_action_ring make_trivial_ring(i64 ell, unsigned M, unsigned rank);

zmat ordinary_action(endo_action_ring const & R, i64 x, i64 y);
zmat ss_action(endo_action_ring const & R, qelem const & b);
/* element of O_ss of norm q and trace t, the first one in enumeration order */
qelem ss_frobenius_element(quaternion_order const & O, i64 q, i64 t);
qelem qpow(quaternion_order const & O, qelem const & x, unsigned n);

/* primitive elements of norm ell^j; with reduced, one per unit orbit */
std::vector<std::array<i64, 2>> ordinary_elements(i64 disc, i64 ell, unsigned j, bool reduced);
std::vector<qelem> ss_elements(quaternion_order const & O, i64 ell, unsigned j, bool reduced);

/* ---- Waterhouse search ------------------------------------------------- */

enum class template_mode { standard, full };
std::string_view to_string(template_mode t);
template_mode parse_template_mode(std::string_view s);

/* rho = (ell^c_o a, ell^c_s b), a, b primitive of norms ell^j_o, ell^j_s,
 * tested against N = ell^k */
struct template_entry {
    unsigned k;
    unsigned c_o, j_o, c_s, j_s;
};

struct search_space {
    unsigned m = 1;
    template_mode mode = template_mode::standard;
    /* cap on every element list; truncation marks the result budget limited */
    std::size_t budget = 4096;
};

std::vector<template_entry> make_templates(search_space const & S, bool surface);

struct waterhouse_witness {
    unsigned k = 0;
    template_entry shape{};
    std::array<i64, 2> ord{1, 0};
    qelem ss{};
    zmat rho;
};

struct waterhouse_result {
    bool equivalent = false;
    std::optional<waterhouse_witness> witness;
};

/* H1, H2 at level S.m inside (Z/ell^m)^rank.  Throws budget_exhausted when
 * no witness is found and some element list was truncated. */
waterhouse_result waterhouse_equivalent(submodule const & H1, submodule const & H2,
                                        endo_action_ring const & R, search_space const & S);

struct closure_result {
    std::vector<std::size_t> class_of; /* class index, numbered by first member */
    std::size_t classes = 0;
    bool budget_limited = false;
};

/* union-find closure of the relation over a sorted list of subgroups */
closure_result waterhouse_closure(std::vector<submodule> const & planes,
                                  endo_action_ring const & R, search_space const & S);

/* ---- reports ----------------------------------------------------------- */

struct exponent_value {
    i64 num = 0;
    i64 den = 1;
    i64 precision = 1000000; /* den used for the approximation */
    bool operator==(exponent_value const &) const = default;
};

exponent_value approximate_exponent(double x);

struct census_report {
    std::string kind; /* "surface" or "ec" */
    i64 q = 0;
    unsigned n = 0;
    i64 ell = 0;
    unsigned m = 0;
    i64 t = 0;
    i64 t_n = 0;
    i64 count = 0;
    i64 stable = 0;
    i64 type1 = 0;
    i64 type2 = 0;
    i64 N0 = 0;
    i64 N1 = 0;
    i64 N2 = 0;
    i64 predicted = 0;
    exponent_value exponent;
    std::string verdict;
    bool budget_limited = false;
    std::map<std::string, i64> details;
    std::map<std::string, bool> checks;

    bool operator==(census_report const &) const = default;
};

struct surface_params {
    i64 q = 5;
    i64 t = 3;
    i64 t_ss = 0;
    unsigned n = 12;
    i64 ell = 3;
    unsigned m = 1;
    n_filter filter = n_filter::coprime;
    search_space space;
    bool trivial_ring = false;
    i64 bracket_n1 = 4;
    i64 bracket_n2 = 16;
    /* ordinary order discriminant; 0 selects the maximal order */
    i64 disc = 0;
};

census_report surface_census(surface_params const & P);

/* Frobenius of E x E_ss over F_(q^n) on (Z/ell^M)^4; the supersingular
 * block is R.ss_frobenius */
zmat surface_frobenius(endo_action_ring const & R, frobenius_data const & fd);

struct ec_class {
    i64 a, b; /* field indices of the smallest representative */
    i64 trace;
    i64 aut; /* |Aut| over the field */
};

/* all isomorphism classes of curves over F_(q^n), ordered by (a, b) */
std::vector<ec_class> curve_classes(i64 q, unsigned n, u64 bound = default_enumeration_bound);

/* geometric isogeny: equal traces after base change to degree 12 */
bool geometrically_isogenous(i64 t1, i64 t2, i64 Q);

struct ec_params {
    i64 q = 5;
    unsigned n = 2;
    i64 a = -1, b = -1; /* reference curve over F_q; negative selects by trace */
    std::optional<i64> t;
    double tau = 0.25;
    u64 bound = default_enumeration_bound;
};

census_report ec_census(ec_params const & P);

struct prediction {
    i64 delta_n;
    i64 disc_K;
    i64 disc_order;
    i64 unramified;
    i64 class_number;
    i64 predicted;
    i64 sqrt_delta;
};

prediction predicted_ec_size(frobenius_data const & fd, i64 disc_K = 0, i64 disc_order = 0);

struct deuring_row {
    i64 t;
    i64 classes;
    rational weighted; /* sum of 2 / |Aut| */
    rational hurwitz;
    i64 kronecker; /* sum of h over orders containing Z[pi] */
};

std::vector<deuring_row> deuring_table(i64 q, u64 bound = default_enumeration_bound);

/* ---- verdicts ---------------------------------------------------------- */

rational conjectured_exponent(std::string_view stratum);

struct verdict_record {
    std::string verdict; /* PASS or INCONCLUSIVE */
    std::string stratum;
    rational conjectured;
    exponent_value exponent;
    exponent_value band_lo, band_hi;
    std::string reason;
};

verdict_record theorem_verdict(census_report const & r, double tau = 0.25);

} // namespace isocensus

#endif
