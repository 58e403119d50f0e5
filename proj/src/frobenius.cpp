#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "isocensus/endo_counts.hpp"
#include "isocensus/frobenius.hpp"
#include "isocensus/symplectic.hpp"

namespace isocensus {

std::string_view to_string(frobenius_tag t)
{
    switch (t) {
    case frobenius_tag::irreducible: return "Irreducible";
    case frobenius_tag::distinct_eigen: return "DistinctEigen";
    case frobenius_tag::scalar: return "Scalar";
    case frobenius_tag::congruent_eigen: return "CongruentEigen";
    case frobenius_tag::non_semisimple: return "NonSemisimple";
    }
    return "unknown";
}

std::string_view case_label(frobenius_tag t)
{
    switch (t) {
    case frobenius_tag::irreducible: return "a";
    case frobenius_tag::distinct_eigen: return "b1";
    case frobenius_tag::scalar: return "b2";
    case frobenius_tag::congruent_eigen: return "b3";
    case frobenius_tag::non_semisimple: return "ns";
    }
    return "?";
}

frobenius_matrix companion_matrix(frobenius_data const & fd, i64 ell, unsigned m)
{
    zmod_ring R(ell, m);
    zmat A(2, 2);
    A(0, 1) = R.red(-powmod(fd.q, fd.n, R.n));
    A(1, 0) = R.red(1);
    A(1, 1) = R.red(fd.t_n);
    return {ell, m, A};
}

i64 frobenius_field_disc(frobenius_data const & fd)
{
    i64 d = fd.t * fd.t - 4 * fd.q;
    if (d == 0)
        fail(error_code::zero_discriminant, "Frobenius discriminant vanishes");
    return fundamental_part(d).first;
}

frobenius_matrix order_model_matrix(frobenius_data const & fd, i64 ell, unsigned m,
                                    i64 D_order)
{
    if (fd.delta_n == 0)
        fail(error_code::zero_discriminant, "pi^n is an integer");
    i64 D = D_order ? D_order : frobenius_field_disc(fd);
    if (D >= 0 || !is_discriminant(D))
        fail(error_code::invalid_argument, "order discriminant must be negative and 0,1 mod 4");
    if (fd.delta_n % D != 0 || !is_square(fd.delta_n / D))
        fail(error_code::invalid_argument, "the order does not contain pi^n");
    i64 g = isqrt(fd.delta_n / D);
    /* pi^n = c + g w, trace 2c + gD */
    i64 c = (fd.t_n - g * D) / 2;
    i64 nw = (D * D - D) / 4;
    zmod_ring R(ell, m);
    zmat A(2, 2);
    A(0, 0) = R.red(c);
    A(0, 1) = R.red(-mulmod(g, nw, R.n));
    A(1, 0) = R.red(g);
    A(1, 1) = R.red(c + mulmod(g, D, R.n));
    return {ell, m, A};
}

frobenius_matrix explicit_frobenius_matrix(elliptic_curve const & E, unsigned n, i64 ell,
                                           unsigned m, u64 bound)
{
    if (E.field->characteristic() == ell)
        fail(error_code::invalid_argument, "ell must differ from the characteristic");
    auto tf = full_torsion(E, ell, m, bound);
    auto basis = torsion_basis(tf.curve, tf.torsion, ell, m);
    i64 N = ipow(ell, m);
    std::map<curve_point, std::pair<i64, i64>> coords;
    curve_point row;
    for (i64 a = 0; a < N; a++) {
        curve_point P = row;
        for (i64 b = 0; b < N; b++) {
            coords[P] = {a, b};
            P = tf.curve.add(P, basis[1]);
        }
        row = tf.curve.add(row, basis[0]);
    }
    unsigned power = E.field->degree() * n;
    zmat A(2, 2);
    for (int col = 0; col < 2; col++) {
        auto img = frobenius_map(tf.curve, basis[col], power);
        auto it = coords.find(img);
        if (it == coords.end())
            fail(error_code::torsion_not_found, "Frobenius image outside the torsion basis");
        A(0, col) = it->second.first;
        A(1, col) = it->second.second;
    }
    return {ell, m, A};
}

unsigned matrix_scalar_level(zmat const & A, zmod_ring const & R)
{
    return std::min({R.val(A(0, 1)), R.val(A(1, 0)), R.val(A(0, 0) - A(1, 1))});
}

namespace {

i64 eval_quad(i64 x, i64 tr, i64 det, i64 n)
{
    return mod(mulmod(x, x, n) - mulmod(tr, x, n) + det, n);
}

/* Hensel lift of a simple root of x^2 - tr x + det from mod ell to mod n */
i64 hensel(i64 x, i64 tr, i64 det, i64 ell, i64 n)
{
    for (i64 k = ell; k < n;) {
        k = std::min<i64>(k * k, n);
        i64 fx = eval_quad(x, tr, det, k);
        i64 dfx = mod(2 * x - tr, k);
        x = mod(x - mulmod(fx, invmod(dfx, k), k), k);
    }
    return mod(x, n);
}

} // namespace

frobenius_class classify(frobenius_matrix const & fm)
{
    zmat const & A = fm.entries;
    if (A.rows != 2 || A.cols != 2)
        fail(error_code::invalid_argument, "classification needs a 2x2 matrix");
    zmod_ring R(fm.ell, fm.m);
    frobenius_class c;
    unsigned s = matrix_scalar_level(A, R);
    c.scalar_level = s;
    i64 l0 = R.red(A(0, 0));
    if (s >= fm.m) {
        c.tag = frobenius_tag::scalar;
        c.lambda = c.mu = l0;
        c.r = fm.m;
        return c;
    }
    /* B = (A - l0 I) / ell^s, defined mod ell^(m-s) */
    i64 ls = ipow(fm.ell, s);
    i64 nb = R.n / ls;
    i64 b01 = R.red(A(0, 1)) / ls, b10 = R.red(A(1, 0)) / ls;
    i64 b11 = R.red(A(1, 1) - A(0, 0)) / ls;
    i64 tr = mod(b11, nb);
    i64 det = mod(-mulmod(b01, b10, nb), nb);
    std::vector<i64> roots;
    for (i64 x = 0; x < fm.ell; x++)
        if (eval_quad(x, tr, det, fm.ell) == 0)
            roots.push_back(x);
    c.r = s;
    if (roots.empty()) {
        c.tag = s == 0 ? frobenius_tag::irreducible : frobenius_tag::congruent_eigen;
        c.rational_eigenvalues = false;
        if (s > 0)
            c.lambda = c.mu = mod(l0, ls);
        return c;
    }
    bool double_root = roots.size() == 1 || mod(2 * roots[0] - tr, fm.ell) == 0;
    if (double_root) {
        c.tag = frobenius_tag::non_semisimple;
        c.lambda = c.mu = mod(l0, ls);
        return c;
    }
    std::vector<i64> ev;
    for (i64 x : roots) {
        i64 beta = hensel(x, tr, det, fm.ell, nb);
        ev.push_back(R.red(l0 + ls * beta));
    }
    std::sort(ev.begin(), ev.end());
    c.lambda = ev[0];
    c.mu = ev[1];
    c.tag = s == 0 ? frobenius_tag::distinct_eigen : frobenius_tag::congruent_eigen;
    return c;
}

unsigned discriminant_level(frobenius_data const & fd, i64 ell)
{
    if (fd.delta_n == 0)
        fail(error_code::zero_discriminant, "discriminant of pi^n vanishes");
    return static_cast<unsigned>(valuation(fd.delta_n, ell) / 2);
}

unsigned scalar_level(frobenius_data const & fd, i64 ell)
{
    unsigned s = discriminant_level(fd, ell);
    if (frobenius_field_disc(fd) % ell == 0)
        fail(error_code::ramified_prime,
             std::to_string(ell) + " ramifies in the Frobenius field");
    return s;
}

std::vector<submodule> stable_cyclic_subgroups(frobenius_matrix const & fm, unsigned j)
{
    std::vector<submodule> out;
    for (auto & H : cyclic_subgroups(fm.ell, fm.m, 2, j)) {
        bool stable = true;
        for (auto const & r : H.rows())
            if (!H.contains(mat_apply(fm.entries, r, H.ring().n))) {
                stable = false;
                break;
            }
        if (stable)
            out.push_back(std::move(H));
    }
    return out;
}

int horizontal_count(frobenius_class const & c)
{
    switch (c.tag) {
    case frobenius_tag::irreducible: return 0;
    case frobenius_tag::scalar: return 1;
    case frobenius_tag::distinct_eigen: return 2;
    case frobenius_tag::congruent_eigen: return c.rational_eigenvalues ? 2 : 0;
    case frobenius_tag::non_semisimple: break;
    }
    fail(error_code::invalid_argument, "no horizontal count for a non-semisimple action");
}

i64 unramified_part(frobenius_data const & fd, i64 disc_K)
{
    if (fd.delta_n == 0)
        fail(error_code::zero_discriminant, "discriminant of pi^n vanishes");
    i64 P = 1;
    for (auto [l, e] : factor(fd.delta_n)) {
        if (disc_K % l == 0)
            continue;
        P *= ipow(l, static_cast<unsigned>(e / 2));
    }
    return P;
}

std::string_view to_string(n_filter f)
{
    switch (f) {
    case n_filter::coprime: return "coprime";
    case n_filter::non_coprime: return "non-coprime";
    case n_filter::all: return "all";
    }
    return "?";
}

n_filter parse_n_filter(std::string_view s)
{
    if (s == "coprime")
        return n_filter::coprime;
    if (s == "non-coprime")
        return n_filter::non_coprime;
    if (s == "all")
        return n_filter::all;
    fail(error_code::invalid_argument, "unknown n-filter mode: " + std::string(s));
}

bool passes_filter(unsigned n, i64 disc_K, n_filter mode)
{
    if (mode == n_filter::all)
        return true;
    for (auto [l, e] : factor(disc_K)) {
        bool coprime = std::gcd(static_cast<i64>(n), l) == 1;
        if (mode == n_filter::coprime && !coprime)
            return false;
        if (mode == n_filter::non_coprime && coprime)
            return false;
    }
    return true;
}

std::vector<growth_row> ramified_growth_report(i64 t, i64 q, i64 disc_K, unsigned n_from,
                                               unsigned n_to, n_filter mode)
{
    std::vector<growth_row> out;
    if (n_from > n_to)
        return out;
    for (auto [l, e] : factor(disc_K)) {
        for (unsigned n = n_from; n <= n_to; n++) {
            if (!passes_filter(n, disc_K, mode))
                continue;
            auto fd = make_frobenius_data(t, q, n);
            if (fd.delta_n == 0)
                fail(error_code::zero_discriminant, "discriminant of pi^n vanishes");
            out.push_back({l, n, valuation(fd.delta_n, l)});
        }
    }
    return out;
}

} // namespace isocensus
