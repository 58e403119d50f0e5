#include <algorithm>
#include <set>

#include "isocensus/census.hpp"

namespace isocensus {

namespace {

void check_order_disc(i64 D)
{
    if (D >= 0 || !is_discriminant(D))
        fail(error_code::invalid_argument, "order discriminant must be negative and 0,1 mod 4");
}

/* (x1 + y1 w)(x2 + y2 w) with w^2 = D w - N(w) */
std::array<i64, 2> omul(i64 D, std::array<i64, 2> const & u, std::array<i64, 2> const & v)
{
    i64 nw = (D * D - D) / 4;
    return {u[0] * v[0] - nw * u[1] * v[1], u[0] * v[1] + u[1] * v[0] + D * u[1] * v[1]};
}

i64 bilinear(quaternary_form const & f, qelem const & x, qelem const & y, i64 n)
{
    i64 s = 0;
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            s = mod(s + mulmod(mulmod(x[i], f.gram[i][j], n), y[j], n), n);
    return s;
}

/* primitive v with nrd(v) = 0 mod ell^M */
qelem isotropic_vector(quaternion_order const & O, i64 ell, unsigned M)
{
    i64 n = ipow(ell, M);
    qelem v{};
    bool found = false;
    for (i64 idx = 1; idx < ell * ell * ell * ell && !found; idx++) {
        i64 r = idx;
        for (int c = 0; c < 4; c++) {
            v[c] = r % ell;
            r /= ell;
        }
        found = mod(O.norm_form.value(v), ell) == 0;
    }
    if (!found)
        fail(error_code::invalid_argument, "no isotropic vector mod ell");
    for (unsigned s = 1; s < M; s++) {
        i64 ls = ipow(ell, s);
        i64 val = mod(O.norm_form.value(v), ls * ell);
        if (val == 0)
            continue;
        int c = 0;
        qelem e{};
        for (; c < 4; c++) {
            e = {0, 0, 0, 0};
            e[c] = 1;
            if (bilinear(O.norm_form, v, e, ell) != 0)
                break;
        }
        if (c == 4)
            fail(error_code::invalid_argument, "norm form degenerate mod ell");
        i64 b = bilinear(O.norm_form, v, e, ell);
        i64 x = mod(-(val / ls) * invmod(b, ell), ell);
        v[c] = mod(v[c] + x * ls, n);
    }
    return v;
}

} // namespace

endo_action_ring make_ordinary_ring(i64 disc, i64 ell, unsigned M)
{
    check_order_disc(disc);
    if (!is_prime(ell) || M < 1)
        fail(error_code::invalid_argument, "need prime ell and level >= 1");
    endo_action_ring R;
    R.ell = ell;
    R.M = M;
    R.ring = zmod_ring(ell, M);
    R.disc = disc;
    R.omega = zmat(2, 2);
    R.omega(0, 1) = R.ring.red(-mulmod((disc * disc - disc) / 4, 1, R.ring.n));
    R.omega(1, 0) = 1 % R.ring.n;
    R.omega(1, 1) = R.ring.red(disc);
    return R;
}

endo_action_ring make_surface_ring(i64 disc, i64 p, i64 ell, unsigned M)
{
    if (ell == p)
        fail(error_code::invalid_argument, "ell must differ from p");
    endo_action_ring R = make_ordinary_ring(disc, ell, M);
    quaternion_order O = maximal_order(p);
    i64 n = R.ring.n;
    qelem v = isotropic_vector(O, ell, M);

    std::vector<zvec> gens;
    for (int r = 0; r < 4; r++) {
        qelem e{};
        e[r] = 1;
        qelem w = qmul(O, e, v);
        gens.push_back({mod(w[0], n), mod(w[1], n), mod(w[2], n), mod(w[3], n)});
    }
    submodule S(R.ring, 4, gens);
    if (S.rows().size() != 2 || S.shape() != std::vector<unsigned>{M, M} ||
        S.rows()[0][S.pivots()[0]] != 1 || S.rows()[1][S.pivots()[1]] != 1)
        fail(error_code::invalid_argument, "left ideal mod ell^M is not free of rank 2");

    auto coords = [&](qelem const & x) {
        return std::array<i64, 2>{mod(x[S.pivots()[0]], n), mod(x[S.pivots()[1]], n)};
    };
    for (int r = 0; r < 4; r++) {
        qelem e{};
        e[r] = 1;
        zmat A(2, 2);
        for (int col = 0; col < 2; col++) {
            auto const & s = S.rows()[col];
            auto c = coords(qmul(O, e, {s[0], s[1], s[2], s[3]}));
            A(0, col) = c[0];
            A(1, col) = c[1];
        }
        R.ss_basis[r] = A;
    }
    R.ss = O;
    return R;
}

endo_action_ring make_trivial_ring(i64 ell, unsigned M, unsigned rank)
{
    if (rank != 2 && rank != 4)
        fail(error_code::invalid_argument, "rank must be 2 or 4");
    endo_action_ring R;
    R.ell = ell;
    R.M = M;
    R.ring = zmod_ring(ell, M);
    R.trivial = true;
    R.omega = zmat::identity(2);
    if (rank == 4) {
        R.ss = maximal_order(2);
        for (auto & b : R.ss_basis)
            b = zmat::identity(2);
    }
    return R;
}

zmat ordinary_action(endo_action_ring const & R, i64 x, i64 y)
{
    i64 n = R.ring.n;
    return mat_add(mat_scale(zmat::identity(2), mod(x, n), n), mat_scale(R.omega, mod(y, n), n),
                   n);
}

zmat ss_action(endo_action_ring const & R, qelem const & b)
{
    i64 n = R.ring.n;
    zmat A(2, 2);
    for (int r = 0; r < 4; r++)
        A = mat_add(A, mat_scale(R.ss_basis[r], mod(b[r], n), n), n);
    return A;
}

qelem qpow(quaternion_order const & O, qelem const & x, unsigned n)
{
    qelem r{1, 0, 0, 0};
    for (unsigned i = 0; i < n; i++)
        r = qmul(O, r, x);
    return r;
}

qelem ss_frobenius_element(quaternion_order const & O, i64 q, i64 t)
{
    for (auto const & x : representations(O.norm_form, q, std::max<i64>(q, default_representation_limit)))
        if (qtrace(O, x) == t)
            return x;
    fail(error_code::invalid_argument, "no element of the given norm and trace in the order");
}

std::vector<std::array<i64, 2>> ordinary_elements(i64 disc, i64 ell, unsigned j, bool reduced)
{
    auto units = elements_of_norm(disc, 1);
    std::set<std::array<i64, 2>> out;
    for (auto const & a : elements_of_norm(disc, ipow(ell, j))) {
        if (j > 0 && a[0] % ell == 0 && a[1] % ell == 0)
            continue;
        if (!reduced) {
            out.insert(a);
            continue;
        }
        std::array<i64, 2> best = a;
        for (auto const & u : units)
            best = std::min(best, omul(disc, u, a));
        out.insert(best);
    }
    return {out.begin(), out.end()};
}

std::vector<qelem> ss_elements(quaternion_order const & O, i64 ell, unsigned j, bool reduced)
{
    i64 d = ipow(ell, j);
    auto units = representations(O.norm_form, 1);
    std::set<qelem> out;
    for (auto const & b : representations(O.norm_form, d, std::max<i64>(d, default_representation_limit))) {
        if (j > 0 && std::all_of(b.begin(), b.end(), [&](i64 c) { return c % ell == 0; }))
            continue;
        if (!reduced) {
            out.insert(b);
            continue;
        }
        qelem best = b;
        for (auto const & u : units)
            best = std::min(best, qmul(O, u, b));
        out.insert(best);
    }
    return {out.begin(), out.end()};
}

} // namespace isocensus
