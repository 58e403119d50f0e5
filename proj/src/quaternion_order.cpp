#include <string>

#include "isocensus/endo_counts.hpp"

namespace isocensus {

namespace {

using qvec = std::array<i64, 4>; /* coordinates on 1, i, j, k */

/* product in (a, b); inputs and output carry whatever scale the caller uses */
qvec hamilton(i64 a, i64 b, qvec const & x, qvec const & y)
{
    return {x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
            x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
            x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

/* 16 * nrd of a vector scaled by 4 */
i64 scaled_norm16(i64 a, i64 b, qvec const & v)
{
    return v[0] * v[0] - a * v[1] * v[1] - b * v[2] * v[2] + a * b * v[3] * v[3];
}

using rmat = std::array<std::array<rational, 4>, 4>;

rmat invert(std::array<std::array<i64, 4>, 4> const & cols)
{
    rmat A{}, I{};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) {
            A[i][j] = cols[j][i];
            I[i][j] = i == j ? 1 : 0;
        }
    for (int c = 0; c < 4; c++) {
        int piv = c;
        while (piv < 4 && A[piv][c].numerator() == 0)
            piv++;
        if (piv == 4)
            fail(error_code::invalid_argument, "order basis is degenerate");
        std::swap(A[c], A[piv]);
        std::swap(I[c], I[piv]);
        rational d = A[c][c];
        for (int j = 0; j < 4; j++) {
            A[c][j] /= d;
            I[c][j] /= d;
        }
        for (int r = 0; r < 4; r++) {
            if (r == c || A[r][c].numerator() == 0)
                continue;
            rational f = A[r][c];
            for (int j = 0; j < 4; j++) {
                A[r][j] -= f * A[c][j];
                I[r][j] -= f * I[c][j];
            }
        }
    }
    return I;
}

} // namespace

quaternion_order maximal_order(i64 p)
{
    quaternion_order O;
    O.p = p;
    if (p == 2) {
        /* Hurwitz order in (-1, -1) */
        O.a = -1;
        O.b = -1;
        O.basis = {{{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {2, 2, 2, 2}}};
    } else if (is_prime(p) && p % 4 == 3) {
        /* (-1, -p): 1, i, (1 + j)/2, (i + k)/2 */
        O.a = -1;
        O.b = -p;
        O.basis = {{{4, 0, 0, 0}, {0, 4, 0, 0}, {2, 0, 2, 0}, {0, 2, 0, 2}}};
    } else if (is_prime(p) && p % 8 == 5) {
        /* (-2, -p): 1, (1 + j + k)/2, (i + 2j + k)/4, k */
        O.a = -2;
        O.b = -p;
        O.basis = {{{4, 0, 0, 0}, {2, 0, 2, 2}, {0, 1, 2, 1}, {0, 0, 0, 4}}};
    } else {
        fail(error_code::invalid_argument,
             "no built-in maximal order for p = " + std::to_string(p));
    }

    rmat inv = invert(O.basis);
    for (int r = 0; r < 4; r++)
        for (int s = 0; s < 4; s++) {
            qvec prod = hamilton(O.a, O.b, O.basis[r], O.basis[s]); /* scale 16 */
            for (int t = 0; t < 4; t++) {
                rational c = 0;
                for (int u = 0; u < 4; u++)
                    c += inv[t][u] * rational(prod[u], 4);
                if (c.denominator() != 1)
                    fail(error_code::invalid_argument, "order basis is not closed under products");
                O.mult[r][s][t] = c.numerator();
            }
        }

    O.norm_form.name = "maximal_p" + std::to_string(p);
    for (int r = 0; r < 4; r++)
        for (int s = 0; s < 4; s++) {
            qvec sum;
            for (int u = 0; u < 4; u++)
                sum[u] = O.basis[r][u] + O.basis[s][u];
            i64 v = scaled_norm16(O.a, O.b, sum) - scaled_norm16(O.a, O.b, O.basis[r]) -
                    scaled_norm16(O.a, O.b, O.basis[s]);
            if (v % 16)
                fail(error_code::invalid_argument, "norm form is not integral");
            O.norm_form.gram[r][s] = v / 16;
        }
    if (O.norm_form.det() != p * p)
        fail(error_code::invalid_argument, "order is not maximal");
    return O;
}

qelem qmul(quaternion_order const & O, qelem const & x, qelem const & y)
{
    qelem z{0, 0, 0, 0};
    for (int r = 0; r < 4; r++) {
        if (x[r] == 0)
            continue;
        for (int s = 0; s < 4; s++) {
            if (y[s] == 0)
                continue;
            for (int t = 0; t < 4; t++)
                z[t] += x[r] * y[s] * O.mult[r][s][t];
        }
    }
    return z;
}

i64 qnorm(quaternion_order const & O, qelem const & x)
{
    return O.norm_form.value(x);
}

i64 qtrace(quaternion_order const & O, qelem const & x)
{
    /* trd(b_r) = 2 * (scaled real part) / 4 */
    i64 s = 0;
    for (int r = 0; r < 4; r++)
        s += x[r] * O.basis[r][0];
    return s / 2;
}

zmat left_regular(quaternion_order const & O, qelem const & x)
{
    zmat L(4, 4);
    for (int s = 0; s < 4; s++) {
        qelem e{0, 0, 0, 0};
        e[s] = 1;
        qelem c = qmul(O, x, e);
        for (int t = 0; t < 4; t++)
            L(t, s) = c[t];
    }
    return L;
}

} // namespace isocensus
