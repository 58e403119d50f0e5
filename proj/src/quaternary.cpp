#include <algorithm>
#include <string>

#include "isocensus/endo_counts.hpp"
#include "isocensus/parallel.hpp"

namespace isocensus {

i64 quaternary_form::det() const
{
    /* Bareiss on a copy */
    i128 m[4][4];
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            m[i][j] = gram[i][j];
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < 3; k++) {
        if (m[k][k] == 0) {
            int r = k + 1;
            while (r < 4 && m[r][k] == 0)
                r++;
            if (r == 4)
                return 0;
            for (int j = 0; j < 4; j++)
                std::swap(m[k][j], m[r][j]);
            sign = -sign;
        }
        for (int i = k + 1; i < 4; i++)
            for (int j = k + 1; j < 4; j++)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return static_cast<i64>(sign * m[3][3]);
}

i64 quaternary_form::value(std::array<i64, 4> const & x) const
{
    i128 s = 0;
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            s += (i128)x[i] * gram[i][j] * x[j];
    return static_cast<i64>(s / 2);
}

quaternary_form four_squares_form()
{
    quaternary_form f;
    f.name = "four_squares";
    for (int i = 0; i < 4; i++)
        f.gram[i][i] = 2;
    return f;
}

quaternary_form hurwitz_p2_form()
{
    auto f = maximal_order(2).norm_form;
    f.name = "hurwitz_p2";
    return f;
}

quaternary_form maximal_p3_form()
{
    auto f = maximal_order(3).norm_form;
    f.name = "maximal_p3";
    return f;
}

quaternary_form form_by_name(std::string const & name)
{
    if (name == "four_squares")
        return four_squares_form();
    if (name == "hurwitz_p2")
        return hurwitz_p2_form();
    if (name == "maximal_p3")
        return maximal_p3_form();
    fail(error_code::invalid_argument, "unknown form name: " + name);
}

namespace {

/* all leading principal minors of (scale G - k I) positive */
bool shifted_positive_definite(quaternary_form const & f, i64 scale, i64 k)
{
    for (int size = 1; size <= 4; size++) {
        i128 m[4][4];
        for (int i = 0; i < size; i++)
            for (int j = 0; j < size; j++)
                m[i][j] = (i128)scale * f.gram[i][j] - (i == j ? k : 0);
        i128 prev = 1;
        for (int t = 0; t + 1 < size; t++) {
            if (m[t][t] <= 0)
                return false;
            for (int i = t + 1; i < size; i++)
                for (int j = t + 1; j < size; j++)
                    m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) / prev;
            prev = m[t][t];
        }
        if (m[size - 1][size - 1] <= 0)
            return false;
    }
    return true;
}

constexpr int eigen_bits = 12;

} // namespace

rational min_eigenvalue_lower_bound(quaternary_form const & f)
{
    i64 scale = i64(1) << eigen_bits;
    if (!shifted_positive_definite(f, scale, 0))
        fail(error_code::invalid_argument, "form is not positive definite");
    i64 lo = 0, hi = scale * f.gram[0][0];
    /* invariant: lo is positive definite, hi is not */
    while (hi - lo > 1) {
        i64 mid = lo + (hi - lo) / 2;
        if (shifted_positive_definite(f, scale, mid))
            lo = mid;
        else
            hi = mid;
    }
    if (lo == 0)
        fail(error_code::invalid_argument, "smallest eigenvalue below resolution");
    return rational(lo, scale);
}

std::vector<std::array<i64, 4>> representations(quaternary_form const & f, i64 n, i64 limit)
{
    if (n < 0)
        fail(error_code::invalid_argument, "n must be non-negative");
    if (n > limit)
        fail(error_code::bound_exceeded,
             "n = " + std::to_string(n) + " exceeds the representation limit " +
                 std::to_string(limit));
    rational lam = min_eigenvalue_lower_bound(f);
    /* |x|^2 <= 2n / lambda */
    i64 R = isqrt(2 * n * lam.denominator() / lam.numerator());
    i64 g33 = f.gram[3][3];
    std::size_t width = static_cast<std::size_t>(2 * R + 1);
    auto parts = parallel_chunks<std::vector<std::array<i64, 4>>>(
        width, [&](std::size_t lo, std::size_t hi) {
            std::vector<std::array<i64, 4>> out;
            for (std::size_t i0 = lo; i0 < hi; i0++) {
                i64 x0 = static_cast<i64>(i0) - R;
                for (i64 x1 = -R; x1 <= R; x1++)
                    for (i64 x2 = -R; x2 <= R; x2++) {
                        i64 x[3] = {x0, x1, x2};
                        i64 B = 0, C = 0;
                        for (int i = 0; i < 3; i++) {
                            B += f.gram[3][i] * x[i];
                            for (int j = 0; j < 3; j++)
                                C += x[i] * f.gram[i][j] * x[j];
                        }
                        /* g33 y^2 + 2 B y + C - 2n = 0 */
                        i64 disc = B * B - g33 * (C - 2 * n);
                        if (disc < 0 || !is_square(disc))
                            continue;
                        i64 s = isqrt(disc);
                        for (i64 num : {-B - s, -B + s}) {
                            if (num % g33 == 0)
                                out.push_back({x0, x1, x2, num / g33});
                            if (s == 0)
                                break;
                        }
                    }
            }
            return out;
        });
    std::vector<std::array<i64, 4>> all;
    for (auto & p : parts)
        all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
}

i64 count_representations(quaternary_form const & f, i64 n, i64 limit)
{
    return static_cast<i64>(representations(f, n, limit).size());
}

} // namespace isocensus
