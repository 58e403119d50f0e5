#include <algorithm>
#include <numeric>
#include <set>

#include "isocensus/endo_counts.hpp"

namespace isocensus {

std::string_view to_string(splitting s)
{
    switch (s) {
    case splitting::split: return "split";
    case splitting::inert: return "inert";
    case splitting::ramified: return "ramified";
    }
    return "unknown";
}

namespace {

void check_disc(i64 D)
{
    if (D >= 0)
        fail(error_code::invalid_argument, "discriminant must be negative");
    if (!is_discriminant(D))
        fail(error_code::invalid_argument, "discriminant must be 0 or 1 mod 4");
}

} // namespace

splitting splitting_type(i64 D, i64 ell)
{
    if (!is_prime(ell))
        fail(error_code::invalid_argument, "ell must be prime");
    int k = kronecker(D, ell);
    return k > 0 ? splitting::split : k < 0 ? splitting::inert : splitting::ramified;
}

quadratic_order make_quadratic_order(i64 D)
{
    check_disc(D);
    auto [dk, f] = fundamental_part(D);
    return {D, dk, f};
}

int unit_count(i64 D)
{
    return D == -3 ? 6 : D == -4 ? 4 : 2;
}

std::vector<profile_entry> factorization_profile(i64 D, i64 d)
{
    check_disc(D);
    if (d < 1)
        fail(error_code::invalid_argument, "norm must be positive");
    std::vector<profile_entry> out;
    if (d == 1)
        return out;
    for (auto [l, e] : factor(d))
        out.push_back({l, e, splitting_type(D, l)});
    return out;
}

i64 count_norm_d(i64 D, i64 d)
{
    i64 r = 1;
    for (auto const & pe : factorization_profile(D, d)) {
        switch (pe.tag) {
        case splitting::split: r *= pe.exponent + 1; break;
        case splitting::inert:
            if (pe.exponent % 2)
                return 0;
            break;
        case splitting::ramified: break;
        }
    }
    return r;
}

i64 count_cyclic_norm_d(i64 D, i64 d)
{
    i64 r = 1;
    for (auto const & pe : factorization_profile(D, d)) {
        switch (pe.tag) {
        case splitting::split: r *= 2; break;
        case splitting::inert: return 0;
        case splitting::ramified:
            if (pe.exponent > 1)
                return 0;
            break;
        }
    }
    return r;
}

i64 quadratic_norm(i64 D, i64 x, i64 y)
{
    return x * x + D * x * y + ((D * D - D) / 4) * y * y;
}

std::vector<std::array<i64, 2>> elements_of_norm(i64 D, i64 d)
{
    check_disc(D);
    std::set<std::array<i64, 2>> out;
    if (d < 0)
        return {};
    /* 4N = (2x + Dy)^2 - D y^2 */
    i64 ymax = isqrt(4 * d / (-D));
    for (i64 y = -ymax; y <= ymax; y++) {
        i64 s = 4 * d + D * y * y;
        if (s < 0 || !is_square(s))
            continue;
        i64 r = isqrt(s);
        for (i64 sg : {r, -r}) {
            i64 t = sg - D * y;
            if (t % 2 == 0)
                out.insert({t / 2, y});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<binary_form> reduced_forms(i64 D)
{
    check_disc(D);
    std::vector<binary_form> out;
    for (i64 a = 1; 3 * a * a <= -D; a++) {
        for (i64 b = -a + 1; b <= a; b++) {
            if (mod(b - D, 2) != 0)
                continue;
            i64 num = b * b - D;
            if (num % (4 * a))
                continue;
            i64 c = num / (4 * a);
            if (c < a)
                continue;
            if (b < 0 && a == c)
                continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

i64 class_number(i64 D)
{
    return static_cast<i64>(reduced_forms(D).size());
}

i64 kronecker_class_number(i64 D)
{
    check_disc(D);
    i64 s = 0;
    for (i64 f = 1; f * f <= -D; f++) {
        if (D % (f * f))
            continue;
        i64 Df = D / (f * f);
        if (is_discriminant(Df))
            s += class_number(Df);
    }
    return s;
}

rational hurwitz_class_number(i64 D)
{
    check_disc(D);
    rational s = 0;
    for (i64 f = 1; f * f <= -D; f++) {
        if (D % (f * f))
            continue;
        i64 Df = D / (f * f);
        if (is_discriminant(Df))
            s += rational(2 * class_number(Df), unit_count(Df));
    }
    return s;
}

i64 cyclic_subgroup_count(i64 ell, unsigned m)
{
    if (!is_prime(ell) || m < 1)
        fail(error_code::invalid_argument, "need prime ell and m >= 1");
    return ipow(ell, m - 1) * (ell + 1);
}

} // namespace isocensus
