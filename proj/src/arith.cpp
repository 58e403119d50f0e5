#include "isocensus/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace isocensus {

std::string_view to_string(error_code c)
{
    switch (c) {
    case error_code::invalid_argument: return "invalid_argument";
    case error_code::hasse_violation: return "hasse_violation";
    case error_code::bound_exceeded: return "bound_exceeded";
    case error_code::not_a_subgroup: return "not_a_subgroup";
    case error_code::kernel_order_divisible_by_p: return "kernel_order_divisible_by_p";
    case error_code::torsion_not_found: return "torsion_not_found";
    case error_code::ramified_prime: return "ramified_prime";
    case error_code::zero_discriminant: return "zero_discriminant";
    case error_code::budget_exhausted: return "budget_exhausted";
    case error_code::unknown_stratum: return "unknown_stratum";
    case error_code::io: return "io";
    }
    return "unknown";
}

i64 ipow(i64 b, unsigned e)
{
    i64 r = 1;
    for (unsigned i = 0; i < e; i++) {
        if (__builtin_mul_overflow(r, b, &r))
            fail(error_code::bound_exceeded, "integer overflow in power");
    }
    return r;
}

i64 mod(i64 a, i64 n)
{
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

i64 mulmod(i64 a, i64 b, i64 n)
{
    return mod(static_cast<i64>((i128)a * b % n), n);
}

i64 powmod(i64 b, u64 e, i64 n)
{
    i64 r = 1 % n;
    b = mod(b, n);
    for (; e; e >>= 1) {
        if (e & 1)
            r = mulmod(r, b, n);
        b = mulmod(b, b, n);
    }
    return r;
}

i64 invmod(i64 a, i64 n)
{
    i64 old_r = mod(a, n), r = n;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        fail(error_code::invalid_argument,
             "no inverse of " + std::to_string(a) + " mod " + std::to_string(n));
    return mod(old_s, n);
}

i64 isqrt(i64 n)
{
    if (n < 0)
        fail(error_code::invalid_argument, "isqrt of negative value");
    i64 r = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && (i128)r * r > n)
        r--;
    while ((i128)(r + 1) * (r + 1) <= n)
        r++;
    return r;
}

bool is_square(i64 n)
{
    if (n < 0)
        return false;
    i64 r = isqrt(n);
    return r * r == n;
}

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0)
            return n == d;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    /* deterministic for 64-bit inputs */
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = powmod(a, static_cast<u64>(d), n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

int valuation(i64 n, i64 l)
{
    if (n == 0)
        fail(error_code::invalid_argument, "valuation of zero");
    int v = 0;
    while (n % l == 0) {
        n /= l;
        v++;
    }
    return v;
}

factorization factor(i64 n)
{
    factorization f;
    if (n < 0)
        n = -n;
    if (n == 0)
        fail(error_code::invalid_argument, "factor of zero");
    for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d)
            continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            e++;
        }
        f.emplace_back(d, e);
    }
    if (n > 1)
        f.emplace_back(n, 1);
    return f;
}

i64 divisor_count(i64 n)
{
    i64 r = 1;
    for (auto [p, e] : factor(n))
        r *= e + 1;
    return r;
}

i64 divisor_sum(i64 n)
{
    i64 r = 1;
    for (auto [p, e] : factor(n))
        r *= (ipow(p, e + 1) - 1) / (p - 1);
    return r;
}

int kronecker(i64 a, i64 n)
{
    if (n <= 0)
        fail(error_code::invalid_argument, "kronecker symbol needs n >= 1");
    int r = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0)
            return 0;
        i64 a8 = mod(a, 8);
        if (a8 == 3 || a8 == 5)
            r = -r;
    }
    /* Jacobi symbol for odd n */
    a = mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 n8 = n % 8;
            if (n8 == 3 || n8 == 5)
                r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            r = -r;
        a %= n;
    }
    return n == 1 ? r : 0;
}

bool is_discriminant(i64 d)
{
    i64 r = mod(d, 4);
    return r == 0 || r == 1;
}

std::pair<i64, i64> fundamental_part(i64 d)
{
    if (d == 0)
        fail(error_code::zero_discriminant, "zero discriminant");
    i64 f = 1;
    i64 core = d;
    for (auto [p, e] : factor(d)) {
        for (int i = 0; i + 1 < e; i += 2) {
            i64 c = core / (p * p);
            if (!is_discriminant(c))
                break;
            core = c;
            f *= p;
        }
    }
    return {core, f};
}

i64 floor_div(i64 a, i64 b)
{
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q--;
    return q;
}

} // namespace isocensus
