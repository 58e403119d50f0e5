#include "oracles.hpp"

#include <numeric>

namespace oracle {

using isocensus::mod;

i64 sigma(i64 n)
{
    i64 s = 0;
    for (i64 d = 1; d <= n; d++)
        if (n % d == 0)
            s += d;
    return s;
}

i64 tau(i64 n)
{
    i64 s = 0;
    for (i64 d = 1; d <= n; d++)
        s += n % d == 0;
    return s;
}

i64 det_minus_one(i64 n)
{
    i64 c = 0;
    for (i64 a = 0; a < n; a++)
        for (i64 b = 0; b < n; b++)
            for (i64 x = 0; x < n; x++)
                for (i64 y = 0; y < n; y++)
                    c += mod(a * y - b * x, n) == n - 1;
    return c;
}

i64 norm_elements(i64 D, i64 d)
{
    i64 c = 0;
    i64 nw = (D * D - D) / 4;
    i64 r = 2 * d + 10;
    for (i64 x = -r; x <= r; x++)
        for (i64 y = -r; y <= r; y++)
            c += x * x + D * x * y + nw * y * y == d;
    return c;
}

i64 primitive_reduced_forms(i64 D)
{
    i64 c = 0;
    for (i64 a = 1; 3 * a * a <= -D; a++)
        for (i64 b = -a + 1; b <= a; b++) {
            if ((b * b - D) % (4 * a))
                continue;
            i64 cc = (b * b - D) / (4 * a);
            if (cc < a || (cc == a && b < 0))
                continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), cc) != 1)
                continue;
            c++;
        }
    return c;
}

rational hurwitz(i64 N)
{
    rational h(0);
    for (i64 a = 1; 3 * a * a <= N; a++)
        for (i64 b = -a + 1; b <= a; b++) {
            if ((b * b + N) % (4 * a))
                continue;
            i64 c = (b * b + N) / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (b == 0 && c == a)
                h += rational(1, 2);
            else if (b == a && c == a)
                h += rational(1, 3);
            else
                h += 1;
        }
    return h;
}

std::map<i64, i64> curves_by_trace(i64 p)
{
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (i64 x = 1; x < p; x++)
        chi[x * x % p] = 1;
    std::map<i64, i64> out;
    for (i64 a = 0; a < p; a++)
        for (i64 b = 0; b < p; b++) {
            if (mod(4 * a * a * a + 27 * b * b, p) == 0)
                continue;
            i64 t = 0;
            for (i64 x = 0; x < p; x++)
                t -= chi[mod(x * x % p * x + a * x + b, p)];
            out[t]++;
        }
    return out;
}

std::pair<i64, i64> frobenius_power(i64 t, i64 q, unsigned n)
{
    i64 d = t * t - 4 * q;
    i64 A = 2, B = 0;
    for (unsigned i = 0; i < n; i++) {
        i64 a2 = (A * t + B * d) / 2;
        i64 b2 = (A + B * t) / 2;
        A = a2;
        B = b2;
    }
    return {A, B};
}

i64 stable_cyclic(std::array<i64, 4> const & A, i64 ell, unsigned m)
{
    i64 n = isocensus::ipow(ell, m);
    std::set<std::set<std::pair<i64, i64>>> seen;
    i64 count = 0;
    for (i64 x = 0; x < n; x++)
        for (i64 y = 0; y < n; y++) {
            if (x % ell == 0 && y % ell == 0)
                continue;
            std::set<std::pair<i64, i64>> H;
            for (i64 k = 0; k < n; k++)
                H.insert({k * x % n, k * y % n});
            if (!seen.insert(H).second)
                continue;
            std::pair<i64, i64> img{mod(A[0] * x + A[1] * y, n), mod(A[2] * x + A[3] * y, n)};
            count += H.count(img) > 0;
        }
    return count;
}

} // namespace oracle
