#ifndef ISOCENSUS_ARITH_HPP
#define ISOCENSUS_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "isocensus/error.hpp"

namespace isocensus {

using i64 = std::int64_t;
using u64 = std::uint64_t;
__extension__ using i128 = __int128;

/* checked integer power; throws bound_exceeded on overflow */
i64 ipow(i64 b, unsigned e);

i64 mod(i64 a, i64 n);
i64 mulmod(i64 a, i64 b, i64 n);
i64 powmod(i64 b, u64 e, i64 n);
/* inverse of a modulo n, gcd(a,n) must be 1 */
i64 invmod(i64 a, i64 n);

i64 isqrt(i64 n);
bool is_square(i64 n);
bool is_prime(i64 n);

/* valuation of n at the prime l; n != 0 */
int valuation(i64 n, i64 l);

using factorization = std::vector<std::pair<i64, int>>;
factorization factor(i64 n);

i64 divisor_count(i64 n);
i64 divisor_sum(i64 n);

/* Kronecker symbol (a|n) for n >= 1 */
int kronecker(i64 a, i64 n);

/* largest f with d/f^2 a discriminant; returns (fundamental, f) */
std::pair<i64, i64> fundamental_part(i64 d);

bool is_discriminant(i64 d);

/* -1 if x < 0 etc.; floor division for signed values */
i64 floor_div(i64 a, i64 b);

} // namespace isocensus

#endif
