#include <algorithm>
#include <string>

#include "isocensus/ff_curves.hpp"

namespace isocensus {

namespace {

using poly = std::vector<i64>; /* low degree first */

void trim(poly & a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

/* a mod b over F_p, b nonzero */
poly poly_rem(poly a, poly const & b, i64 p)
{
    trim(a);
    std::size_t db = b.size() - 1;
    i64 lead_inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        i64 c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j <= db; j++)
            a[shift + j] = mod(a[shift + j] - c * b[j], p);
        trim(a);
    }
    return a;
}

poly poly_gcd(poly a, poly b, i64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/* product modulo the monic f given by its low coefficients */
poly mulmod_monic(poly const & a, poly const & b, poly const & f, i64 p)
{
    std::size_t K = f.size();
    poly r(2 * K, 0);
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); j++)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t i = r.size(); i-- > K;) {
        i64 c = r[i];
        if (c == 0)
            continue;
        r[i] = 0;
        for (std::size_t j = 0; j < K; j++)
            r[i - K + j] = mod(r[i - K + j] - c * f[j], p);
    }
    r.resize(K);
    return r;
}

poly powmod_monic(poly b, u64 e, poly const & f, i64 p)
{
    poly r(f.size(), 0);
    r[0] = 1 % p;
    for (; e; e >>= 1) {
        if (e & 1)
            r = mulmod_monic(r, b, f, p);
        b = mulmod_monic(b, b, f, p);
    }
    return r;
}

bool is_irreducible(poly const & f, i64 p)
{
    std::size_t K = f.size();
    if (K == 1)
        return true;
    poly full = f;
    full.push_back(1);
    poly x(K, 0);
    x[1] = 1;
    poly xp = x;
    for (std::size_t d = 1; d <= K / 2; d++) {
        xp = powmod_monic(xp, static_cast<u64>(p), f, p);
        poly g = xp;
        g[1] = mod(g[1] - 1, p);
        poly h = poly_gcd(full, g, p);
        if (h.size() > 1)
            return false;
    }
    return true;
}

} // namespace

finite_field::finite_field(i64 p, unsigned degree, u64 bound)
    : p_(p), degree_(degree)
{
    if (!is_prime(p) || p < 3)
        fail(error_code::invalid_argument, "field characteristic must be an odd prime");
    if (degree == 0)
        fail(error_code::invalid_argument, "field degree must be positive");
    i128 Q = 1;
    for (unsigned i = 0; i < degree; i++) {
        Q *= p;
        if (Q > (i128)bound)
            fail(error_code::bound_exceeded,
                 "field of size " + std::to_string(p) + "^" + std::to_string(degree) +
                     " exceeds enumeration bound " + std::to_string(bound));
    }
    order_ = static_cast<u64>(Q);

    /* smallest monic irreducible by index of its low coefficients */
    poly f(degree, 0);
    for (u64 idx = 0;; idx++) {
        u64 v = idx;
        for (unsigned i = 0; i < degree; i++) {
            f[i] = static_cast<i64>(v % static_cast<u64>(p));
            v /= static_cast<u64>(p);
        }
        if (is_irreducible(f, p))
            break;
    }
    modulus_ = f;

    auto to_poly = [&](u64 idx) {
        poly a(degree, 0);
        for (unsigned i = 0; i < degree; i++) {
            a[i] = static_cast<i64>(idx % static_cast<u64>(p));
            idx /= static_cast<u64>(p);
        }
        return a;
    };
    auto to_index = [&](poly const & a) {
        u64 idx = 0;
        for (std::size_t i = a.size(); i-- > 0;)
            idx = idx * static_cast<u64>(p) + static_cast<u64>(a[i]);
        return idx;
    };

    u64 group = order_ - 1;
    factorization fg = group > 1 ? factor(static_cast<i64>(group)) : factorization{};
    poly g;
    for (u64 cand = 1; cand < order_; cand++) {
        poly c = to_poly(cand);
        bool ok = true;
        for (auto [r, e] : fg) {
            poly t = powmod_monic(c, group / static_cast<u64>(r), f, p);
            if (to_index(t) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = c;
            break;
        }
    }

    exp_.assign(group, 0);
    log_.assign(order_, 0);
    poly cur(degree, 0);
    cur[0] = 1;
    for (u64 i = 0; i < group; i++) {
        u64 idx = to_index(cur);
        exp_[i] = static_cast<elem>(idx);
        log_[idx] = static_cast<std::uint32_t>(i);
        cur = mulmod_monic(cur, g, f, p);
    }

    /* Zech logs: 1 + g^k only changes the constant digit */
    zech_.assign(group, UINT32_MAX);
    for (u64 k = 0; k < group; k++) {
        u64 e = exp_[k];
        u64 d0 = e % static_cast<u64>(p);
        u64 e2 = e - d0 + (d0 + 1) % static_cast<u64>(p);
        if (e2 != 0)
            zech_[k] = log_[e2];
    }
}

finite_field::elem finite_field::add(elem a, elem b) const
{
    if (a == 0)
        return b;
    if (b == 0)
        return a;
    u64 n = order_ - 1;
    u64 la = log_[a], lb = log_[b];
    u64 d = (lb + n - la) % n;
    std::uint32_t z = zech_[d];
    if (z == UINT32_MAX)
        return 0;
    return exp_[(la + z) % n];
}

finite_field::elem finite_field::neg(elem a) const
{
    if (a == 0)
        return 0;
    u64 n = order_ - 1;
    return exp_[(log_[a] + n / 2) % n];
}

finite_field::elem finite_field::mul(elem a, elem b) const
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[(static_cast<u64>(log_[a]) + log_[b]) % (order_ - 1)];
}

finite_field::elem finite_field::inv(elem a) const
{
    if (a == 0)
        fail(error_code::invalid_argument, "inverse of zero in finite field");
    u64 n = order_ - 1;
    return exp_[(n - log_[a]) % n];
}

finite_field::elem finite_field::pow(elem a, i64 e) const
{
    if (a == 0) {
        if (e < 0)
            fail(error_code::invalid_argument, "negative power of zero");
        return e == 0 ? 1 : 0;
    }
    i64 n = static_cast<i64>(order_ - 1);
    i64 r = static_cast<i64>(mulmod(static_cast<i64>(log_[a]), mod(e, n), n));
    return exp_[static_cast<u64>(r)];
}

std::optional<finite_field::elem> finite_field::sqrt(elem a) const
{
    if (a == 0)
        return elem(0);
    if (log_[a] & 1)
        return std::nullopt;
    return exp_[log_[a] / 2];
}

finite_field::elem finite_field::frobenius(elem a, u64 e) const
{
    if (a == 0)
        return 0;
    i64 n = static_cast<i64>(order_ - 1);
    i64 pe = powmod(p_, e, n);
    return exp_[static_cast<u64>(mulmod(static_cast<i64>(log_[a]), pe, n))];
}

u64 finite_field::log(elem a) const
{
    if (a == 0)
        fail(error_code::invalid_argument, "log of zero");
    return log_[a];
}

std::vector<i64> finite_field::digits(elem a) const
{
    std::vector<i64> d(degree_, 0);
    u64 v = a;
    for (unsigned i = 0; i < degree_; i++) {
        d[i] = static_cast<i64>(v % static_cast<u64>(p_));
        v /= static_cast<u64>(p_);
    }
    return d;
}

finite_field::elem finite_field::from_digits(std::vector<i64> const & d) const
{
    u64 idx = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        idx = idx * static_cast<u64>(p_) + static_cast<u64>(mod(d[i], p_));
    return static_cast<elem>(idx);
}

std::vector<finite_field::elem> finite_field::embedding_from(finite_field const & sub) const
{
    if (sub.p_ != p_ || degree_ % sub.degree_ != 0)
        fail(error_code::invalid_argument, "field is not a subfield");
    std::vector<elem> table(sub.order_);
    if (sub.degree_ == 1) {
        for (u64 i = 0; i < sub.order_; i++)
            table[i] = static_cast<elem>(i);
        return table;
    }
    /* smallest-index root of the subfield modulus among our subfield elements */
    u64 step = (order_ - 1) / (sub.order_ - 1);
    std::optional<elem> root;
    for (u64 j = 0; j < sub.order_ - 1; j++) {
        elem z = exp_[j * step];
        elem acc = 1; /* leading coefficient of the monic modulus */
        for (std::size_t i = sub.modulus_.size(); i-- > 0;)
            acc = add(mul(acc, z), from_int(sub.modulus_[i]));
        if (acc == 0 && (!root || z < *root))
            root = z;
    }
    if (!root)
        fail(error_code::invalid_argument, "no root of subfield modulus");
    for (u64 i = 0; i < sub.order_; i++) {
        auto d = sub.digits(static_cast<elem>(i));
        elem acc = 0;
        for (std::size_t k = d.size(); k-- > 0;)
            acc = add(mul(acc, *root), from_int(d[k]));
        table[i] = acc;
    }
    return table;
}

field_ptr make_field(i64 p, unsigned degree, u64 bound)
{
    return std::make_shared<finite_field const>(p, degree, bound);
}

prime_power make_prime_power(i64 q)
{
    if (q < 5)
        fail(error_code::invalid_argument, "q must be at least 5");
    auto f = factor(q);
    if (f.size() != 1)
        fail(error_code::invalid_argument, std::to_string(q) + " is not a prime power");
    auto [p, k] = f[0];
    if (p < 5)
        fail(error_code::invalid_argument, "characteristic must be at least 5");
    return {p, static_cast<unsigned>(k), q};
}

} // namespace isocensus
