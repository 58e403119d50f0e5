#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "isocensus/ff_curves.hpp"
#include "isocensus/parallel.hpp"

namespace isocensus {

using elem = finite_field::elem;

prime_power elliptic_curve::base() const
{
    return {field->characteristic(), field->degree(), static_cast<i64>(field->order())};
}

bool elliptic_curve::on_curve(curve_point const & P) const
{
    if (P.infinity)
        return true;
    auto const & F = *field;
    elem rhs = F.add(F.mul(F.add(F.mul(P.x, P.x), a), P.x), b);
    return F.mul(P.y, P.y) == rhs;
}

curve_point elliptic_curve::neg(curve_point const & P) const
{
    if (P.infinity)
        return P;
    return {P.x, field->neg(P.y), false};
}

curve_point elliptic_curve::add(curve_point const & P, curve_point const & Q) const
{
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    auto const & F = *field;
    elem lambda;
    if (P.x == Q.x) {
        if (F.add(P.y, Q.y) == 0)
            return {};
        elem num = F.add(F.mul(F.from_int(3), F.mul(P.x, P.x)), a);
        lambda = F.div(num, F.add(P.y, P.y));
    } else {
        lambda = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
    }
    elem x3 = F.sub(F.sub(F.mul(lambda, lambda), P.x), Q.x);
    elem y3 = F.sub(F.mul(lambda, F.sub(P.x, x3)), P.y);
    return {x3, y3, false};
}

curve_point elliptic_curve::mul(i64 k, curve_point const & P) const
{
    curve_point base = k < 0 ? neg(P) : P;
    u64 e = static_cast<u64>(k < 0 ? -k : k);
    curve_point r;
    for (; e; e >>= 1) {
        if (e & 1)
            r = add(r, base);
        base = add(base, base);
    }
    return r;
}

elem elliptic_curve::j_invariant() const
{
    auto const & F = *field;
    elem a3 = F.mul(F.from_int(4), F.mul(a, F.mul(a, a)));
    elem den = F.add(a3, F.mul(F.from_int(27), F.mul(b, b)));
    return F.mul(F.from_int(1728), F.div(a3, den));
}

std::vector<curve_point> elliptic_curve::points() const
{
    auto const & F = *field;
    std::vector<curve_point> out;
    out.push_back({});
    for (u64 xi = 0; xi < F.order(); xi++) {
        elem x = static_cast<elem>(xi);
        elem rhs = F.add(F.mul(F.add(F.mul(x, x), a), x), b);
        auto s = F.sqrt(rhs);
        if (!s)
            continue;
        if (*s == 0) {
            out.push_back({x, 0, false});
        } else {
            elem y1 = *s, y2 = F.neg(*s);
            out.push_back({x, std::min(y1, y2), false});
            out.push_back({x, std::max(y1, y2), false});
        }
    }
    return out;
}

elliptic_curve make_curve(field_ptr F, i64 a, i64 b)
{
    if (F->characteristic() < 5)
        fail(error_code::invalid_argument, "short Weierstrass model needs p >= 5");
    if (a < 0 || b < 0 || static_cast<u64>(a) >= F->order() || static_cast<u64>(b) >= F->order())
        fail(error_code::invalid_argument, "curve coefficient is not a field element index");
    elliptic_curve E{F, static_cast<elem>(a), static_cast<elem>(b)};
    elem disc = F->add(F->mul(F->from_int(4), F->pow(E.a, 3)),
                       F->mul(F->from_int(27), F->mul(E.b, E.b)));
    if (disc == 0)
        fail(error_code::invalid_argument, "singular curve: 4a^3 + 27b^2 = 0");
    return E;
}

elliptic_curve base_change(elliptic_curve const & E, unsigned n, u64 bound)
{
    if (n == 1)
        return E;
    auto big = make_field(E.field->characteristic(), E.field->degree() * n, bound);
    auto emb = big->embedding_from(*E.field);
    return {big, emb[E.a], emb[E.b]};
}

i64 point_count(elliptic_curve const & E, unsigned n, u64 bound)
{
    if (n == 0)
        fail(error_code::invalid_argument, "extension degree must be positive");
    elliptic_curve Ek = base_change(E, n, bound);
    auto const & F = *Ek.field;
    u64 Q = F.order();
    auto parts = parallel_chunks<i64>(Q, [&](std::size_t lo, std::size_t hi) {
        i64 s = 0;
        for (std::size_t xi = lo; xi < hi; xi++) {
            elem x = static_cast<elem>(xi);
            elem rhs = F.add(F.mul(F.add(F.mul(x, x), Ek.a), x), Ek.b);
            if (rhs == 0)
                s += 1;
            else if (F.is_square(rhs))
                s += 2;
        }
        return s;
    });
    i64 count = 1;
    for (i64 s : parts)
        count += s;
    return count;
}

i64 trace_of_frobenius(elliptic_curve const & E)
{
    return static_cast<i64>(E.field->order()) + 1 - point_count(E, 1);
}

i64 trace_power(i64 t, i64 q, unsigned n)
{
    i128 a = 2, b = t;
    if (n == 0)
        return 2;
    for (unsigned j = 1; j < n; j++) {
        i128 c = (i128)t * b - (i128)q * a;
        if (c > INT64_MAX || c < INT64_MIN)
            fail(error_code::bound_exceeded, "trace recurrence overflow");
        a = b;
        b = c;
    }
    return static_cast<i64>(b);
}

frobenius_data make_frobenius_data(i64 t, i64 q, unsigned n)
{
    if (q < 2)
        fail(error_code::invalid_argument, "q must be a prime power");
    if (n == 0)
        fail(error_code::invalid_argument, "extension degree must be positive");
    if ((i128)t * t > (i128)4 * q)
        fail(error_code::hasse_violation,
             "trace " + std::to_string(t) + " violates the Hasse bound for q = " +
                 std::to_string(q));
    frobenius_data fd;
    fd.t = t;
    fd.q = q;
    fd.n = n;
    fd.t_n = trace_power(t, q, n);
    i64 qn = ipow(q, n);
    i128 d = (i128)fd.t_n * fd.t_n - (i128)4 * qn;
    if (d > INT64_MAX || d < INT64_MIN)
        fail(error_code::bound_exceeded, "discriminant overflow");
    fd.delta_n = static_cast<i64>(d);
    return fd;
}

bool is_ordinary(elliptic_curve const & E)
{
    return std::gcd(trace_of_frobenius(E), E.field->characteristic()) == 1;
}

bool is_ordinary(frobenius_data const & fd)
{
    i64 p = factor(fd.q).front().first;
    return std::gcd(fd.t, p) == 1;
}

curve_point frobenius_map(elliptic_curve const & E, curve_point const & P, unsigned p_power)
{
    if (P.infinity)
        return P;
    return {E.field->frobenius(P.x, p_power), E.field->frobenius(P.y, p_power), false};
}

std::vector<curve_point> cyclic_subgroup(elliptic_curve const & E, curve_point const & P)
{
    std::vector<curve_point> out{curve_point{}};
    curve_point cur = P;
    while (!cur.infinity) {
        out.push_back(cur);
        cur = E.add(cur, P);
        if (out.size() > 4 * E.field->order() + 8)
            fail(error_code::invalid_argument, "point is not on the curve");
    }
    return out;
}

i64 point_order(elliptic_curve const & E, curve_point const & P, i64 multiple)
{
    i64 n = multiple;
    for (auto [r, e] : factor(multiple)) {
        for (int i = 0; i < e; i++) {
            if (E.mul(n / r, P).infinity)
                n /= r;
            else
                break;
        }
    }
    return n;
}

elliptic_curve velu_quotient(elliptic_curve const & E, std::vector<curve_point> const & kernel)
{
    auto const & F = *E.field;
    std::set<curve_point> G(kernel.begin(), kernel.end());
    if (!G.count(curve_point{}))
        fail(error_code::not_a_subgroup, "kernel does not contain the identity");
    for (auto const & P : G) {
        if (!E.on_curve(P))
            fail(error_code::not_a_subgroup, "kernel point not on the curve");
        if (!G.count(E.neg(P)))
            fail(error_code::not_a_subgroup, "kernel not closed under negation");
        for (auto const & Q : G)
            if (!G.count(E.add(P, Q)))
                fail(error_code::not_a_subgroup, "kernel not closed under addition");
    }
    if (static_cast<i64>(G.size()) % F.characteristic() == 0)
        fail(error_code::kernel_order_divisible_by_p, "kernel order divisible by p");

    elem v = 0, w = 0;
    std::set<curve_point> seen;
    for (auto const & Q : G) {
        if (Q.infinity || seen.count(Q))
            continue;
        curve_point mQ = E.neg(Q);
        seen.insert(Q);
        seen.insert(mQ);
        elem gx = F.add(F.mul(F.from_int(3), F.mul(Q.x, Q.x)), E.a);
        elem gy = F.mul(F.from_int(-2), Q.y);
        elem vq = (Q == mQ) ? gx : F.add(gx, gx);
        elem uq = F.mul(gy, gy);
        v = F.add(v, vq);
        w = F.add(w, F.add(uq, F.mul(Q.x, vq)));
    }
    elliptic_curve R{E.field, F.sub(E.a, F.mul(F.from_int(5), v)),
                     F.sub(E.b, F.mul(F.from_int(7), w))};
    return R;
}

std::vector<curve_point> torsion_points(elliptic_curve const & E, i64 N)
{
    auto pts = E.points();
    auto parts = parallel_chunks<std::vector<curve_point>>(
        pts.size(), [&](std::size_t lo, std::size_t hi) {
            std::vector<curve_point> r;
            for (std::size_t i = lo; i < hi; i++)
                if (E.mul(N, pts[i]).infinity)
                    r.push_back(pts[i]);
            return r;
        });
    std::vector<curve_point> out;
    for (auto & v : parts)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

torsion_field full_torsion(elliptic_curve const & E, i64 ell, unsigned m, u64 bound)
{
    i64 N = ipow(ell, m);
    i64 q = static_cast<i64>(E.field->order());
    i64 t = trace_of_frobenius(E);
    i128 Q = 1;
    for (unsigned e = 1;; e++) {
        Q *= q;
        if (Q > (i128)bound)
            fail(error_code::torsion_not_found,
                 "E[" + std::to_string(N) + "] not rational within the enumeration bound");
        i64 te = trace_power(t, q, e);
        i128 count = Q + 1 - te;
        if (count % ((i128)N * N) != 0)
            continue;
        elliptic_curve Ee = base_change(E, e, bound);
        auto tors = torsion_points(Ee, N);
        if (static_cast<i64>(tors.size()) == N * N)
            return {e, Ee, std::move(tors)};
    }
}

std::array<curve_point, 2> torsion_basis(elliptic_curve const & E,
                                         std::vector<curve_point> const & tors, i64 ell,
                                         unsigned m)
{
    i64 N = ipow(ell, m);
    i64 low = N / ell;
    std::vector<curve_point> full;
    for (auto const & P : tors)
        if (!E.mul(low, P).infinity)
            full.push_back(P);
    if (full.empty())
        fail(error_code::torsion_not_found, "no point of full order");
    std::sort(full.begin(), full.end());
    curve_point P1 = full.front();
    auto line = cyclic_subgroup(E, E.mul(low, P1));
    std::set<curve_point> L(line.begin(), line.end());
    for (auto const & P : full) {
        if (!L.count(E.mul(low, P)))
            return {P1, P};
    }
    fail(error_code::torsion_not_found, "torsion is cyclic");
}

std::optional<elliptic_curve> find_curve_with_trace(field_ptr F, i64 t)
{
    i64 Q = static_cast<i64>(F->order());
    elem j0 = 0, j1728 = F->from_int(1728);
    for (i64 a = 0; a < Q; a++) {
        for (i64 b = 0; b < Q; b++) {
            elem disc = F->add(F->mul(F->from_int(4), F->pow(static_cast<elem>(a), 3)),
                               F->mul(F->from_int(27), F->mul(static_cast<elem>(b),
                                                               static_cast<elem>(b))));
            if (disc == 0)
                continue;
            elliptic_curve E{F, static_cast<elem>(a), static_cast<elem>(b)};
            elem j = E.j_invariant();
            if (j == j0 || j == j1728)
                continue;
            if (trace_of_frobenius(E) == t)
                return E;
        }
    }
    return std::nullopt;
}

} // namespace isocensus
