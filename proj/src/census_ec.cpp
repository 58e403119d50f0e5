#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "isocensus/census.hpp"
#include "isocensus/parallel.hpp"

namespace isocensus {

using boost::multiprecision::cpp_int;

namespace {

cpp_int big_trace_power(i64 t, i64 q, unsigned n)
{
    cpp_int a = 2, b = t;
    if (n == 0)
        return a;
    for (unsigned j = 1; j < n; j++) {
        cpp_int c = t * b - q * a;
        a = b;
        b = c;
    }
    return b;
}

} // namespace

bool geometrically_isogenous(i64 t1, i64 t2, i64 Q)
{
    return big_trace_power(t1, Q, 12) == big_trace_power(t2, Q, 12);
}

std::vector<ec_class> curve_classes(i64 q, unsigned n, u64 bound)
{
    auto pp = make_prime_power(q);
    if (n < 1)
        fail(error_code::invalid_argument, "n must be >= 1");
    auto F = make_field(pp.p, pp.k * n, bound);
    u64 Q = F->order();
    std::vector<char> seen(Q * Q, 0);
    std::vector<ec_class> out;
    auto c4 = F->from_int(4), c27 = F->from_int(27);
    for (u64 a = 0; a < Q; a++)
        for (u64 b = 0; b < Q; b++) {
            if (seen[a * Q + b])
                continue;
            auto ea = static_cast<finite_field::elem>(a), eb = static_cast<finite_field::elem>(b);
            auto d = F->add(F->mul(c4, F->pow(ea, 3)), F->mul(c27, F->mul(eb, eb)));
            if (d == 0)
                continue;
            i64 orbit = 0;
            for (u64 e = 0; e + 1 < Q; e++) {
                auto a2 = F->mul(F->exp(4 * e), ea), b2 = F->mul(F->exp(6 * e), eb);
                char & s = seen[u64(a2) * Q + b2];
                if (!s) {
                    s = 1;
                    orbit++;
                }
            }
            out.push_back({static_cast<i64>(a), static_cast<i64>(b), 0,
                           static_cast<i64>((Q - 1) / orbit)});
        }
    auto traces = parallel_chunks<std::vector<i64>>(out.size(), [&](std::size_t lo, std::size_t hi) {
        std::vector<i64> t;
        for (std::size_t i = lo; i < hi; i++)
            t.push_back(trace_of_frobenius(make_curve(F, out[i].a, out[i].b)));
        return t;
    });
    std::size_t i = 0;
    for (auto const & part : traces)
        for (i64 t : part)
            out[i++].trace = t;
    return out;
}

prediction predicted_ec_size(frobenius_data const & fd, i64 disc_K, i64 disc_order)
{
    if (fd.delta_n == 0)
        fail(error_code::zero_discriminant, "discriminant of pi^n vanishes");
    if (!is_ordinary(fd))
        fail(error_code::invalid_argument, "prediction needs an ordinary curve");
    prediction p{};
    p.delta_n = fd.delta_n;
    p.disc_K = disc_K ? disc_K : frobenius_field_disc(fd);
    p.disc_order = disc_order ? disc_order : fd.delta_n;
    if (fundamental_part(p.disc_order).first != p.disc_K)
        fail(error_code::invalid_argument, "order discriminant outside the Frobenius field");
    p.unramified = unramified_part(fd, p.disc_K);
    p.class_number = class_number(p.disc_order);
    p.predicted = p.unramified * p.class_number;
    p.sqrt_delta = isqrt(-fd.delta_n);
    return p;
}

census_report ec_census(ec_params const & P)
{
    auto pp = make_prime_power(P.q);
    auto Fq = make_field(pp.p, pp.k, P.bound);
    elliptic_curve E;
    if (P.a >= 0 && P.b >= 0) {
        E = make_curve(Fq, P.a, P.b);
    } else if (P.t) {
        auto found = find_curve_with_trace(Fq, *P.t);
        if (!found)
            fail(error_code::invalid_argument, "no curve with the requested trace");
        E = *found;
    } else {
        fail(error_code::invalid_argument, "need a reference curve or a trace");
    }
    i64 t = trace_of_frobenius(E);
    auto fd = make_frobenius_data(t, P.q, P.n);
    if (!is_ordinary(fd))
        fail(error_code::invalid_argument, "reference curve must be ordinary");
    i64 Q = ipow(P.q, P.n);
    if (u64(Q) > P.bound)
        fail(error_code::bound_exceeded, "q^n exceeds the enumeration bound");

    auto classes = curve_classes(P.q, P.n, P.bound);
    i64 N = 0, same = 0, twist = 0;
    for (auto const & c : classes) {
        if (!geometrically_isogenous(c.trace, fd.t_n, Q))
            continue;
        N++;
        same += c.trace == fd.t_n;
        twist += c.trace == -fd.t_n;
    }
    auto pred = predicted_ec_size(fd);

    census_report r;
    r.kind = "ec";
    r.q = P.q;
    r.n = P.n;
    r.t = t;
    r.t_n = fd.t_n;
    r.count = N;
    r.N0 = N;
    r.predicted = pred.predicted;
    r.exponent = approximate_exponent(std::log(double(N)) / (P.n * std::log(double(P.q))));
    r.details["curve_a"] = static_cast<i64>(E.a);
    r.details["curve_b"] = static_cast<i64>(E.b);
    r.details["classes_total"] = static_cast<i64>(classes.size());
    r.details["same_trace"] = same;
    r.details["twist_trace"] = twist;
    r.details["delta_n"] = fd.delta_n;
    r.details["disc_K"] = pred.disc_K;
    r.details["unramified_part"] = pred.unramified;
    r.details["class_number"] = pred.class_number;
    r.details["sqrt_delta"] = pred.sqrt_delta;
    r.details["tau_millis"] = std::llround(P.tau * 1000);
    r.checks["contains_reference"] = same >= 1;
    r.checks["twist_counted"] = twist >= 1 && geometrically_isogenous(-fd.t_n, fd.t_n, Q);
    r.checks["within_factor_8"] = 8 * N >= pred.predicted && N <= 8 * pred.predicted;
    r.verdict = theorem_verdict(r, P.tau).verdict;
    return r;
}

std::vector<deuring_row> deuring_table(i64 q, u64 bound)
{
    auto classes = curve_classes(q, 1, bound);
    std::map<i64, deuring_row> rows;
    for (auto const & c : classes) {
        auto & row = rows.try_emplace(c.trace, deuring_row{c.trace, 0, 0, 0, 0}).first->second;
        row.classes++;
        row.weighted += rational(2, c.aut);
    }
    std::vector<deuring_row> out;
    for (auto & [t, row] : rows) {
        i64 D = t * t - 4 * q;
        row.hurwitz = hurwitz_class_number(D);
        row.kronecker = kronecker_class_number(D);
        out.push_back(row);
    }
    return out;
}

} // namespace isocensus
