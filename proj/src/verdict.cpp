#include <cmath>
#include <numeric>
#include <string>

#include "isocensus/census.hpp"

namespace isocensus {

exponent_value approximate_exponent(double x)
{
    exponent_value e;
    e.precision = 1000000;
    i64 num = std::llround(x * double(e.precision));
    i64 g = std::gcd(num, e.precision);
    if (g == 0)
        g = 1;
    e.num = num / g;
    e.den = e.precision / g;
    return e;
}

rational conjectured_exponent(std::string_view stratum)
{
    /* dim(central leaf)/2 + dim(isogeny leaf) */
    if (stratum == "ordinary-times-supersingular")
        return rational(2, 2) + rational(0);
    if (stratum == "ordinary-ec")
        return rational(1, 2);
    fail(error_code::unknown_stratum, "unknown stratum: " + std::string(stratum));
}

verdict_record theorem_verdict(census_report const & r, double tau)
{
    verdict_record v;
    v.exponent = r.exponent;
    double x = double(r.exponent.num) / double(r.exponent.den);
    if (r.kind != "ec" && r.kind != "surface")
        fail(error_code::unknown_stratum, "unknown report kind: " + r.kind);
    v.stratum = r.kind == "ec" ? "ordinary-ec" : "ordinary-times-supersingular";
    v.conjectured = conjectured_exponent(v.stratum);
    double c = double(v.conjectured.numerator()) / double(v.conjectured.denominator());
    v.band_lo = approximate_exponent(c - tau);
    v.band_hi = approximate_exponent(c + tau);
    if (r.kind == "surface") {
        /* the exponent is not reachable at desk scale; use the class bracket */
        auto it = r.details.find("bracket_n2");
        i64 C = it != r.details.end() ? it->second : 16;
        bool ok = r.N0 * C >= r.predicted && !r.budget_limited;
        v.verdict = ok ? "PASS" : "INCONCLUSIVE";
        v.reason = ok ? "class count reaches predicted/C" : "class count below predicted/C";
        return v;
    }
    bool ok = r.N0 > 0 && x >= c - tau && x <= c + tau;
    v.verdict = ok ? "PASS" : "INCONCLUSIVE";
    v.reason = ok ? "exponent inside the tolerance band" : "exponent outside the tolerance band";
    return v;
}

} // namespace isocensus
