#include <fstream>
#include <sstream>

#include "isocensus/report_io.hpp"

namespace isocensus {

using nlohmann::json;

json to_json(exponent_value const & e)
{
    return {{"num", e.num}, {"den", e.den}, {"precision", e.precision}};
}

json to_json(rational const & r)
{
    return {{"num", r.numerator()}, {"den", r.denominator()}};
}

json to_json(census_report const & r)
{
    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = r.kind;
    j["q"] = r.q;
    j["n"] = r.n;
    j["ell"] = r.ell;
    j["m"] = r.m;
    j["t"] = r.t;
    j["t_n"] = r.t_n;
    j["count"] = r.count;
    j["stable"] = r.stable;
    j["type1"] = r.type1;
    j["type2"] = r.type2;
    j["N0"] = r.N0;
    j["N1"] = r.N1;
    j["N2"] = r.N2;
    j["predicted"] = r.predicted;
    j["exponent"] = to_json(r.exponent);
    j["verdict"] = r.verdict;
    j["budget_limited"] = r.budget_limited;
    j["details"] = json::object();
    for (auto const & [k, v] : r.details)
        j["details"][k] = v;
    j["checks"] = json::object();
    for (auto const & [k, v] : r.checks)
        j["checks"][k] = v;
    return j;
}

json to_json(verdict_record const & v)
{
    return {{"verdict", v.verdict},
            {"stratum", v.stratum},
            {"conjectured", to_json(v.conjectured)},
            {"exponent", to_json(v.exponent)},
            {"band_lo", to_json(v.band_lo)},
            {"band_hi", to_json(v.band_hi)},
            {"reason", v.reason}};
}

census_report report_from_json(json const & j)
{
    try {
        if (j.at("schema_version").get<int>() != report_schema_version)
            fail(error_code::invalid_argument, "unsupported report schema version");
        census_report r;
        r.kind = j.at("kind").get<std::string>();
        r.q = j.at("q").get<i64>();
        r.n = j.at("n").get<unsigned>();
        r.ell = j.at("ell").get<i64>();
        r.m = j.at("m").get<unsigned>();
        r.t = j.at("t").get<i64>();
        r.t_n = j.at("t_n").get<i64>();
        r.count = j.at("count").get<i64>();
        r.stable = j.at("stable").get<i64>();
        r.type1 = j.at("type1").get<i64>();
        r.type2 = j.at("type2").get<i64>();
        r.N0 = j.at("N0").get<i64>();
        r.N1 = j.at("N1").get<i64>();
        r.N2 = j.at("N2").get<i64>();
        r.predicted = j.at("predicted").get<i64>();
        auto const & e = j.at("exponent");
        r.exponent = {e.at("num").get<i64>(), e.at("den").get<i64>(), e.at("precision").get<i64>()};
        r.verdict = j.at("verdict").get<std::string>();
        r.budget_limited = j.at("budget_limited").get<bool>();
        for (auto const & [k, v] : j.at("details").items())
            r.details[k] = v.get<i64>();
        for (auto const & [k, v] : j.at("checks").items())
            r.checks[k] = v.get<bool>();
        return r;
    } catch (json::exception const & ex) {
        fail(error_code::invalid_argument, std::string("malformed report: ") + ex.what());
    }
}

std::string canonical_dump(json const & j)
{
    return j.dump() + "\n";
}

std::string emit_json(std::vector<census_report> const & reports)
{
    json arr = json::array();
    for (auto const & r : reports)
        arr.push_back(to_json(r));
    return canonical_dump(arr);
}

std::string emit_csv(std::vector<census_report> const & reports)
{
    std::ostringstream os;
    os << csv_header << "\n";
    for (auto const & r : reports)
        os << r.q << ',' << r.n << ',' << r.ell << ',' << r.m << ',' << r.count << ','
           << r.type1 << ',' << r.type2 << ',' << r.N0 << ',' << r.N1 << ',' << r.N2 << ','
           << r.predicted << ',' << r.exponent.num << ',' << r.exponent.den << ','
           << r.verdict << "\n";
    return os.str();
}

std::vector<census_report> parse_reports(std::string const & text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (json::exception const & ex) {
        fail(error_code::invalid_argument, std::string("report is not JSON: ") + ex.what());
    }
    std::vector<census_report> out;
    if (j.is_array()) {
        for (auto const & x : j)
            out.push_back(report_from_json(x));
    } else {
        out.push_back(report_from_json(j));
    }
    return out;
}

std::string read_file(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(error_code::io, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(std::string const & path, std::string const & data)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data))
        fail(error_code::io, "cannot write " + path);
}

} // namespace isocensus
