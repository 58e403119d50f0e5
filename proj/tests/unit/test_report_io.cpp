#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "isocensus/report_io.hpp"

using namespace isocensus;

namespace {

census_report sample()
{
    census_report r;
    r.kind = "surface";
    r.q = 5;
    r.n = 12;
    r.ell = 3;
    r.m = 1;
    r.t = 3;
    r.t_n = -25774;
    r.count = 40;
    r.stable = 40;
    r.type1 = 16;
    r.type2 = 24;
    r.N0 = 7;
    r.N1 = 3;
    r.N2 = 4;
    r.predicted = 9;
    r.exponent = approximate_exponent(0.100755);
    r.verdict = "PASS";
    r.details = {{"working_level", 3}, {"disc_K", -11}};
    r.checks = {{"all_stable", true}, {"n2_bracket", false}};
    return r;
}

} // namespace

TEST_CASE("report round trip")
{
    auto r = sample();
    CHECK(report_from_json(to_json(r)) == r);
    auto text = emit_json({r, r});
    auto back = parse_reports(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == r);
    CHECK(parse_reports(canonical_dump(to_json(r))).at(0) == r);
    CHECK(emit_json(back) == text);
}

TEST_CASE("canonical output")
{
    CHECK(emit_json({}) == "[]\n");
    CHECK(emit_csv({}) == std::string(csv_header) + "\n");
    auto csv = emit_csv({sample()});
    CHECK(csv == std::string(csv_header) + "\n5,12,3,1,40,16,24,7,3,4,9,20151,200000,PASS\n");
    nlohmann::json j = {{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}};
    CHECK(canonical_dump(j) == "{\"a\":{\"c\":3,\"d\":2},\"b\":1}\n");
    CHECK(to_json(sample())["schema_version"] == report_schema_version);
}

TEST_CASE("malformed input")
{
    CHECK_THROWS_AS(parse_reports("{"), error);
    CHECK_THROWS_AS(parse_reports("[{\"kind\":\"surface\"}]"), error);
    CHECK_THROWS_AS(parse_reports("42"), error);
}

TEST_CASE("file io")
{
    auto path = (std::filesystem::temp_directory_path() / "isocensus_io_test.json").string();
    write_file(path, "[]\n");
    CHECK(read_file(path) == "[]\n");
    std::remove(path.c_str());
    try {
        read_file("/nonexistent/dir/file.json");
        CHECK(false);
    } catch (error const & e) {
        CHECK(e.code() == error_code::io);
    }
}
