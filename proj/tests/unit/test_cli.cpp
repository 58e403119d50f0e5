#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace isocensus;

namespace {

struct result {
    int code;
    std::string out, err;
};

result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int rc = cli::run(std::move(args), out, err);
    return {rc, out.str(), err.str()};
}

} // namespace

TEST_CASE("documented subcommand outputs")
{
    auto r = call({"count-lagrangians", "--ell", "2", "--m", "1"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 15);
    CHECK(j["type1"] == 9);
    CHECK(j["type2"] == 6);
    CHECK(nlohmann::json::parse(call({"class-number", "--disc", "-23"}).out)["h"] == 3);
    CHECK(nlohmann::json::parse(call({"count-reps", "--form", "four_squares", "--n", "3"}).out)["r"] ==
          32);
    CHECK(r.out.back() == '\n');
}

TEST_CASE("exit codes")
{
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"class-number", "--disc", "-5"}).code == 2);
    CHECK(call({"verdict", "--stratum", "unknown"}).code == 2);
    CHECK(call({"count-reps", "--form", "four_squares", "--n", "100000000"}).code == 3);
    auto io = call({"verdict", "--report", "/nonexistent/x.json"});
    CHECK(io.code == 4);
    auto e = nlohmann::json::parse(io.err);
    CHECK(e["error"]["code"] == "io");
    CHECK(cli::exit_code(error_code::budget_exhausted) == 3);
    CHECK(cli::exit_code(error_code::torsion_not_found) == 3);
    CHECK(cli::exit_code(error_code::ramified_prime) == 2);
    CHECK(call({"--format", "csv", "class-number", "--disc", "-23"}).code == 2);
}

TEST_CASE("byte determinism")
{
    std::vector<std::vector<std::string>> cases = {
        {"count-lagrangians", "--ell", "3", "--m", "1"},
        {"classify-frobenius", "--t", "3", "--q", "5", "--n", "2", "--ell", "3", "--m", "2"},
        {"count-norm", "--disc", "-7", "--d", "56"},
        {"predict", "--t", "1", "--q", "5", "--n", "3"},
        {"surface-census", "--q", "5", "--t", "3", "--n", "12", "--ell", "2", "--m", "1"},
    };
    for (auto const & c : cases) {
        auto a = call(c), b = call(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("config file and output file")
{
    auto dir = std::filesystem::temp_directory_path();
    auto cfg = (dir / "isocensus_cli_test.cfg").string();
    auto outp = (dir / "isocensus_cli_test.json").string();
    {
        std::FILE * f = std::fopen(cfg.c_str(), "w");
        std::fputs("# defaults\nell=3\nm=1\n", f);
        std::fclose(f);
    }
    auto kv = cli::read_config(cfg);
    CHECK(kv.size() == 2);
    auto r = call({"--config", cfg, "count-lagrangians"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 40);
    /* flags win over the file */
    r = call({"--config", cfg, "count-lagrangians", "--ell", "2"});
    CHECK(nlohmann::json::parse(r.out)["count"] == 15);
    r = call({"--output", outp, "class-number", "--disc", "-23"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(nlohmann::json::parse(std::ifstream(outp))["h"] == 3);
    std::remove(cfg.c_str());
    std::remove(outp.c_str());
}

TEST_CASE("verdict over saved reports")
{
    auto dir = std::filesystem::temp_directory_path();
    auto path = (dir / "isocensus_cli_reports.json").string();
    auto r = call({"--output", path, "ec-census", "--q", "5", "--n", "2", "--t", "3"});
    REQUIRE(r.code == 0);
    auto v = call({"verdict", "--report", path});
    REQUIRE(v.code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["verdicts"].size() == 1);
    CHECK(j["verdicts"][0]["verdict"] == "PASS");
    std::remove(path.c_str());
}
