#include <doctest.h>

#include "gueindex/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int run(std::vector<std::string> args) {
    std::vector<const char*> argv{"gue-index"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return gueindex::cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("variance subcommand text output") {
    TempFile tmp("var.txt");
    CHECK(run({"variance", "--n", "2", "--method", "all", "--out", tmp.path}) == 0);
    std::string out = slurp(tmp.path);
    CHECK(out.find("1/2 - 1/π") != std::string::npos);
    CHECK(out.find("0.18169011") != std::string::npos);
    CHECK(out.find("[closed]") != std::string::npos);
}

TEST_CASE("variance json schema") {
    TempFile tmp("var.json");
    CHECK(run({"variance", "--n", "4", "--method", "sum", "--format", "json", "--out", tmp.path}) ==
          0);
    auto j = nlohmann::json::parse(slurp(tmp.path));
    REQUIRE(j.is_array());
    CHECK(j[0]["n"] == 4);
    CHECK(j[0]["rat"] == "1");
    CHECK(j[0]["inv_pi"] == "-29/12");
    CHECK(j[0]["method"] == "sum");
    CHECK(std::string(j[0]["decimal"]).substr(0, 10) == "0.23075110");
}

TEST_CASE("dist and tau subcommands") {
    TempFile tmp("dist.json");
    CHECK(run({"dist", "--n", "2", "--format", "json", "--out", tmp.path}) == 0);
    auto j = nlohmann::json::parse(slurp(tmp.path));
    CHECK(j["n"] == 2);
    REQUIRE(j["probs"].size() == 3);
    CHECK(j["probs"][1]["exact"] == "((1/2)*σ^2 + (1))/((1)*σ^2)");

    TempFile tmp2("tau.txt");
    CHECK(run({"tau", "--n", "1", "--out", tmp2.path}) == 0);
    std::string out = slurp(tmp2.path);
    CHECK(out.find("τ_1(ξ)") != std::string::npos);
    CHECK(out.find("(1/2)*σ") != std::string::npos);
}

TEST_CASE("mc json is byte-identical for identical flags") {
    TempFile a("mc_a.json"), b("mc_b.json");
    CHECK(run({"mc", "--n", "3", "--samples", "20000", "--seed", "7", "--format", "json", "--out",
               a.path}) == 0);
    CHECK(run({"mc", "--n", "3", "--samples", "20000", "--seed", "7", "--format", "json", "--out",
               b.path}) == 0);
    std::string sa = slurp(a.path), sb = slurp(b.path);
    CHECK(!sa.empty());
    CHECK(sa == sb);
    auto j = nlohmann::json::parse(sa);
    CHECK(j["n"] == 3);
    CHECK(j["samples"] == 20000);
    CHECK(j["seed"] == 7);
    CHECK(j["counts"].size() == 4);
    CHECK(j.contains("chi2"));
    CHECK(j.contains("p_value"));
}

TEST_CASE("csv output") {
    TempFile tmp("var.csv");
    CHECK(run({"variance", "--n", "6", "--method", "voisum", "--format", "csv", "--out",
               tmp.path}) == 0);
    std::string out = slurp(tmp.path);
    CHECK(out.find("n,a,b,decimal,method") != std::string::npos);
    CHECK(out.find("6,3/2,-1249/320,") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"variance"}) == 2);                        // missing --n
    CHECK(run({"nonsense"}) == 2);                        // unknown subcommand
    CHECK(run({"variance", "--n", "1", "--method", "closed"}) == 2); // n < 2 for closed
    CHECK(run({"dist", "--n", "40"}) == 2);               // out of supported range
}
