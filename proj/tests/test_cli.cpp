#include "support.hpp"

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pipedream/cli.hpp"

using namespace pipedream;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("stats text output") {
    const Run r = run({"stats", "4617352"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "one_line: 4,6,1,7,3,5,2\n"
          "invcode: (3,4,0,3,1,1)\n"
          "rajcode: (4,4,2,3,1,1)\n"
          "rajcode_inv: (4,5,3,1,2)\n"
          "movecode: (1,3,2,0,2)\n"
          "reg: 3\n"
          "ir: x^(3,4,0,3,1,1) x^(3,4,1,3,1,1) x^(3,4,2,3,1,1) x^(4,4,2,3,1,1)\n");
    CHECK(run({"stats", "4,6,1,7,3,5,2"}).out == r.out);
}

TEST_CASE("stats JSON output") {
    const Run r = run({"stats", "516342", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["one_line"] == nlohmann::json({5, 1, 6, 3, 4, 2}));
    CHECK(j["rajcode_inv"] == nlohmann::json({3, 4, 2, 2}));
    CHECK(j["movecode"] == nlohmann::json({0, 2, 1, 2}));
    CHECK(j["reg"] == 2);
    CHECK(j["ir"] == nlohmann::json::parse("[[4,0,3,1,1],[4,1,3,1,1],[4,2,3,1,1]]"));
    CHECK(j["k_weights"] == nlohmann::json::parse("[[4,1,3,1,1],[4,2,3,1,1]]"));
    for (const char* key : {"invcode", "rajcode", "max_pipedream"}) CHECK(j.contains(key));
}

TEST_CASE("maximal, enumerate, poly, ir, render") {
    const Run m = run({"maximal", "14523"});
    CHECK(m.code == 0);
    CHECK(m.out.find("max_pipedream: {(1,2),(1,3),(2,1),(2,3),(3,1),(3,2)}") != std::string::npos);
    CHECK(m.out.find("k_weights: (1,2,2) (2,2,2)") != std::string::npos);
    const Run t = run({"maximal", "14523", "--trace"});
    CHECK(t.out.find("bar=1 col=2 moves=[(2→1,R),(3→2,K)]") != std::string::npos);

    CHECK(run({"enumerate", "132", "--count"}).out == "3\n");
    CHECK(run({"poly", "132", "--single"}).out == "x1*x2 + x2 + x1\n");
    CHECK(run({"poly", "21"}).out == "-x1*y1 + x1 + y1\n");
    CHECK(run({"poly", "132", "--single", "--top"}).out == "x1*x2\n");
    CHECK(run({"ir", "516342"}).out == "x^(4,0,3,1,1)\nx^(4,1,3,1,1)\nx^(4,2,3,1,1)\n");
    CHECK(run({"render", "14523", "--maximal", "--ascii"}).out == ". + + .\n+ . +\n+ +\n.\n");
}

TEST_CASE("exit codes") {
    unsetenv("PIPEDREAM_MAX_N");
    const Run bad = run({"stats", "1243x"});
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.find("position 5") != std::string::npos);
    CHECK(run({"stats", "1223"}).code == exit_usage);
    CHECK(run({"stats", "12", "--bogus"}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
    CHECK(run({"enumerate", "12345678"}).code == exit_guard);
    CHECK(run({"verify", "--n", "6"}).code == exit_guard);
    CHECK(run({"verify", "--n", "3", "--claims", "foo"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("verify output is deterministic") {
    const Run a = run({"verify", "--n", "4"});
    const Run b = run({"verify", "--n", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("all 18 checks passed") != std::string::npos);
    const Run list = run({"verify", "--list"});
    CHECK(list.out.rfind("thm1.1 5\n", 0) == 0);
    const auto j = nlohmann::json::parse(run({"verify", "--n", "3", "--json"}).out);
    CHECK(j["passed"] == true);
}
