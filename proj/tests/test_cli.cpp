#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "loopkit/json_io.hpp"
#include "loopkit/qkz.hpp"
#include "loopkit_cli.hpp"

using namespace loopkit;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("loopkit");
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult result;
    result.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace

TEST_CASE("exit codes") {
    SUBCASE("success") {
        CHECK(run_cli({"matchings", "--n", "2"}).code == 0);
    }
    SUBCASE("help") {
        CliResult r = run_cli({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("SUBCOMMAND") != std::string::npos);
    }
    SUBCASE("invalid pattern names the offending position") {
        CliResult r = run_cli({"psi", "--pattern", "())("});
        CHECK(r.code == 2);
        CHECK(r.err.find("position 3") != std::string::npos);
    }
    SUBCASE("unknown subcommand") {
        CHECK(run_cli({"frobnicate"}).code == 2);
    }
    SUBCASE("missing required option") {
        CHECK(run_cli({"psi-nested", "--pattern", "(())"}).code == 2);
    }
    SUBCASE("json and csv are mutually exclusive") {
        CHECK(run_cli({"ground-state", "--n", "2", "--json", "--csv"}).code == 2);
    }
    SUBCASE("malformed tau") {
        CHECK(run_cli({"psi", "--pattern", "(())", "--tau", "2/x"}).code == 2);
    }
    SUBCASE("cap breach") {
        CliResult r = run_cli({"matchings", "--n", "9"});
        CHECK(r.code == 4);
        CHECK(r.err.find("--max-n") != std::string::npos);
    }
    SUBCASE("raised cap warns and proceeds") {
        CliResult r = run_cli({"matchings", "--n", "7", "--max-n", "7"});
        CHECK(r.code == 0);
        CHECK(r.err.find("warning") != std::string::npos);
        CHECK(r.out.find("(((((((") != std::string::npos);
    }
    SUBCASE("environment cap") {
        setenv("LOOPKIT_MAX_N", "7", 1);
        CHECK(run_cli({"matchings", "--n", "7"}).code == 0);
        setenv("LOOPKIT_MAX_N", "abc", 1);
        CliResult bad = run_cli({"matchings", "--n", "2"});
        CHECK(bad.code == 2);
        CHECK(bad.err.find("LOOPKIT_MAX_N") != std::string::npos);
        unsetenv("LOOPKIT_MAX_N");
        // an explicit flag beats the environment
        setenv("LOOPKIT_MAX_N", "3", 1);
        CHECK(run_cli({"matchings", "--n", "4", "--max-n", "6"}).code == 0);
        CHECK(run_cli({"matchings", "--n", "4"}).code == 4);
        unsetenv("LOOPKIT_MAX_N");
    }
}

TEST_CASE("ground state JSON matches the frozen size-3 values") {
    CliResult r = run_cli({"ground-state", "--n", "3", "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["sum"] == "7");
    REQUIRE(j["components"].size() == 5);
    CHECK(j["components"][0]["matching"] == "((()))");
    CHECK(j["components"][0]["value"] == "1");
    CHECK(j["components"][1]["matching"] == "(()())");
    CHECK(j["components"][1]["value"] == "2");
}

TEST_CASE("psi JSON round-trips through the polynomial codec") {
    CliResult r = run_cli({"psi", "--pattern", "()()()", "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pattern"] == "()()()");
    CHECK(j["p"] == 0);
    CHECK(j["n"] == 3);
    TauPoly decoded = tau_poly_from_json(j["tau_poly"].dump());
    CHECK(decoded == psi(Matching::parse("()()()")));
}

TEST_CASE("evaluated outputs") {
    SUBCASE("psi at tau=1 prints the bare value") {
        CliResult r = run_cli({"psi", "--pattern", "()()", "--p", "1", "--tau", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "2\n");
    }
    SUBCASE("nilp G at tau=1") {
        CliResult r = run_cli({"nilp", "G", "--p", "1", "--r", "2", "--tau", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "7\n");
    }
    SUBCASE("brute force and determinant methods print identically") {
        CliResult a = run_cli({"nilp", "G", "--p", "1", "--r", "2", "--method", "brute"});
        CliResult b = run_cli({"nilp", "G", "--p", "1", "--r", "2", "--method", "lgv"});
        CliResult c = run_cli({"nilp", "G", "--p", "1", "--r", "2", "--method", "ct"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
    SUBCASE("sum-rule evaluated") {
        CliResult r = run_cli({"sum-rule", "--r", "2", "--tau", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "lhs: 2\nrhs: 2\nequal: yes\n");
    }
}

TEST_CASE("csv quoting follows RFC 4180") {
    CliResult r = run_cli({"matchings", "--n", "2", "--csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "word,openings,young\n"
          "(()),\"1,2\",\n"
          "()(),\"1,3\",1\n");
}

TEST_CASE("fixed invocations are byte-identical across runs and thread counts") {
    std::vector<std::string> base = {"nilp", "G", "--p", "2", "--r", "3", "--json"};
    CliResult first = run_cli(base);
    CliResult second = run_cli(base);
    CHECK(first.out == second.out);

    std::vector<std::string> one = base;
    one.insert(one.end(), {"--threads", "1"});
    std::vector<std::string> four = base;
    four.insert(four.end(), {"--threads", "4"});
    CHECK(run_cli(one).out == run_cli(four).out);
    run_cli({"nilp", "G", "--p", "0", "--r", "1", "--threads", "0"});
}

TEST_CASE("verify suites pass and report per-property lines") {
    CliResult r = run_cli({"verify", "--suite", "zeileq", "--r", "2", "--trials", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  rational identity r=1 (3 trials)") != std::string::npos);
    CHECK(r.out.find("all 2 checks passed") != std::string::npos);

    CliResult j = run_cli({"verify", "--suite", "tl", "--n", "3", "--json"});
    CHECK(j.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["checks"].size() == 2);
    CHECK(parsed["checks"][0]["name"] == "tl relations n=2");
}

TEST_CASE("interpolate human output names the diagram and leading coefficient") {
    CliResult r = run_cli({"interpolate", "--pattern", "()()"});
    CHECK(r.code == 0);
    CHECK(r.out.find("young: [1]  (1 box)") != std::string::npos);
    CHECK(r.out.find("tau=1: n - 1") != std::string::npos);
    CHECK(r.out.find("leading: 1 (expected 1)") != std::string::npos);
}
