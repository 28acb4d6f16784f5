#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "glci/error.hpp"
#include "glci_cli/cli.hpp"
#include "json.hpp"

using namespace glci;
using namespace glci::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "glci");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("weight parsing") {
    CHECK(parse_weights("2,3,5") == std::vector<int>{2, 3, 5});
    CHECK(parse_weights("-").empty());
    CHECK_THROWS_AS(parse_weights("2,x"), InvalidInput);
    CHECK_THROWS_AS(parse_weights("2,,3"), InvalidInput);
    CHECK_THROWS_AS(parse_weights("2,3,"), InvalidInput);
    CHECK_THROWS_AS(parse_weights(""), InvalidInput);
    RunConfig cfg;
    parse_lambda_flag("generic:3", cfg);
    CHECK(cfg.lambda_source == LambdaSource::Generic);
    CHECK(cfg.lambda_seed == 3);
    CHECK_THROWS_AS(parse_lambda_flag("generic:x", cfg), InvalidInput);
}

TEST_CASE("info and classify") {
    const auto r = invoke({"info", "--dim", "1", "--weights", "2,3,5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("trichotomy: Fano") != std::string::npos);
    CHECK(r.out.find("cm_finite: yes") != std::string::npos);
    CHECK(r.out.find("k0_rank: 9") != std::string::npos);
    CHECK(r.out.find("cm_rank: 8") != std::string::npos);
    CHECK(r.out.find("orlov_delta: 1") != std::string::npos);

    const auto j = invoke({"info", "--dim", "2", "--weights", "2,2,3,4", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["k0_rank"] == 34);
    CHECK(parsed["cosets"]["count"] == "28");
    CHECK(parsed["d_cm_finite"] == "Sufficient");

    const auto s = invoke({"classify", "--dim", "2", "--weights", "2,2,3,4", "--slice", "--knoerrer"});
    CHECK(s.code == 0);
    CHECK(s.out.find("|S| = 28") != std::string::npos);
    CHECK(s.out.find("(d=3,(2,2,2,3,4))") != std::string::npos);
    CHECK(invoke({"classify", "--dim", "2", "--weights", "2,3", "--slice"}).code == 2);
}

TEST_CASE("coxeter output") {
    const auto r = invoke({"coxeter", "--dim", "2", "--weights", "2,3", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "(1-t)^3 (1+t)^2 (1+t+t^2)^2 (1-t+t^2)");
    CHECK(r.out.find("degree: 11") != std::string::npos);
    const auto m = invoke({"coxeter", "--dim", "2", "--weights", "2,3", "--check-matrix", "--format", "json"});
    CHECK(m.code == 0);
    CHECK(nlohmann::json::parse(m.out)["matrix_check"]["agrees"] == true);
    CHECK(invoke({"coxeter", "--dim", "1", "--weights", "-"}).out.find("(1-t)^2") == 0);
}

TEST_CASE("matrix factorization output") {
    const auto r = invoke({"mf", "--dim", "1", "--weights", "2,3,5", "--verify"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "8 factorizations, all identities verified");
    const auto e = invoke({"mf", "--dim", "2", "--weights", "2,2,3,4"});
    CHECK(first_line(e.out) == "6 indices");
    const auto one = invoke({"mf", "--dim", "1", "--weights", "2,3,5", "--ell", "1,2,3", "--minors", "--format", "json"});
    REQUIRE(one.code == 0);
    const auto j = nlohmann::json::parse(one.out);
    CHECK(j["M"].size() == 4);
    CHECK(j["M"][0][0][0]["coeff"] == "-1");
    CHECK(j["verified"] == true);
    CHECK(j["minor"]["nonsingular"] == true);
    CHECK(invoke({"mf", "--dim", "1", "--weights", "2,3"}).code == 2);
    CHECK(invoke({"mf", "--dim", "1", "--weights", "2,3,5", "--ell", "2,1,1"}).code == 2);
}

TEST_CASE("quiver export") {
    const auto kron = invoke({"quiver", "--dim", "1", "--weights", "-", "--format", "dot"});
    CHECK(kron.code == 0);
    CHECK(count(kron.out, "[label=\"(") == 2);
    CHECK(count(kron.out, "->") == 2);
    CHECK(count(kron.out, "dashed") == 0);

    const auto cube = invoke({"quiver", "--dim", "1", "--weights", "3,3,3", "--interval", "cm", "--format", "dot"});
    CHECK(cube.code == 0);
    CHECK(count(cube.out, "[label=\"(") == 8);
    CHECK(count(cube.out, "->") == 12);

    const auto empty = invoke({"quiver", "--dim", "2", "--weights", "2,3", "--interval", "cm", "--format", "dot"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "digraph quiver {\n  rankdir=LR;\n}\n");

    const auto range = invoke({"quiver", "--dim", "1", "--weights", "2,3,3", "--interval", "range", "--from", "0,0,0;0",
                               "--to", "0,1,1;0"});
    CHECK(range.code == 0);
    CHECK(first_line(range.out) == "vertices: 4");

    const auto gl = invoke({"quiver", "--dim", "1", "--weights", "2,2,2", "--gldim"});
    CHECK(gl.code == 0);
    CHECK(gl.out.find("global dimension: 2") != std::string::npos);
}

TEST_CASE("quiver JSON round trip") {
    RationalMatrix l(3, 2);
    l(0, 0) = 1;
    l(1, 1) = 1;
    l(2, 0) = Rational(2, 3);
    l(2, 1) = -5;
    for (const auto& w : {make_weight_system(1, {2, 3, 5}), make_weight_system(2, {}), make_weight_system(2, {2, 2, 3, 4}),
                          make_weight_system(1, {2, 3, 5}, l)}) {
        const auto q = i_canonical_quiver(w, canonical_interval(w));
        CHECK(quiver_from_json(export_quiver(q, Format::Json)) == q);
    }
    CHECK_THROWS_AS(quiver_from_json("{"), InvalidInput);
    CHECK_THROWS_AS(quiver_from_json(R"({"d":1,"weights":[],"vertices":[],"arrows":[{"from":0,"to":1,"label":1}],"relations":[]})"),
                    InvalidInput);
    CHECK_THROWS_AS(quiver_from_json(R"({"d":1,"weights":[2],"vertices":[{"torsion":[3],"free":0}],"arrows":[],"relations":[]})"),
                    InvalidInput);
}

TEST_CASE("hyperplane coefficients from a file") {
    const std::string good = "glci_test_lambda_good.json", bad = "glci_test_lambda_bad.json";
    std::ofstream(good) << R"({"lambda": [[1,0],[0,1],["1/2",3]]})";
    std::ofstream(bad) << R"([[1,0],[0,1],[1,0]])";
    const auto ok = invoke({"quiver", "--dim", "1", "--weights", "2,3,5", "--lambda", good});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("-1/2*[1,1]") != std::string::npos);
    CHECK(invoke({"quiver", "--dim", "1", "--weights", "2,3,5", "--lambda", bad}).code == 2);
    CHECK(invoke({"quiver", "--dim", "1", "--weights", "2,3,5", "--lambda", "missing.json"}).code == 2);
    CHECK(invoke({"quiver", "--dim", "1", "--weights", "2,3,5", "--lambda", "generic:0", "--gldim"}).code == 0);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("atilde output") {
    const auto r = invoke({"atilde", "--dim", "2", "--weights", "2,3,4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices: 26") != std::string::npos);
    CHECK(r.out.find("walks: 156 checked, 0 failed") != std::string::npos);
    const auto dot = invoke({"atilde", "--dim", "2", "--weights", "-", "--format", "dot"});
    CHECK(count(dot.out, "dashed") == 3);
    CHECK(invoke({"atilde", "--dim", "1", "--weights", "2,3,5"}).code == 2);
}

TEST_CASE("enumeration output") {
    const auto r = invoke({"enumerate", "--dim", "2", "--n", "6", "--class", "cy"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sporadic (1):\n  (2,2,2,2,2,2)") != std::string::npos);
    const auto f = invoke({"enumerate", "--dim", "2", "--n", "4", "--format", "json"});
    CHECK(nlohmann::json::parse(f.out)["infinite_families"].size() == 7);
    CHECK(invoke({"enumerate", "--dim", "2", "--n", "4", "--class", "anti"}).code == 2);
}

TEST_CASE("suite") {
    const auto one = invoke({"suite", "--only", "mf", "--dim", "2", "--weights", "2,2,3,4"});
    CHECK(one.code == 0);
    CHECK(one.out.find("6 factorizations verified") != std::string::npos);
    const auto small = invoke({"suite", "--max-d", "1", "--max-product", "30", "--only", "coxeter,atilde"});
    CHECK(small.code == 0);
    CHECK(small.out.find(" 0 failed") != std::string::npos);
    CHECK(invoke({"suite", "--only", "nothing"}).code == 2);
}

TEST_CASE("exit codes and determinism") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({"info", "--weights", "2,3"}).code == 2);
    CHECK(invoke({"info", "--dim", "0", "--weights", "2,3"}).code == 2);
    CHECK(invoke({"info", "--dim", "1", "--weights", "2,x"}).code == 2);
    CHECK(invoke({"info", "--dim", "1", "--weights", "2,3", "--format", "dot"}).code == 2);
    CHECK(invoke({"info", "--dim", "1", "--weights", "2,3", "--format", "yaml"}).code == 2);
    const std::vector<std::string> args{"quiver", "--dim", "2", "--weights", "2,2,3,4", "--format", "json"};
    CHECK(invoke(args).out == invoke(args).out);
}
