#include <catch2/catch_amalgamated.hpp>

#include <schubertk/cli.hpp>

#include <cstdlib>
#include <sstream>

using namespace schubertk;
using nlohmann::ordered_json;

namespace {

struct CliResult {
    int code;
    std::string out;
    ordered_json json() const { return ordered_json::parse(out); }
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream os;
    int code = run_cli(args, os);
    return {code, os.str()};
}

} // namespace

TEST_CASE("groth subcommand emits the polynomial", "[cli]") {
    auto r = cli({"groth", "--d", "2", "--lambda", "[1,1]", "--plain"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["basis"] == "plain");
    CHECK(j["lambda"] == ordered_json::array({1, 1}));
    // G_(1,1) = x1 x2 for d = 2
    REQUIRE(j["polynomial"].size() == 1);
    CHECK(j["polynomial"][0]["coeff"] == "1");
    CHECK(j["polynomial"][0]["exps"]["x1"] == 1);
    CHECK(j["polynomial"][0]["exps"]["x2"] == 1);

    auto rf = cli({"groth", "--d", "1", "--lambda", "[1]"});
    REQUIRE(rf.code == 0);
    auto jf = rf.json();
    CHECK(jf["basis"] == "factorial");
    CHECK(jf["parameters"] == 1);
    // x + (1-a1) - x(1-a1) = x*a1 + (1-a1)
    CHECK(jf["polynomial"].size() == 3);
}

TEST_CASE("output is byte-identical across runs", "[cli]") {
    std::vector<std::string> args = {"structconst", "--d", "2", "--n", "4",
                                     "--lambda", "[2,0]", "--mu", "[2,1]", "--u"};
    auto a = cli(args);
    auto b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    auto r = cli({"groth", "--d", "2"});
    CHECK(r.code == 2);
    CHECK(r.json()["error"]["type"] == "Usage");

    auto unk = cli({"groth", "--d", "2", "--lambda", "[1]", "--bogus"});
    CHECK(unk.code == 2);

    auto none = cli({});
    CHECK(none.code == 2);
}

TEST_CASE("domain errors carry a typed error object", "[cli]") {
    auto r = cli({"weights", "validate", "--d", "2", "--n", "4", "[1,1,1,1,2,1]"});
    CHECK(r.code == 2);
    auto j = r.json();
    CHECK(j["error"]["type"] == "NotPluecker");
    CHECK(j["error"]["message"].get<std::string>().size() > 0);

    auto bad = cli({"weights", "validate", "--d", "2", "--n", "4", "[1,1,1]"});
    CHECK(bad.code == 2);
    CHECK(bad.json()["error"]["type"] == "BadInput");

    auto nd = cli({"weights", "validate", "--d", "1", "--n", "3", "[2,3,1]"});
    CHECK(nd.code == 2);
    CHECK(nd.json()["error"]["type"] == "NotDivisive");

    auto shape = cli({"schubert", "--d", "2", "--n", "4", "--lambda", "[3,0]"});
    CHECK(shape.code == 2);
    CHECK(shape.json()["error"]["type"] == "BadInput");
}

TEST_CASE("weights normalize reports scale and residues", "[cli]") {
    auto r = cli({"weights", "normalize", "--d", "2", "--n", "4", "[4,4,4,2,2,2]"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK_FALSE(j.contains("valid")); // only validate reports the flag
    CHECK(j["scale"] == "2");
    CHECK(j["normalized"] == ordered_json::array({"2", "2", "2", "1", "1", "1"}));
    CHECK(j["W"] == ordered_json::array({"1", "0", "0", "0"}));

    auto v = cli({"weights", "validate", "--d", "1", "--n", "4", "[4,2,1,1]"});
    REQUIRE(v.code == 0);
    CHECK(v.json()["valid"] == true);
    CHECK(v.json()["W"] == ordered_json::array({"3", "1", "0", "0"}));
}

TEST_CASE("schubert --check passes on small Grassmannians", "[cli]") {
    auto r = cli({"schubert", "--d", "2", "--n", "4", "--lambda", "[2,1]", "--check"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["check"] == "passed");
    REQUIRE(j["values"].size() == 6);
    // vanishing below [2,1] in containment order
    CHECK(j["values"]["[0,0]"].empty());
    CHECK_FALSE(j["values"]["[2,1]"].empty());

    auto loc = cli({"schubert", "--d", "2", "--n", "4", "--lambda", "[2,1]",
                    "--method", "localize"});
    REQUIRE(loc.code == 0);
    CHECK(loc.json()["values"] == j["values"]);
}

TEST_CASE("localize accepts shapes outside the box", "[cli]") {
    auto r = cli({"localize", "--d", "2", "--n", "4", "--lambda", "[3,0]", "--mu", "[2,2]"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["value"].empty());

    auto lifted = cli({"localize", "--d", "2", "--n", "4", "--lambda", "[1,0]",
                       "--mu", "[2,1]", "--plucker"});
    REQUIRE(lifted.code == 0);
    CHECK_FALSE(lifted.json()["view"].empty());
}

TEST_CASE("structconst emits tables and u-rewrites", "[cli]") {
    auto r = cli({"structconst", "--d", "2", "--n", "4", "--lambda", "[2,0]",
                  "--mu", "[2,1]", "--u"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    REQUIRE(j.contains("table"));
    REQUIRE(j.contains("u_tables"));
    auto top = j["u_tables"]["[2,1]"];
    REQUIRE(top.size() == 4);
    // constant term first in ascending support order
    CHECK(top[0]["coeff"] == "1");
    CHECK(top[0]["I"] == ordered_json::array());
}

TEST_CASE("chevalley --check passes and reports coefficients", "[cli]") {
    auto r = cli({"chevalley", "--d", "2", "--n", "4", "--lambda", "[1,0]", "--check"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["check"] == "passed");
    REQUIRE(j["coefficients"].size() == 4);

    auto z = cli({"chevalley", "--d", "2", "--n", "5", "--lambda", "[0,0]"});
    REQUIRE(z.code == 0);
    REQUIRE(z.json()["coefficients"].size() == 1);
}

TEST_CASE("weighted subcommands run both routes", "[cli]") {
    auto r = cli({"wschubert", "--d", "2", "--n", "4", "--weights", "[2,2,2,1,1,1]",
                  "--lambda", "[2,1]", "--check"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["check"] == "passed");
    CHECK(r.json()["W"] == ordered_json::array({"1", "0", "0", "0"}));

    auto k = cli({"wstructconst", "--d", "2", "--n", "4", "--weights", "[2,2,2,1,1,1]",
                  "--lambda", "[2,0]", "--mu", "[2,1]", "--ordinary", "--positivity"});
    REQUIRE(k.code == 0);
    auto kj = k.json();
    CHECK(kj["check"] == "passed");
    REQUIRE(kj.contains("ordinary"));
    CHECK(kj["positivity"]["alternating"] == true);
    CHECK(kj["positivity"]["summand_signs"] == true);

    auto c = cli({"wchevalley", "--d", "1", "--n", "4", "--weights", "[4,2,1,1]",
                  "--lambda", "[1]", "--ordinary"});
    REQUIRE(c.code == 0);
}

TEST_CASE("twisted-groth derives the twist from a weight vector", "[cli]") {
    auto r = cli({"twisted-groth", "--d", "2", "--lambda", "[1,0]",
                  "--weights", "[2,2,2,1,1,1]", "--n", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["w"] == ordered_json::array({"1", "0", "0", "0"}));

    auto ex = cli({"twisted-groth", "--d", "1", "--lambda", "[1]", "--w", "[1,0]",
                   "--expand"});
    REQUIRE(ex.code == 0);
    auto coeffs = ex.json()["expansion"];
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0]["partition"] == ordered_json::array({1}));
    CHECK(coeffs[0]["coeff"][0]["coeff"] == "2");
    CHECK(coeffs[1]["partition"] == ordered_json::array({2}));
    CHECK(coeffs[1]["coeff"][0]["coeff"] == "-1");

    auto both = cli({"twisted-groth", "--d", "1", "--lambda", "[1]", "--w", "[1]",
                     "--factorial", "--expand"});
    CHECK(both.code == 2);

    auto neither = cli({"twisted-groth", "--d", "1", "--lambda", "[1]"});
    CHECK(neither.code == 2);
}

TEST_CASE("expansion caps come from the flag or the environment", "[cli]") {
    std::vector<std::string> args = {"twisted-groth", "--d", "1", "--lambda", "[2]",
                                     "--w", "[1,0]", "--expand"};
    setenv("SCHUBERT_CAP", "2", 1);
    auto capped = cli(args);
    CHECK(capped.code == 3);
    CHECK(capped.json()["error"]["type"] == "Nonterminating");

    auto flagged = cli({"twisted-groth", "--d", "1", "--lambda", "[2]", "--w", "[1,0]",
                        "--expand", "--cap", "10"});
    CHECK(flagged.code == 0);

    setenv("SCHUBERT_CAP", "junk", 1);
    auto bad = cli(args);
    CHECK(bad.code == 2);
    CHECK(bad.json()["error"]["type"] == "BadInput");

    unsetenv("SCHUBERT_CAP");
    auto clean = cli(args);
    CHECK(clean.code == 0);
}

TEST_CASE("table mode renders text instead of JSON", "[cli]") {
    auto r = cli({"groth", "--d", "2", "--lambda", "[1,1]", "--plain", "--table"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find('{') == std::string::npos);
    CHECK(r.out.find("x1") != std::string::npos);

    auto h = cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("groth") != std::string::npos);
}
