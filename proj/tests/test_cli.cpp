#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "quot/cli.hpp"
#include "quot/model.hpp"

using namespace quot;
using nlohmann::json;

namespace {

CliResult run(std::initializer_list<std::string> args) { return run_cli(std::vector<std::string>(args)); }

} // namespace

TEST_CASE("dump-model output re-loads to an identical model for every builtin") {
    for (const char* name : {"circle:1,-1", "circle:1,0,-1", "circle:0,1,2,3",
                                    "circle:1,1,1,0,0,-1,-1,-1", "su2_p1n:3", "su2_pn:4", "su2_pn:5"}) {
        CliResult r = run({"pair", "--builtin", name, "--dump-model"});
        REQUIRE(r.exit_code == 0);
        ActionModel reloaded = load_model_json(r.output);
        CHECK(reloaded == model_from_builtin_name(name));
    }
}

TEST_CASE("plain and json outputs agree and are byte-deterministic") {
    CliResult plain1 = run({"pair", "--builtin", "circle:1,-1", "--eta", "1", "--mode", "regular"});
    CliResult plain2 = run({"pair", "--builtin", "circle:1,-1", "--eta", "1", "--mode", "regular"});
    REQUIRE(plain1.exit_code == 0);
    CHECK(plain1.output == plain2.output);
    CHECK(plain1.output.find("value: 1\n") != std::string::npos);

    CliResult j = run({"pair", "--builtin", "circle:1,-1", "--eta", "1", "--format", "json"});
    REQUIRE(j.exit_code == 0);
    json parsed = json::parse(j.output);
    CHECK(parsed.at("values").at("value").get<std::string>() == "1");
    CHECK(parsed.at("provenance").get<std::string>().find("residue formula") != std::string::npos);
}

TEST_CASE("regular mode refuses strictly semistable models with exit code 2") {
    CliResult r = run({"pair", "--builtin", "su2_pn:4", "--eta", "xi", "--mode", "regular"});
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("strictly semistable") != std::string::npos);
}

TEST_CASE("desing mode reports the correction residue") {
    CliResult r = run({"pair", "--builtin", "su2_pn:4", "--eta", "xi", "--mode", "desing"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("correction residue = 0") != std::string::npos);
}

TEST_CASE("pair on su2_pn:5 with xi^4") {
    CliResult r = run({"pair", "--builtin", "su2_pn:5", "--eta", "xi^4", "--mode", "regular", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.output);
    CHECK(parsed.at("values").at("value").get<std::string>() == "0");
}

TEST_CASE("ih betti and matrix output") {
    CliResult betti = run({"ih", "--weights", "1,1,1,0,0,-1,-1,-1", "--what", "betti", "--format", "json"});
    REQUIRE(betti.exit_code == 0);
    json parsed = json::parse(betti.output);
    CHECK(parsed.at("values").at("betti") == json::array({1, 2, 3, 3, 3, 2, 1}));

    CliResult m = run({"ih", "--weights", "1,1,1,0,0,-1,-1,-1", "--what", "matrix:6", "--format", "json"});
    REQUIRE(m.exit_code == 0);
    json pm = json::parse(m.output);
    CHECK(pm.at("values").at("matrix") ==
          json::parse(R"([["1","0","-1/3"],["0","-1/3","0"],["-1/3","0","1"]])"));
    CHECK(pm.at("values").at("row_basis") == json::parse(R"(["xi*rho^2","xi^2*rho","xi^3"])"));

    CliResult tex = run({"ih", "--weights", "1,1,1,0,0,-1,-1,-1", "--what", "matrix:6", "--format", "latex"});
    REQUIRE(tex.exit_code == 0);
    CHECK(tex.output.find("\\begin{pmatrix}") != std::string::npos);
    CHECK(tex.output.find("-\\frac{1}{3}") != std::string::npos);

    CliResult bad = run({"ih", "--weights", "1,1,-1", "--what", "vm"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("weakly balanced") != std::string::npos);
}

TEST_CASE("poincare command produces the palindromic ip coefficients") {
    CliResult r = run({"poincare", "--family", "pn", "--n", "8", "--which", "ip", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.output);
    auto coeffs = parsed.at("values").at("even_coefficients");
    // degrees 0..10 carry 1,1,2,2,1,1; everything above the top degree is 0
    std::vector<std::string> head(coeffs.begin(), coeffs.begin() + 6);
    CHECK(head == std::vector<std::string>{"1", "1", "2", "2", "1", "1"});
    for (size_t i = 6; i < coeffs.size(); ++i) CHECK(coeffs[i].get<std::string>() == "0");
}

TEST_CASE("witten command reports a genuine half power for circle:0,1,2,3") {
    CliResult r = run({"witten", "--builtin", "circle:0,1,2,3", "--eta", "rho", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.output);
    bool found = false;
    for (const auto& term : parsed.at("values").at("terms")) {
        if (term.at("sqrt_eps_exponent") == 1 && term.at("plain").get<std::string>() != "0") found = true;
    }
    CHECK(found);
    CHECK(parsed.at("values").at("polynomial").get<std::string>().find("eps^(1/2)") != std::string::npos);
}

TEST_CASE("residue command evaluates a term file") {
    std::string path = (std::filesystem::temp_directory_path() / "quotpair_cli_test_terms.json").string();
    {
        std::ofstream out(path);
        out << R"({
          "variables": 1,
          "convention": "real",
          "terms": [
            {"numerator": {"0": [1, 1]}, "exponent": [[2, 1]], "denominator": [{"form": [[1, 1]], "mult": 1}]}
          ]
        })";
    }
    CliResult r = run({"residue", "--terms", path, "--chamber", "1", "--rho", "-1", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.output);
    CHECK(parsed.at("values").at("value").get<std::string>() == "1");

    CliResult missing = run({"residue", "--terms", "no_such_file.json", "--chamber", "1"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("torus model files evaluate through the multivariable residue") {
    // T^2 on P^1 x P^1, each factor with weights (1, -1); the quotient is a
    // product of point quotients, so pairing 1 gives 1 with scale 4.
    std::string path = (std::filesystem::temp_directory_path() / "quotpair_cli_torus.json").string();
    {
        std::ofstream out(path);
        out << R"({
          "rank": 2, "group": "torus",
          "constants": {"n0": 4, "n0T": 4, "weyl": 1, "s": 2, "nplus": 0, "residue_scale": [4, 1]},
          "generators": ["a", "b"],
          "positive_roots": [],
          "components": [
            {"id": "pp", "moment": [[1,1],[1,1]],
             "normal_weights": [[[-2,1],[0,1]], [[0,1],[-2,1]]],
             "restriction": {"a": {"1,0": [1,1]}, "b": {"0,1": [1,1]}}},
            {"id": "pm", "moment": [[1,1],[-1,1]],
             "normal_weights": [[[-2,1],[0,1]], [[0,1],[2,1]]],
             "restriction": {"a": {"1,0": [1,1]}, "b": {"0,1": [-1,1]}}},
            {"id": "mp", "moment": [[-1,1],[1,1]],
             "normal_weights": [[[2,1],[0,1]], [[0,1],[-2,1]]],
             "restriction": {"a": {"1,0": [-1,1]}, "b": {"0,1": [1,1]}}},
            {"id": "mm", "moment": [[-1,1],[-1,1]],
             "normal_weights": [[[2,1],[0,1]], [[0,1],[2,1]]],
             "restriction": {"a": {"1,0": [-1,1]}, "b": {"0,1": [-1,1]}}}
          ]
        })";
    }
    CliResult r = run({"pair", "--model", path, "--eta", "1", "--mode", "regular", "--chamber", "1,1/3",
                       "--format", "json"});
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.output).at("values").at("value").get<std::string>() == "1");
    // without a chamber the torus path is a validation error
    CliResult bad = run({"pair", "--model", path, "--eta", "1", "--mode", "regular"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("help output is available") {
    CliResult r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pair") != std::string::npos);
}

TEST_CASE("abelian mode honors an explicit shift") {
    CliResult r = run({"pair", "--builtin", "circle:1,-1", "--eta", "1", "--mode", "abelian",
                       "--shift", "1/2", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.output);
    CHECK(parsed.at("values").at("value").get<std::string>() == "1");
    CHECK(parsed.at("values").at("shift").get<std::string>() == "1/2");
    // a critical shift is refused
    CliResult bad = run({"pair", "--builtin", "circle:1,-1", "--eta", "1", "--mode", "abelian", "--shift", "1"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("expression errors exit with code 2") {
    CliResult r = run({"pair", "--builtin", "circle:1,-1", "--eta", "xi + ("});
    CHECK(r.exit_code == 2);
    CliResult unknown = run({"pair", "--builtin", "circle:1,-1", "--eta", "zeta"});
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.output.find("unknown generator") != std::string::npos);
}
