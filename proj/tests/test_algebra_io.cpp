#include <catch_amalgamated.hpp>

#include <liekit/algebra_io.hpp>
#include <liekit/family.hpp>

#include <fstream>
#include <sstream>
#include <string>

using namespace liekit;

namespace {

LieAlgebra parsed_algebra(const std::string& text) {
    return std::get<LieAlgebra>(parse_algebra_file(text));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kHeisenberg = R"({
  "dim": 3,
  "brackets": [
    {"left": 1, "right": 2, "terms": [{"target": 3, "coeff": "1"}]}
  ]
})";

}  // namespace

TEST_CASE("a minimal file parses with default labels", "[io]") {
    LieAlgebra g = parsed_algebra(kHeisenberg);
    REQUIRE(g == standard("heisenberg", 3));
    REQUIRE(g.labels() == std::vector<std::string>{"e1", "e2", "e3"});
}

TEST_CASE("render and parse round trip built-in algebras", "[io]") {
    for (const LieAlgebra& g : {standard("heisenberg", 5), standard("abelian", 2),
                                standard("filiform-model", 7), gab(frac(1, 2), -2)}) {
        std::string text = render_algebra(g);
        REQUIRE(parsed_algebra(text) == g);
        // Canonical output: rendering the parse gives the same bytes.
        REQUIRE(render_algebra(parsed_algebra(text)) == text);
        REQUIRE(text.back() == '\n');
    }
}

TEST_CASE("custom basis labels survive the round trip", "[io]") {
    LieAlgebra g = standard("heisenberg", 3);
    g.set_labels({"X", "Y", "Z"});
    LieAlgebra back = parsed_algebra(render_algebra(g));
    REQUIRE(back.labels() == std::vector<std::string>{"X", "Y", "Z"});
    REQUIRE(back == g);
}

TEST_CASE("families parse when params are declared", "[io]") {
    std::string text = render_family(gab_family());
    auto parsed = parse_algebra_file(text);
    REQUIRE(std::holds_alternative<LieFamily>(parsed));
    const LieFamily& fam = std::get<LieFamily>(parsed);
    REQUIRE(fam.params() == std::vector<std::string>{"alpha", "beta"});
    REQUIRE(fam.table() == gab_family().table());
    REQUIRE(render_family(fam) == text);
}

TEST_CASE("the shipped family file matches the built-in table", "[io]") {
    std::string text = slurp(std::string(LIEKIT_DATA_DIR) + "/gab.family.json");
    auto parsed = parse_algebra_file(text);
    REQUIRE(std::holds_alternative<LieFamily>(parsed));
    REQUIRE(std::get<LieFamily>(parsed).table() == gab_family().table());
    REQUIRE(render_family(std::get<LieFamily>(parsed)) == text);
}

TEST_CASE("zero coefficients are dropped in canonical form", "[io]") {
    std::string text = R"({
      "dim": 2,
      "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 1, "coeff": "0"}]}
      ]
    })";
    LieAlgebra g = parsed_algebra(text);
    REQUIRE(g == standard("abelian", 2));
    REQUIRE(render_algebra(g).find("\"brackets\": []") != std::string::npos);
}

TEST_CASE("coefficients may be rational expressions", "[io]") {
    std::string text = R"({
      "dim": 2,
      "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 2, "coeff": "3/4 - 1/4"}]}
      ]
    })";
    LieAlgebra g = parsed_algebra(text);
    REQUIRE(g.structure(0, 1)[1] == frac(1, 2));
}

TEST_CASE("malformed files are rejected with located messages", "[io]") {
    auto reject = [](const std::string& text, const std::string& needle) {
        try {
            parse_algebra_file(text);
            FAIL("expected AlgebraFileError for: " << text);
        } catch (const AlgebraFileError& e) {
            INFO("message: " << e.what());
            REQUIRE(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    reject("[]", "object");
    reject("{ not json", "");
    reject(R"({"brackets": []})", "dim");
    reject(R"({"dim": 2, "brackets": [], "extra": 1})", "extra");
    reject(R"({"dim": -3, "brackets": []})", "dim");
    reject(R"({"dim": 2000, "brackets": []})", "dim");
    reject(R"({"dim": 2, "basis": ["a"], "brackets": []})", "basis");
    reject(R"({"dim": 2, "basis": ["a", "a"], "brackets": []})", "basis");
    reject(R"({"dim": 2, "basis": ["a", ""], "brackets": []})", "basis");
    reject(R"({"dim": 2, "brackets": [{"left": 2, "right": 1, "terms": []}]})", "left");
    reject(R"({"dim": 2, "brackets": [{"left": 1, "right": 3, "terms": []}]})", "right");
    reject(R"({"dim": 2, "brackets": [{"left": 1, "right": 2}]})", "terms");
    reject(R"({"dim": 2, "brackets": [{"left": 1, "right": 2, "terms": [], "x": 0}]})", "x");
    reject(R"({"dim": 3, "brackets": [
        {"left": 1, "right": 2, "terms": []},
        {"left": 1, "right": 2, "terms": []}]})",
           "duplicate");
    reject(R"({"dim": 2, "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 4, "coeff": "1"}]}]})",
           "target");
    reject(R"({"dim": 2, "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 2, "coeff": "1"}, {"target": 2, "coeff": "2"}]}]})",
           "duplicate");
    reject(R"({"dim": 2, "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 2, "coeff": 5}]}]})",
           "coeff");
    reject(R"({"dim": 2, "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 2, "coeff": "2*("}]}]})",
           "brackets[0].terms[0]");
    reject(R"({"dim": 2, "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 2, "coeff": "alpha"}]}]})",
           "alpha");
    reject(R"({"dim": 2, "params": "alpha", "brackets": []})", "params");
    reject(R"({"dim": 2, "params": ["alpha", "alpha"], "brackets": []})", "duplicate parameter");
}

TEST_CASE("undeclared variables are rejected but declared ones accepted", "[io]") {
    std::string text = R"({
      "dim": 2,
      "params": ["t"],
      "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 2, "coeff": "t^2 + 1"}]}
      ]
    })";
    auto parsed = parse_algebra_file(text);
    const LieFamily& fam = std::get<LieFamily>(parsed);
    REQUIRE(fam.params() == std::vector<std::string>{"t"});
    LieAlgebra g = fam.specialize({{"t", Scalar(2)}});
    REQUIRE(g.structure(0, 1)[1] == Scalar(5));
}
