#include <catch_amalgamated.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"
#include "leibniz/labels.hpp"
#include "support.hpp"

using namespace leibniz;

TEST_CASE("algebra documents use 1-based indices and rational strings") {
  const Algebra nf = build(FamilyId::NF, 4);
  const io::Json doc = io::algebra_to_json(nf);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["dim"] == 4);
  CHECK(doc["label"] == "NF");
  REQUIRE(doc["brackets"].size() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    const auto& b = doc["brackets"][r];
    CHECK(b["i"] == r + 1);
    CHECK(b["j"] == 1);
    CHECK(b["coeffs"][std::to_string(r + 2)] == "1");
  }
}

TEST_CASE("round-trip for every catalog algebra") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& [name, a] : testing::catalog_members(n, 5)) {
      INFO(name << " n=" << n);
      const Algebra back = io::parse_algebra(io::emit_algebra(a));
      CHECK(back == a);
      CHECK(back.label() == a.label());
    }
  }
  const Algebra frac = build(FamilyId::lambda, 4, {{"a1", Rational(-7, 3)}, {"a4", Rational(5, 2)}});
  CHECK(io::parse_algebra(io::emit_algebra(frac)) == frac);
}

TEST_CASE("algebra parse accepts integers and omitted fields") {
  const Algebra a = io::parse_algebra(R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {"2": 3}}]})");
  CHECK(a.coeff(0, 0, 1) == 3);
  CHECK(io::parse_algebra(R"({"dim": 3})") == abelian(3));
  // Repeated entries add up.
  const Algebra b = io::parse_algebra(
      R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {"2": "1/2"}}, {"i": 1, "j": 1, "coeffs": {"2": "1/2"}}]})");
  CHECK(b.coeff(0, 0, 1) == 1);
}

TEST_CASE("malformed algebra documents raise ParseError") {
  for (const char* bad : {
           "",
           "not json",
           "[]",
           R"({"brackets": []})",
           R"({"dim": 0})",
           R"({"dim": "3"})",
           R"({"dim": 2, "schema_version": "2"})",
           R"({"dim": 2, "brackets": {}})",
           R"({"dim": 2, "brackets": [{"i": 3, "j": 1, "coeffs": {"1": "1"}}]})",
           R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1"}}]})",
           R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {"3": "1"}}]})",
           R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {"x": "1"}}]})",
           R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {"2": "0.5"}}]})",
           R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {"2": 0.5}}]})",
           R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {"2": "1/0"}}]})",
           R"({"dim": 2, "brackets": [{"i": 1, "coeffs": {"2": "1"}}]})",
           R"({"dim": 2, "label": 5})",
       }) {
    INFO(bad);
    CHECK_THROWS_AS(io::parse_algebra(bad), ParseError);
  }
}

TEST_CASE("cochain documents") {
  const Cochain psi = named_cochain(BaseFamily::F2, 5, CochainLabel::parse("psi_6"));
  const io::Json doc = io::cochain_to_json(psi);
  CHECK(doc["degree"] == 2);
  REQUIRE(doc["values"].size() == 1);
  CHECK(doc["values"][0]["args"] == io::Json::array({5, 5}));
  CHECK(doc["values"][0]["coeffs"]["4"] == "1");
  CHECK(io::parse_cochain(io::emit_cochain(psi)) == psi);

  testing::Rng rng(2);
  for (std::size_t m = 1; m <= 3; ++m) {
    Cochain c(3, m);
    for (int e = 0; e < 10; ++e) {
      std::vector<std::size_t> args(m);
      for (auto& x : args) x = rng.below(3);
      c.add(args, rng.below(3), rng.small());
    }
    CHECK(io::parse_cochain(io::emit_cochain(c)) == c);
  }
  for (const char* bad : {
           R"({"dim": 3})",
           R"({"dim": 3, "degree": 0})",
           R"({"dim": 3, "degree": 9})",
           R"({"dim": 3, "degree": 2, "values": [{"args": [1], "coeffs": {"1": "1"}}]})",
           R"({"dim": 3, "degree": 2, "values": [{"args": [1, 4], "coeffs": {"1": "1"}}]})",
           R"({"dim": 3, "degree": 1, "values": [{"args": [1], "coeffs": {"1": "2.0"}}]})",
       }) {
    INFO(bad);
    CHECK_THROWS_AS(io::parse_cochain(bad), ParseError);
  }
}

TEST_CASE("witness formats") {
  const ParamBasisChange d = io::parse_witness(R"({"diag": ["1", "t", "t^2"]})");
  CHECK(d.matrix()[2][2] == RationalFunction::parse("t^2"));
  CHECK(io::parse_witness(R"(["1", "t", "t^2"])").matrix() == d.matrix());
  CHECK(io::parse_witness(R"({"rows": [["1", "0", "0"], ["0", "t", "0"], ["0", "0", "t^2"]]})").matrix() == d.matrix());
  CHECK(io::parse_witness(R"([["1", 0, 0], [0, "t", 0], [0, 0, "t^2"]])").matrix() == d.matrix());
  CHECK(io::witness_from_json(io::witness_to_json(d)).matrix() == d.matrix());
  for (const char* bad : {
           R"({})",
           R"({"rows": [["1"]], "diag": ["1"]})",
           R"({"diag": []})",
           R"([["1", "0"], ["0"]])",
           R"(["t", "s"])",
           R"(["0.5"])",
           R"(5)",
       }) {
    INFO(bad);
    CHECK_THROWS_AS(io::parse_witness(bad), ParseError);
  }
  // A singular witness is a family error, not a parse error.
  CHECK_THROWS_AS(io::parse_witness(R"(["t", "0"])"), SingularFamily);
}

TEST_CASE("rational values") {
  CHECK(io::parse_rational_value(io::Json("-3/6")) == Rational(-1, 2));
  CHECK(io::parse_rational_value(io::Json(4)) == 4);
  CHECK_THROWS_AS(io::parse_rational_value(io::Json(0.25)), ParseError);
  CHECK_THROWS_AS(io::parse_rational_value(io::Json(true)), ParseError);
  CHECK_THROWS_AS(io::read_input("/nonexistent/file.json"), ParseError);
}
