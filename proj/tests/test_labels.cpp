#include <catch_amalgamated.hpp>

#include <algorithm>

#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/labels.hpp"

using namespace leibniz;

namespace {

Cochain single(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  Cochain c(n, 2);
  c.add({i - 1, j - 1}, k - 1, Rational(1));
  return c;
}

}  // namespace

TEST_CASE("label parsing") {
  const auto a = CochainLabel::parse("phi_2_1");
  CHECK(a.kind == CochainLabel::Kind::phi);
  CHECK(a.indices == std::vector<std::size_t>{2, 1});
  CHECK(CochainLabel::parse("phi_{2,1}") == a);
  CHECK(CochainLabel::parse("psi_3").to_string() == "psi_3");
  CHECK(CochainLabel::parse("eta_{4,2}").to_string() == "eta_4_2");
  CHECK(CochainLabel::parse("xi_1").indices == std::vector<std::size_t>{1});
  for (const char* bad : {"zeta_1", "phi_2", "psi_1_2", "psi", "psi_", "psi_x", "phi-2-1", ""}) {
    INFO(bad);
    CHECK_THROWS_AS(CochainLabel::parse(bad), UnknownLabel);
  }
}

TEST_CASE("base families") {
  CHECK(base_family_from_string("F1") == BaseFamily::F1);
  CHECK(base_family_from_string("F2graded") == BaseFamily::F2);
  CHECK(base_family_from_string("F3") == BaseFamily::F3Zero);
  CHECK_THROWS_AS(base_family_from_string("R"), UnknownLabel);
  CHECK(identify_base(build(FamilyId::F2graded, 6)) == BaseFamily::F2);
  CHECK(identify_base(build(FamilyId::F3graded, 4)) == BaseFamily::F3Zero);
  CHECK_THROWS_AS(identify_base(build(FamilyId::R, 5)), UnknownLabel);
  CHECK_THROWS_AS(identify_base(build(FamilyId::F3graded, 4, {{"alpha", Rational(1)}})), UnknownLabel);
}

TEST_CASE("named cochain examples") {
  CHECK(named_cochain(build(FamilyId::F1graded, 5), CochainLabel::parse("xi_2")) == single(5, 1, 2, 5));
  CHECK(named_cochain(build(FamilyId::F2graded, 5), CochainLabel::parse("psi_6")) == single(5, 5, 5, 4));
  CHECK(named_cochain(build(FamilyId::F3graded, 5), CochainLabel::parse("psi_1")) == single(5, 1, 1, 5));
}

TEST_CASE("named cochain errors") {
  CHECK_THROWS_AS(named_cochain(BaseFamily::F1, 5, CochainLabel::parse("psi_9")), IndexOutOfFamilyRange);
  CHECK_THROWS_AS(named_cochain(BaseFamily::F1, 5, CochainLabel::parse("xi_3")), IndexOutOfFamilyRange);
  CHECK_THROWS_AS(named_cochain(BaseFamily::F2, 5, CochainLabel::parse("psi_8")), IndexOutOfFamilyRange);
  CHECK_THROWS_AS(named_cochain(BaseFamily::F2, 5, CochainLabel::parse("xi_1")), UnknownLabel);
  CHECK_THROWS_AS(named_cochain(BaseFamily::F3Zero, 5, CochainLabel::parse("phi_2_1")), UnknownLabel);
  CHECK_THROWS_AS(named_cochain(BaseFamily::F3Zero, 5, CochainLabel::parse("psi_4")), IndexOutOfFamilyRange);
  CHECK_THROWS_AS(named_cochain(build(FamilyId::NF, 4), CochainLabel::parse("psi_2")), UnknownLabel);
}

TEST_CASE("labeled families have the documented sizes") {
  for (std::size_t n = 3; n <= 8; ++n) {
    CHECK(zl2_basis_labels(BaseFamily::F1, n).size() == n * n + n - 1);
    CHECK(zl2_basis_labels(BaseFamily::F2, n).size() == n * n + n);
    CHECK(bl2_basis_labels(BaseFamily::F1, n).size() == n * n - n - 1);
    CHECK(bl2_basis_labels(BaseFamily::F2, n).size() == n * n - n - 2);
    CHECK(hl2_representative_labels(BaseFamily::F1, n).size() == 2 * n);
    CHECK(hl2_representative_labels(BaseFamily::F2, n).size() == 2 * n + 2);
  }
  CHECK(skew_complement_labels().size() == 3);
}

TEST_CASE("integrable and non-integrable F2 label lists partition the cocycle basis") {
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto yes = f2_integrable_labels(n), no = f2_non_integrable_labels(n);
    CHECK(yes.size() + no.size() == n * n + n);
    std::vector<std::string> all;
    for (const auto& l : yes) all.push_back(l.to_string());
    for (const auto& l : no) all.push_back(l.to_string());
    std::vector<std::string> basis;
    for (const auto& l : zl2_basis_labels(BaseFamily::F2, n)) basis.push_back(l.to_string());
    std::sort(all.begin(), all.end());
    std::sort(basis.begin(), basis.end());
    CHECK(all == basis);
  }
}

TEST_CASE("elementary maps") {
  const Cochain f = elementary_map(4, 2, 1);
  CHECK(f.degree() == 1);
  CHECK(f.value({1}) == SparseVector::unit(0));
  CHECK(f.value({0}).empty());
}
