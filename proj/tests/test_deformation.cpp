#include <catch_amalgamated.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/deformation.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/labels.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

Cochain label(BaseFamily f, std::size_t n, const char* name) { return named_cochain(f, n, CochainLabel::parse(name)); }

const std::vector<Rational> kGrid{Rational(1), Rational(2), Rational(-1), Rational(1, 2)};

}  // namespace

TEST_CASE("deform at t = 0 is the base") {
  const Algebra base = build(FamilyId::F1graded, 5);
  const Cochain xi1 = label(BaseFamily::F1, 5, "xi_1");
  CHECK(deform(base, xi1, 0) == base);
  CHECK(deform(LinearDeformation{base, xi1, 0}) == base);
  CHECK_THROWS_AS(deform(base, Cochain(4, 2)), DimensionMismatch);
}

TEST_CASE("F1 + xi_1 is R") {
  for (std::size_t n : {4, 5, 7}) CHECK(deform(build(FamilyId::F1graded, n), label(BaseFamily::F1, n, "xi_1")) == build(FamilyId::R, n));
}

TEST_CASE("F2 + psi_1 is nu2") {
  for (std::size_t n : {4, 5, 6}) CHECK(deform(build(FamilyId::F2graded, n), label(BaseFamily::F2, n, "psi_1")) == build(FamilyId::nu2, n));
}

TEST_CASE("integrability examples on F2_5") {
  const Algebra f2 = build(FamilyId::F2graded, 5);
  CHECK(integrable_linear(f2, label(BaseFamily::F2, 5, "phi_4_3")));
  CHECK_FALSE(integrable_linear(f2, label(BaseFamily::F2, 5, "psi_5")));
  CHECK(integrability(f2, label(BaseFamily::F2, 5, "psi_5")) == Integrability::QuadraticFailure);
  CHECK(integrable_linear(f2, Cochain(5, 2)));

  Cochain non_cocycle(5, 2);
  non_cocycle.add({0, 1}, 0, Rational(1));
  REQUIRE_FALSE(is_cocycle(f2, non_cocycle));
  CHECK(integrability(f2, non_cocycle) == Integrability::NotACocycle);
  CHECK(to_string(Integrability::NotACocycle) != to_string(Integrability::QuadraticFailure));

  CHECK_THROWS_AS(integrability(build(FamilyId::mu35, 5, {{"b2", Rational(1)}}), Cochain(5, 2)), NotLeibniz);
}

TEST_CASE("integrable F2 labels deform to Leibniz algebras on the spot grid") {
  for (std::size_t n = 4; n <= 6; ++n) {
    const Algebra f2 = build(FamilyId::F2graded, n);
    for (const auto& l : f2_integrable_labels(n)) {
      INFO(l.to_string() << " n=" << n);
      const Cochain phi = named_cochain(BaseFamily::F2, n, l);
      REQUIRE(integrable_linear(f2, phi));
      for (const auto& t : kGrid) CHECK(is_leibniz(deform(f2, phi, t)));
    }
    for (const auto& l : f2_non_integrable_labels(n)) {
      INFO(l.to_string() << " n=" << n);
      const Cochain phi = named_cochain(BaseFamily::F2, n, l);
      CHECK_FALSE(integrable_linear(f2, phi));
      CHECK_FALSE(is_leibniz(deform(f2, phi, 1)));
    }
  }
}

TEST_CASE("constraint system examples") {
  const auto r1 = verify_constraint_system(FamilyId::mu35, 5, {{"b4", Rational(1)}});
  CHECK(r1.constraints_hold);
  CHECK(r1.leibniz);
  CHECK(r1.agree());

  const auto r2 = verify_constraint_system(FamilyId::mu35, 5, {{"b2", Rational(1)}});
  CHECK_FALSE(r2.constraints_hold);
  CHECK_FALSE(r2.leibniz);
  CHECK(r2.defect_triples > 0);
  CHECK_FALSE(r2.violated.empty());

  const auto r3 = verify_constraint_system(FamilyId::nu, 5, {{"b7", Rational(1)}});
  CHECK_FALSE(r3.leibniz);
  CHECK_FALSE(r3.constraints_hold);

  CHECK_THROWS_AS(verify_constraint_system(FamilyId::F1, 5, {}), BadParams);
}

TEST_CASE("constraint system agrees with the Leibniz test on samples") {
  for (FamilyId f : {FamilyId::mu35, FamilyId::nu}) {
    for (std::size_t n = 4; n <= 6; ++n) {
      for (bool sat : {true, false}) {
        const auto samples = constraint_samples(f, n, 25, sat, 31 * n + sat);
        REQUIRE(samples.size() == 25);
        for (const auto& p : samples) {
          const auto r = verify_constraint_system(f, n, p);
          INFO(to_string(f) << " n=" << n);
          CHECK(r.constraints_hold == sat);
          CHECK(r.agree());
        }
      }
    }
  }
}

TEST_CASE("property: deform is affine in t") {
  testing::Rng rng(4);
  const Algebra base = build(FamilyId::F1graded, 4);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain phi(4, 2);
    for (int e = 0; e < 6; ++e) phi.add({rng.below(4), rng.below(4)}, rng.below(4), rng.small());
    const Rational t = rng.small();
    const Cochain d1 = deformation_direction(base, deform(base, phi, 1));
    const Cochain dt = deformation_direction(base, deform(base, phi, t));
    CHECK(d1 == phi);
    CHECK(dt == t * d1);
  }
}

TEST_CASE("property: catalog deformations point along cocycles of the base") {
  for (std::size_t n = 4; n <= 7; ++n) {
    INFO("n=" << n);
    const Algebra f1 = build(FamilyId::F1graded, n), f2 = build(FamilyId::F2graded, n);
    const Subspace z1 = zl2(f1), z2 = zl2(f2);
    CHECK(z1.contains(deformation_direction(f1, build(FamilyId::R, n)).flatten()));
    for (const auto& p : sample_leibniz_params(FamilyId::lambda, n, 3, n)) {
      CHECK(z1.contains(deformation_direction(f1, build(FamilyId::lambda, n, p)).flatten()));
    }
    CHECK(z2.contains(deformation_direction(f2, build(FamilyId::nu2, n)).flatten()));
    CHECK(z2.contains(deformation_direction(f2, build(FamilyId::nu4, n)).flatten()));
    for (FamilyId f : {FamilyId::nu1, FamilyId::nu3, FamilyId::nu5}) {
      for (const auto& p : sample_leibniz_params(f, n, 3, n + 40)) {
        CHECK(z2.contains(deformation_direction(f2, build(f, n, p)).flatten()));
      }
    }
  }
}

TEST_CASE("the c1 != 0 branch of the F1 deformation is isomorphic to R") {
  testing::Rng rng(21);
  for (std::size_t n = 5; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      INFO("n=" << n << " trial=" << trial);
      Rational c1;
      while (c1.is_zero()) c1 = rng.small();
      const Rational cn = rng.small();
      ParamMap p{{"c1", c1}, {"cn", cn}};
      std::vector<Rational> b(n + 1);
      for (std::size_t k = 4; k <= n; ++k) {
        b[k] = rng.small();
        p["b" + std::to_string(k)] = b[k];
      }
      const Algebra mu = build(FamilyId::mu35, n, p);
      REQUIRE(is_leibniz(mu));

      // A_4, A_5 closed form, A_i by the recursion.
      std::vector<Rational> A(n + 1);
      const Rational c2 = c1 * c1;
      A[4] = -b[4] / (2 * c2);
      if (n >= 5) A[5] = -b[5] / (3 * c2);
      for (std::size_t i = 6; i <= n; ++i) {
        Rational s = b[i] / c1;
        for (std::size_t j = 4; j <= i - 2; ++j) s += A[j] * b[i + 2 - j];
        A[i] = -s / (Rational(static_cast<long>(i) - 2) * c1);
      }
      Matrix basis(n, n);
      basis.set(0, 0, 1);
      basis.set(0, n - 1, cn / (c1 * Rational(3 - static_cast<long>(n))));
      for (std::size_t i = 2; i <= n; ++i) {
        basis.set(i - 1, i - 1, c1.inverse());
        if (i <= n - 2) {
          for (std::size_t j = i + 2; j <= n; ++j) basis.set(i - 1, j - 1, A[j - i + 2]);
        }
      }
      CHECK(change_basis(mu, basis) == build(FamilyId::R, n));
    }
  }
}
