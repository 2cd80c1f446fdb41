#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/catalog.hpp"
#include "leibniz/cochain.hpp"

namespace leibniz {

struct LinearDeformation {
  Algebra base;
  Cochain direction;  ///< degree 2
  Rational t = 1;
};

/// Product base + t * direction.
Algebra deform(const LinearDeformation& d);
Algebra deform(const Algebra& base, const Cochain& direction, const Rational& t = 1);

/// The 2-cochain deformed - base.
Cochain deformation_direction(const Algebra& base, const Algebra& deformed);

enum class Integrability { Integrable, NotACocycle, QuadraticFailure };
std::string_view to_string(Integrability r);

/// phi in ZL^2(base) and phi(x,phi(y,z)) - phi(phi(x,y),z) + phi(phi(x,z),y) = 0.
/// The cocycle test runs first. Throws NotLeibniz for a non-Leibniz base.
Integrability integrability(const Algebra& base, const Cochain& phi);
bool integrable_linear(const Algebra& base, const Cochain& phi);

struct ConstraintReport {
  FamilyId family;
  std::size_t n;
  bool constraints_hold = false;  ///< the polynomial system evaluated at the parameters
  bool leibniz = false;           ///< leibniz_defect of the built product is empty
  std::size_t defect_triples = 0;
  std::vector<std::string> violated;  ///< equations that fail, in source order

  bool agree() const { return constraints_hold == leibniz; }
};

/// Supported families: mu35 and nu. Throws BadParams for others.
///
/// mu35:  b2 = 0, c1 a_k = 0, cn a_k = 0, b_i a_k = 0 (4 <= i <= n, 1 <= k <= n).
/// nu:    b_{n+2} = 0, and either b_1 = .. = b_{n+1} = 0 (x_n in Ann_r), or
///        a_n = 0, c1 = -b_n and the reduced system on (a, b).
ConstraintReport verify_constraint_system(FamilyId family, std::size_t n, const ParamMap& params);

/// Only the polynomial side of verify_constraint_system.
bool constraint_system_holds(FamilyId family, std::size_t n, const ParamMap& params,
                             std::vector<std::string>* violated = nullptr);

/// Deterministic parameter samples: `count` maps that satisfy the system
/// (satisfying = true) or violate it, drawn from small rationals.
std::vector<ParamMap> constraint_samples(FamilyId family, std::size_t n, std::size_t count, bool satisfying,
                                         std::uint64_t seed);

}  // namespace leibniz
