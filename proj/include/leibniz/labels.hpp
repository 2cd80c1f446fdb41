#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/cochain.hpp"

namespace leibniz {

/// Base algebras that carry named cochain bases: F^1_n, F^2_n and F^3_n(0).
enum class BaseFamily { F1, F2, F3Zero };

std::string_view to_string(BaseFamily f);
/// Accepts F1, F2, F3 and the catalog names F1graded, F2graded, F3graded.
BaseFamily base_family_from_string(std::string_view name);
Algebra base_algebra(BaseFamily f, std::size_t n);

/// Symbolic cochain name such as phi_2_1, psi_3, xi_1, eta_4_2 (1-based indices).
struct CochainLabel {
  enum class Kind { phi, psi, xi, eta };
  Kind kind;
  std::vector<std::size_t> indices;

  /// Accepts "phi_2_1", "phi_{2,1}", "psi_3", "xi_1". Throws UnknownLabel.
  static CochainLabel parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const CochainLabel&, const CochainLabel&) = default;
};

/// Throws UnknownLabel for names the family does not define and
/// IndexOutOfFamilyRange for indices outside the family's range.
Cochain named_cochain(BaseFamily f, std::size_t n, const CochainLabel& label);
/// Identifies the base family by comparing a with F^1_n, F^2_n and F^3_n(0).
Cochain named_cochain(const Algebra& a, const CochainLabel& label);
/// Family of a among the three bases, or UnknownLabel.
BaseFamily identify_base(const Algebra& a);

/// Labeled basis of ZL^2 for F^1 and F^2.
std::vector<CochainLabel> zl2_basis_labels(BaseFamily f, std::size_t n);
/// Labeled eta basis of BL^2 for F^1 and F^2.
std::vector<CochainLabel> bl2_basis_labels(BaseFamily f, std::size_t n);
/// Representatives of a basis of HL^2 for F^1 and F^2.
std::vector<CochainLabel> hl2_representative_labels(BaseFamily f, std::size_t n);
/// psi_1, psi_2, psi_3 on F^3_n(0): non-skew cocycles completing Z^2 to ZL^2.
std::vector<CochainLabel> skew_complement_labels();

/// Basis cochains of ZL^2(F^2_n) satisfying the quadratic integrability
/// condition, and those that fail it.
std::vector<CochainLabel> f2_integrable_labels(std::size_t n);
std::vector<CochainLabel> f2_non_integrable_labels(std::size_t n);

/// Degree-1 cochain f(x_j) = x_k, other basis vectors to 0 (1-based).
Cochain elementary_map(std::size_t n, std::size_t j, std::size_t k);

}  // namespace leibniz
