#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class FamilyId {
  NF,
  F1graded,
  F2graded,
  F3graded,
  F1,
  F2,
  F3,
  mu_tilde,
  mu35,
  lambda,
  R,
  nu,
  nu1,
  nu2,
  nu3,
  nu4,
  nu5,
};

std::string_view to_string(FamilyId id);
/// Throws UnknownLabel.
FamilyId family_from_string(std::string_view name);
const std::vector<FamilyId>& all_families();

/// Named rational parameters; names absent from the map are zero.
using ParamMap = std::map<std::string, Rational>;

struct FamilySpec {
  FamilyId id;
  std::size_t n;
  ParamMap params;
};

/// Parameter names accepted by a family at dimension n, in canonical order.
///
///   F3graded          alpha
///   F1                theta, alpha4 .. alpha{n}
///   F2                beta3 .. beta{n-1}, gamma
///   F3                theta1, theta2, theta3, alpha, and t_i_j_k for the free
///                     products [x_i,x_j] (2 <= i < j <= n-1, k >= i+j+1)
///   mu_tilde          alpha2 .. alpha{n}
///   mu35              a1 .. a{n}, b2, b4 .. b{n}, c1, cn
///   lambda            a1 .. a{n}
///   nu                a2 .. a{n}, b1 .. b{n+2}, c1
///   nu1, nu5          a2 .. a{n-1}
///   nu3               b2 .. b{n-1}
std::vector<std::string> parameter_names(FamilyId id, std::size_t n);

/// Builds the family member. Every family except mu35 and nu is validated to
/// be Leibniz; violations of a family's constraints raise BadParams. Indices
/// in the tables below are 1-based as in x_1 .. x_n.
Algebra build(const FamilySpec& spec);
Algebra build(FamilyId id, std::size_t n, const ParamMap& params = {});

Algebra abelian(std::size_t n);

/// Single-generated algebra [x_i,x_1] = x_{i+1} (i <= n-2),
/// [x_{n-1},x_1] = x_n + sum a_k x_k, [x_n,x_1] = x_n, which degenerates to
/// nu1 under x_n -> t x_n. `a` holds a_2 .. a_{n-1}.
Algebra nu1_cover(std::size_t n, const std::vector<Rational>& a);

/// Deterministic Leibniz members of a family: `count` parameter maps accepted
/// by build(). F3 draws its x_n-valued entries from the kernel of the
/// linearized Leibniz constraints; other families use rejection sampling with
/// entries p/q, |p| <= 5, 1 <= q <= 3. Not available for mu35 and nu.
std::vector<ParamMap> sample_leibniz_params(FamilyId id, std::size_t n, std::size_t count, std::uint64_t seed);

/// {prefix}{first} = values[0], {prefix}{first+1} = values[1], ...
ParamMap indexed_params(std::string_view prefix, std::size_t first, const std::vector<Rational>& values);

}  // namespace leibniz
