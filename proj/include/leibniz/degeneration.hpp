#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/polynomial.hpp"

namespace leibniz {

using RFMatrix = std::vector<std::vector<RationalFunction>>;

/// Square matrix over Q(t); row i holds g_t(x_i).
class ParamBasisChange {
 public:
  /// Throws DimensionMismatch for a non-square matrix and SingularFamily when
  /// det(g) vanishes identically.
  explicit ParamBasisChange(RFMatrix g);
  static ParamBasisChange identity(std::size_t n);
  /// g_t(x_i) = d_i x_i.
  static ParamBasisChange diagonal(const std::vector<RationalFunction>& d);

  std::size_t dim() const noexcept { return g_.size(); }
  const RFMatrix& matrix() const noexcept { return g_; }
  const RFMatrix& inverse_matrix() const noexcept { return g_inv_; }
  /// Matrix of g at t = t0; throws std::domain_error at a pole.
  Matrix at(const Rational& t0) const;

 private:
  RFMatrix g_;
  RFMatrix g_inv_;
};

/// Algebra whose structure constants are rational functions of t.
class ParamAlgebra {
 public:
  explicit ParamAlgebra(std::size_t dim = 0);
  static ParamAlgebra constant(const Algebra& a);

  std::size_t dim() const noexcept { return dim_; }
  const RationalFunction& entry(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, RationalFunction v);

  /// Throws std::domain_error when some entry has a pole at t0.
  Algebra specialize(const Rational& t0) const;
  /// 0-based (i, j, k) entries whose reduced form has a pole at t = 0.
  std::vector<std::array<std::size_t, 3>> poles_at_zero() const;

  friend bool operator==(const ParamAlgebra&, const ParamAlgebra&) = default;

 private:
  std::size_t dim_;
  std::vector<RationalFunction> sc_;
};

/// [x, y]_t = g_t [g_t^{-1} x, g_t^{-1} y].
ParamAlgebra conjugate_family(const Algebra& a, const ParamBasisChange& g);

/// Evaluation at t = 0 when no entry has a pole there; PoleAtZero otherwise.
Algebra limit_at_zero(const ParamAlgebra& p);

/// The limit exists and equals target's structure constants.
bool degenerates_via(const Algebra& a, const ParamBasisChange& g, const Algebra& target);

}  // namespace leibniz
