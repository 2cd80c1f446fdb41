#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Finite-dimensional algebra over Q given by structure constants
/// [x_i, x_j] = sum_k c^k_{ij} x_k. Indices are 0-based in the API.
class Algebra {
 public:
  explicit Algebra(std::size_t dim = 0, std::string label = {});
  /// table[i * dim + j] holds [x_i, x_j].
  Algebra(std::size_t dim, std::vector<SparseVector> table, std::string label = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  Algebra with_label(std::string label) const;

  const SparseVector& product(std::size_t i, std::size_t j) const;
  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<SparseVector>& table() const noexcept { return table_; }
  bool is_abelian() const;

  /// Structure constants only; labels are ignored.
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.dim_ == b.dim_ && a.table_ == b.table_; }

 private:
  std::size_t dim_;
  std::vector<SparseVector> table_;
  std::string label_;
};

class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::size_t dim);

  /// Adds c to the coefficient of x_k in [x_i, x_j].
  AlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  /// Overwrites the coefficient of x_k in [x_i, x_j].
  AlgebraBuilder& set(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  AlgebraBuilder& set_product(std::size_t i, std::size_t j, SparseVector value);
  Rational get(std::size_t i, std::size_t j, std::size_t k) const;

  Algebra build(std::string label = {}) const;
  std::size_t dim() const noexcept { return dim_; }

 private:
  void check(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t dim_;
  std::vector<SparseVector> table_;
};

Vector bracket(const Algebra& a, const Vector& u, const Vector& v);
SparseVector bracket(const Algebra& a, const SparseVector& u, const SparseVector& v);

struct DefectEntry {
  std::size_t i, j, k;
  SparseVector defect;  ///< [x_i,[x_j,x_k]] - [[x_i,x_j],x_k] + [[x_i,x_k],x_j]
};

std::vector<DefectEntry> leibniz_defect(const Algebra& a);
bool is_leibniz(const Algebra& a);
bool is_anticommutative(const Algebra& a);
/// Anticommutative and Leibniz (hence satisfies Jacobi).
bool is_lie(const Algebra& a);

/// {v : [x_i, v] = 0 for every i}.
Subspace right_annihilator(const Algebra& a);

/// Span of [u, w] for u in the basis of left, w in the basis of right.
Subspace product_space(const Algebra& a, const Subspace& left, const Subspace& right);

/// L^1 = L, L^{k+1} = [L^k, L]; stops at the first repeated term, which is
/// included once.
std::vector<Subspace> lower_central_series(const Algebra& a);
/// L^(1) = L, L^(k+1) = [L^(k), L^(k)]; same stopping rule.
std::vector<Subspace> derived_series(const Algebra& a);

/// Smallest k with L^k = 0, if the algebra is nilpotent.
std::optional<std::size_t> nilindex(const Algebra& a);
bool is_nilpotent(const Algebra& a);
bool is_solvable(const Algebra& a);
/// dim L^i = n - i for 2 <= i <= n; false for n < 2.
bool is_filiform(const Algebra& a);

/// Invertible linear map g given by its matrix: row i holds g(x_i).
class BasisChange {
 public:
  /// Throws SingularMatrix or DimensionMismatch.
  explicit BasisChange(Matrix g);

  const Matrix& matrix() const noexcept { return g_; }
  const Matrix& inverse_matrix() const noexcept { return g_inv_; }
  std::size_t dim() const noexcept { return g_.rows(); }
  BasisChange inverse() const;

 private:
  BasisChange(Matrix g, Matrix g_inv) : g_(std::move(g)), g_inv_(std::move(g_inv)) {}
  Matrix g_;
  Matrix g_inv_;
};

/// (g * a)(x, y) = g(a(g^{-1}x, g^{-1}y)).
Algebra apply_basis_change(const Algebra& a, const BasisChange& g);

/// Rewrites a in the basis whose i-th vector is row i of new_basis (old
/// coordinates). Equivalent to apply_basis_change with the inverse matrix.
Algebra change_basis(const Algebra& a, const Matrix& new_basis);

struct GradedDecomposition {
  Algebra graded;                    ///< gr(L) in the adapted basis
  Matrix adapted_basis;              ///< row r = y_r in input coordinates
  std::vector<std::size_t> degrees;  ///< filtration degree of y_r (1-based)
};

/// Throws NotFiliform.
GradedDecomposition graded_decomposition(const Algebra& a);
Algebra associated_graded(const Algebra& a);
/// gr(L) in the adapted basis equals L exactly. Throws NotFiliform.
bool is_naturally_graded_witness(const Algebra& a);

}  // namespace leibniz
