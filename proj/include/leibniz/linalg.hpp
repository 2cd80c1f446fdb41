#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

using Vector = std::vector<Rational>;

/// Sparse vector of rationals: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  /// Entries may come in any order; repeated indices are summed.
  explicit SparseVector(std::vector<Entry> entries);

  static SparseVector from_dense(const Vector& v);
  static SparseVector unit(std::size_t index, Rational value = 1);

  Vector to_dense(std::size_t dim) const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  /// One past the largest stored index (0 when empty).
  std::size_t extent() const noexcept { return entries_.empty() ? 0 : entries_.back().first + 1; }

  Rational at(std::size_t index) const;

  /// this += factor * other
  SparseVector& add_scaled(const Rational& factor, const SparseVector& other);
  SparseVector scaled(const Rational& factor) const;

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a.add_scaled(1, b); }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a.add_scaled(-1, b); }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Row-major sparse matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
  static Matrix from_dense(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  /// Throws std::out_of_range outside the matrix.
  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);

  const SparseVector& row(std::size_t r) const;
  void set_row(std::size_t r, SparseVector row);
  void append_row(SparseVector row);

  Matrix transpose() const;
  std::vector<Vector> to_dense() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

/// Matrix-vector product m * v.
Vector multiply(const Matrix& m, const Vector& v);
/// Row-vector product v^T * m.
Vector left_multiply(const Vector& v, const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
/// Throws SingularMatrix (or DimensionMismatch for non-square input).
Matrix inverse(const Matrix& m);

/// Unique reduced row echelon form; zero rows are moved to the bottom so the
/// shape is preserved.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Linear subspace of Q^ambient_dim stored by its canonical RREF basis, so two
/// equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Throws DimensionMismatch when the length differs from ambient_dim.
  bool contains(const Vector& v) const;
  /// Indices must be below ambient_dim (DimensionMismatch otherwise).
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  /// Normal form of v modulo the subspace: v minus its component along the
  /// pivot columns. Zero exactly when v lies in the subspace.
  SparseVector reduce(const SparseVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_pivot_;
};

/// Null space {v : m v = 0}, of dimension cols - rank.
Subspace kernel_basis(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// dim(big) - dim(small); throws NotContained unless small is a subspace of big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

}  // namespace leibniz
