#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Multilinear map L^{x m} -> L with coefficients t^k_{i_1..i_m}.
///
/// Flattened coordinates are lexicographic in (i_1, .., i_m, k), so the flat
/// index is ((i_1 n + i_2) n + ..) n + k. For degree 1 this is the matrix with
/// row i holding f(x_i). Indices are 0-based.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t dim, std::size_t degree);
  static Cochain from_flat(std::size_t dim, std::size_t degree, const SparseVector& flat);
  static Cochain from_flat(std::size_t dim, std::size_t degree, const Vector& flat);
  /// Degree-1 cochain whose row i is f(x_i).
  static Cochain from_matrix(const Matrix& m);
  /// The product of a as a degree-2 cochain.
  static Cochain from_algebra(const Algebra& a);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  /// n^(m+1)
  std::size_t flat_dim() const noexcept { return values_.size() * dim_; }
  /// n^m argument tuples.
  std::size_t tuple_count() const noexcept { return values_.size(); }

  std::size_t tuple_index(const std::vector<std::size_t>& args) const;
  std::vector<std::size_t> tuple_args(std::size_t index) const;

  const SparseVector& value(const std::vector<std::size_t>& args) const;
  const SparseVector& value_at(std::size_t tuple) const { return values_.at(tuple); }
  void set_value(const std::vector<std::size_t>& args, SparseVector v);
  void add(const std::vector<std::size_t>& args, std::size_t k, const Rational& c);

  /// Multilinear evaluation on arbitrary arguments.
  SparseVector evaluate(const std::vector<SparseVector>& args) const;

  SparseVector flatten() const;
  Vector flatten_dense() const { return flatten().to_dense(flat_dim()); }
  Matrix to_matrix() const;
  /// Degree-2 cochain read as a product table.
  Algebra as_algebra() const;

  bool is_zero() const;
  bool is_skew() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Rational& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& c, Cochain a) { return a *= c; }
  friend Cochain operator-(Cochain a) { return a *= Rational(-1); }
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  void check_compatible(const Cochain& o) const;
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::vector<SparseVector> values_;
};

/// d^m f on the adjoint module, evaluated directly from
///   (d f)(x_1..x_{m+1}) = [x_1, f(x_2..)] + sum_{i>=2} (-1)^i [f(..^x_i..), x_i]
///                         + sum_{i<j} (-1)^{j+1} f(x_1..x_{i-1}, [x_i,x_j], x_{i+1}..^x_j..).
Cochain coboundary(const Algebra& a, const Cochain& f);

/// Matrix of d^m : C^m -> C^{m+1} in flattened coordinates
/// (n^{m+2} rows, n^{m+1} columns), assembled entry by entry.
Matrix coboundary_matrix(const Algebra& a, std::size_t degree);

}  // namespace leibniz
