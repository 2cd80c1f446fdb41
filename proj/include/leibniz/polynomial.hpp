#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Univariate polynomial in t over Q; coefficients[i] multiplies t^i, no
/// trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial t();
  static Polynomial monomial(std::size_t degree, Rational c = 1);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }
  Rational eval(const Rational& x) const;
  /// Exponent of the largest power of t dividing the polynomial (zero: 0).
  std::size_t order_at_zero() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division; throws std::domain_error for a zero divisor.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  /// Monic gcd (zero when both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Reduced quotient num/den with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  /// Throws std::domain_error for a zero denominator.
  RationalFunction(Polynomial num, Polynomial den);

  /// Grammar: integer literals, the symbol t, + - * / ^ (integer exponents,
  /// negative allowed), parentheses, implicit product ("2t", "3(t+1)").
  /// Decimals are rejected. Throws ParseError.
  static RationalFunction parse(std::string_view text);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

  bool has_pole_at(const Rational& x) const { return den_.eval(x).is_zero(); }
  bool has_pole_at_zero() const { return den_.coefficient(0).is_zero(); }
  /// Throws std::domain_error at a pole.
  Rational eval(const Rational& x) const;

  RationalFunction inverse() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction() - a; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace leibniz
