#include "leibniz/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("not a rational literal: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  const Integer d = to_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(to_integer(num), d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace leibniz
