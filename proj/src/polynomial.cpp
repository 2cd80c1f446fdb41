#include "leibniz/polynomial.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "leibniz/errors.hpp"

namespace leibniz {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::t() { return monomial(1); }

Polynomial Polynomial::monomial(std::size_t degree, Rational c) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::size_t Polynomial::order_at_zero() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  q = Polynomial();
  const Rational lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const Polynomial term = monomial(shift, r.leading() * lead_inv);
    q += term;
    r -= term * b;
  }
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational inv = leading().inverse();
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= inv;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) mono = k == 1 ? "t" : "t^" + std::to_string(k);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    Polynomial q, r;
    Polynomial::divmod(num_, g, q, r);
    num_ = q;
    Polynomial::divmod(den_, g, q, r);
    den_ = q;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Polynomial scale(lead.inverse());
    num_ *= scale;
    den_ *= scale;
  }
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += RationalFunction(-o.num_, o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string() const {
  auto terms = [](const Polynomial& p) {
    std::size_t count = 0;
    for (const auto& c : p.coefficients()) count += c.is_zero() ? 0 : 1;
    return count;
  };
  if (den_ == Polynomial(Rational(1))) return num_.to_string();
  const std::string n = terms(num_) > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  const std::string d = terms(den_) > 1 ? "(" + den_.to_string() + ")" : den_.to_string();
  return n + "/" + d;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction parse_all() {
    RationalFunction v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse rational function '" + std::string(s_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RationalFunction expr() {
    RationalFunction v = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!peek('^')) return base;
    ++pos_;
    const bool paren = peek('(');
    if (paren) ++pos_;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren) {
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    }
    RationalFunction acc(Rational(1));
    for (long i = 0; i < e; ++i) acc *= base;
    if (negative) {
      if (acc.is_zero()) fail("negative power of zero");
      acc = acc.inverse();
    }
    return acc;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction(Polynomial::t());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) {
        fail("decimal literals are not accepted");
      }
      return RationalFunction(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) { return Parser(text).parse_all(); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace leibniz
