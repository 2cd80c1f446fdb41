// Shared helpers for the test binaries: a deterministic generator and
// deliberately naive reference implementations used as oracles.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/cochain.hpp"

namespace testing {

using leibniz::Algebra;
using leibniz::Rational;
using leibniz::Vector;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t m) { return g_() % m; }
  Rational small(long span = 4, long max_den = 3) {
    const long num = static_cast<long>(below(static_cast<std::uint64_t>(2 * span + 1))) - span;
    return Rational(num, static_cast<long>(below(static_cast<std::uint64_t>(max_den))) + 1);
  }
  Vector vec(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = small();
    return v;
  }

 private:
  std::mt19937_64 g_;
};

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

// Dense triple sum over the structure constants.
inline Vector naive_bracket(const Algebra& a, const Vector& u, const Vector& v) {
  const std::size_t n = a.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * a.coeff(i, j, k);
    }
  }
  return out;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

// Leibniz test straight from the identity, on dense vectors.
inline bool naive_is_leibniz(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = unit(n, i), y = unit(n, j), z = unit(n, k);
        const Vector lhs = naive_bracket(a, x, naive_bracket(a, y, z));
        const Vector r1 = naive_bracket(a, naive_bracket(a, x, y), z);
        const Vector r2 = naive_bracket(a, naive_bracket(a, x, z), y);
        for (std::size_t l = 0; l < n; ++l) {
          if (lhs[l] != r1[l] - r2[l]) return false;
        }
      }
    }
  }
  return true;
}

// Textbook Gaussian elimination with row swaps on a dense copy.
inline std::size_t dense_rank(std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = r + 1; q < rows.size(); ++q) {
      if (rows[q][c].is_zero()) continue;
      const Rational f = rows[q][c] / rows[r][c];
      for (std::size_t x = c; x < cols; ++x) rows[q][x] -= f * rows[r][x];
    }
    ++r;
  }
  return r;
}

// Dense 2-cocycle test: phi(x,y) in coordinates, d^2 phi evaluated directly.
inline Vector naive_phi(const leibniz::Cochain& phi, const Vector& x, const Vector& y) {
  const std::size_t n = phi.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      for (const auto& [k, c] : phi.value({i, j})) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

// Leibniz members of the catalog at dimension n (one per family plus extra samples).
inline std::vector<std::pair<std::string, Algebra>> catalog_members(std::size_t n, std::uint64_t seed = 1) {
  using leibniz::FamilyId;
  std::vector<std::pair<std::string, Algebra>> out;
  auto add = [&](FamilyId f, const leibniz::ParamMap& m) {
    out.emplace_back(std::string(leibniz::to_string(f)), leibniz::build(f, n, m));
  };
  for (FamilyId f : {FamilyId::NF, FamilyId::F1graded, FamilyId::F2graded, FamilyId::F3graded, FamilyId::R,
                     FamilyId::nu2, FamilyId::nu4}) {
    add(f, {});
  }
  if (n % 2 == 0) add(FamilyId::F3graded, {{"alpha", Rational(1)}});
  for (FamilyId f : {FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::mu_tilde, FamilyId::lambda, FamilyId::nu1,
                     FamilyId::nu3, FamilyId::nu5}) {
    for (const auto& m : leibniz::sample_leibniz_params(f, n, 2, seed + static_cast<std::uint64_t>(f))) add(f, m);
  }
  return out;
}

}  // namespace testing
