#include "leibniz/degeneration.hpp"

#include <stdexcept>
#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

// Gauss-Jordan over Q(t); every nonzero element is a unit.
RFMatrix invert(const RFMatrix& g) {
  const std::size_t n = g.size();
  RFMatrix a = g;
  RFMatrix inv(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = RationalFunction(Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularFamily("basis change family has identically zero determinant");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const RationalFunction scale = a[col][col].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const RationalFunction f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        if (!a[col][c].is_zero()) a[r][c] -= f * a[col][c];
        if (!inv[col][c].is_zero()) inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

ParamBasisChange::ParamBasisChange(RFMatrix g) : g_(std::move(g)) {
  for (const auto& row : g_) {
    if (row.size() != g_.size()) throw DimensionMismatch("basis change family must be square");
  }
  g_inv_ = invert(g_);
}

ParamBasisChange ParamBasisChange::identity(std::size_t n) {
  std::vector<RationalFunction> d(n, RationalFunction(Rational(1)));
  return diagonal(d);
}

ParamBasisChange ParamBasisChange::diagonal(const std::vector<RationalFunction>& d) {
  RFMatrix g(d.size(), std::vector<RationalFunction>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
  return ParamBasisChange(std::move(g));
}

Matrix ParamBasisChange::at(const Rational& t0) const {
  const std::size_t n = g_.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!g_[i][j].is_zero()) m.set(i, j, g_[i][j].eval(t0));
    }
  }
  return m;
}

ParamAlgebra::ParamAlgebra(std::size_t dim) : dim_(dim), sc_(dim * dim * dim) {}

ParamAlgebra ParamAlgebra::constant(const Algebra& a) {
  ParamAlgebra p(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& [k, c] : a.product(i, j)) p.set(i, j, k, RationalFunction(c));
    }
  }
  return p;
}

const RationalFunction& ParamAlgebra::entry(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index out of range");
  return sc_[(i * dim_ + j) * dim_ + k];
}

void ParamAlgebra::set(std::size_t i, std::size_t j, std::size_t k, RationalFunction v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index out of range");
  sc_[(i * dim_ + j) * dim_ + k] = std::move(v);
}

Algebra ParamAlgebra::specialize(const Rational& t0) const {
  AlgebraBuilder b(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const RationalFunction& f = entry(i, j, k);
        if (!f.is_zero()) b.set(i, j, k, f.eval(t0));
      }
    }
  }
  return b.build();
}

std::vector<std::array<std::size_t, 3>> ParamAlgebra::poles_at_zero() const {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (entry(i, j, k).has_pole_at_zero()) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

ParamAlgebra conjugate_family(const Algebra& a, const ParamBasisChange& g) {
  const std::size_t n = a.dim();
  if (g.dim() != n) throw DimensionMismatch("basis change family dimension differs from algebra dimension");
  const RFMatrix& m = g.matrix();
  const RFMatrix& minv = g.inverse_matrix();
  ParamAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // w = [g^{-1} x_i, g^{-1} x_j] in old coordinates.
      std::vector<RationalFunction> w(n);
      for (std::size_t p = 0; p < n; ++p) {
        if (minv[i][p].is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (minv[j][q].is_zero()) continue;
          const SparseVector& prod = a.product(p, q);
          if (prod.empty()) continue;
          const RationalFunction coef = minv[i][p] * minv[j][q];
          for (const auto& [k, c] : prod) w[k] += coef * RationalFunction(c);
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (w[k].is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (m[k][l].is_zero()) continue;
          out.set(i, j, l, out.entry(i, j, l) + w[k] * m[k][l]);
        }
      }
    }
  }
  return out;
}

Algebra limit_at_zero(const ParamAlgebra& p) {
  const auto poles = p.poles_at_zero();
  if (!poles.empty()) {
    std::string list;
    for (const auto& e : poles) {
      if (!list.empty()) list += ", ";
      list += "[x" + std::to_string(e[0] + 1) + ",x" + std::to_string(e[1] + 1) + "] on x" + std::to_string(e[2] + 1);
    }
    throw PoleAtZero("structure constants blow up at t = 0: " + list, poles);
  }
  return p.specialize(Rational(0));
}

bool degenerates_via(const Algebra& a, const ParamBasisChange& g, const Algebra& target) {
  if (target.dim() != a.dim()) return false;
  try {
    return limit_at_zero(conjugate_family(a, g)) == target;
  } catch (const PoleAtZero&) {
    return false;
  }
}

}  // namespace leibniz
