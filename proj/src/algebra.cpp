#include "leibniz/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

Algebra::Algebra(std::size_t dim, std::string label)
    : dim_(dim), table_(dim * dim), label_(std::move(label)) {}

Algebra::Algebra(std::size_t dim, std::vector<SparseVector> table, std::string label)
    : dim_(dim), table_(std::move(table)), label_(std::move(label)) {
  if (table_.size() != dim * dim) throw DimensionMismatch("structure table must have dim^2 products");
  for (const auto& p : table_) {
    if (p.extent() > dim) throw DimensionMismatch("structure constant index out of range");
  }
}

Algebra Algebra::with_label(std::string label) const {
  Algebra out = *this;
  out.label_ = std::move(label);
  return out;
}

const SparseVector& Algebra::product(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
  return table_[i * dim_ + j];
}

Rational Algebra::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (k >= dim_) throw std::out_of_range("basis index out of range");
  return product(i, j).at(k);
}

bool Algebra::is_abelian() const {
  for (const auto& p : table_) {
    if (!p.empty()) return false;
  }
  return true;
}

AlgebraBuilder::AlgebraBuilder(std::size_t dim) : dim_(dim), table_(dim * dim) {}

void AlgebraBuilder::check(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw std::out_of_range("basis index out of range for dimension " + std::to_string(dim_));
  }
}

AlgebraBuilder& AlgebraBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  check(i, j, k);
  table_[i * dim_ + j].add_scaled(1, SparseVector::unit(k, c));
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  check(i, j, k);
  return add(i, j, k, c - get(i, j, k));
}

AlgebraBuilder& AlgebraBuilder::set_product(std::size_t i, std::size_t j, SparseVector value) {
  check(i, j, 0);
  if (value.extent() > dim_) throw DimensionMismatch("product has index out of range");
  table_[i * dim_ + j] = std::move(value);
  return *this;
}

Rational AlgebraBuilder::get(std::size_t i, std::size_t j, std::size_t k) const {
  check(i, j, k);
  return table_[i * dim_ + j].at(k);
}

Algebra AlgebraBuilder::build(std::string label) const { return Algebra(dim_, table_, std::move(label)); }

SparseVector bracket(const Algebra& a, const SparseVector& u, const SparseVector& v) {
  if (u.extent() > a.dim() || v.extent() > a.dim()) throw DimensionMismatch("bracket argument out of range");
  SparseVector out;
  for (const auto& [i, ui] : u) {
    for (const auto& [j, vj] : v) {
      const SparseVector& p = a.product(i, j);
      if (!p.empty()) out.add_scaled(ui * vj, p);
    }
  }
  return out;
}

Vector bracket(const Algebra& a, const Vector& u, const Vector& v) {
  if (u.size() != a.dim() || v.size() != a.dim()) throw DimensionMismatch("bracket arguments must have length dim");
  return bracket(a, SparseVector::from_dense(u), SparseVector::from_dense(v)).to_dense(a.dim());
}

std::vector<DefectEntry> leibniz_defect(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<DefectEntry> out;
  for (std::size_t i = 0; i < n; ++i) {
    const SparseVector xi = SparseVector::unit(i);
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector xj = SparseVector::unit(j);
      for (std::size_t k = 0; k < n; ++k) {
        const SparseVector xk = SparseVector::unit(k);
        SparseVector d = bracket(a, xi, a.product(j, k));
        d.add_scaled(-1, bracket(a, a.product(i, j), xk));
        d.add_scaled(1, bracket(a, a.product(i, k), xj));
        if (!d.empty()) out.push_back({i, j, k, std::move(d)});
      }
    }
  }
  return out;
}

bool is_leibniz(const Algebra& a) { return leibniz_defect(a).empty(); }

bool is_anticommutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (!(a.product(i, j) + a.product(j, i)).empty()) return false;
    }
  }
  return true;
}

bool is_lie(const Algebra& a) { return is_anticommutative(a) && is_leibniz(a); }

Subspace right_annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  // Row (i, k): sum_j v_j c^k_{ij} = 0.
  std::vector<std::vector<SparseVector::Entry>> rows(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.product(i, j)) rows[i * n + k].emplace_back(j, c);
    }
  }
  Matrix m(0, n);
  for (auto& r : rows) m.append_row(SparseVector(std::move(r)));
  return kernel_basis(m);
}

Subspace product_space(const Algebra& a, const Subspace& left, const Subspace& right) {
  std::vector<SparseVector> gens;
  for (std::size_t r = 0; r < left.dim(); ++r) {
    for (std::size_t s = 0; s < right.dim(); ++s) {
      SparseVector p = bracket(a, left.basis().row(r), right.basis().row(s));
      if (!p.empty()) gens.push_back(std::move(p));
    }
  }
  return Subspace::span(a.dim(), gens);
}

std::vector<Subspace> lower_central_series(const Algebra& a) {
  const Subspace whole = Subspace::full(a.dim());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = product_space(a, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> derived_series(const Algebra& a) {
  std::vector<Subspace> series{Subspace::full(a.dim())};
  while (true) {
    Subspace next = product_space(a, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilindex(const Algebra& a) {
  const auto series = lower_central_series(a);
  if (series.back().dim() != 0) return std::nullopt;
  return series.size();
}

bool is_nilpotent(const Algebra& a) { return nilindex(a).has_value(); }

bool is_solvable(const Algebra& a) { return derived_series(a).back().dim() == 0; }

bool is_filiform(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n < 2) return false;
  const auto series = lower_central_series(a);
  for (std::size_t i = 2; i <= n; ++i) {
    const std::size_t d = i <= series.size() ? series[i - 1].dim() : series.back().dim();
    if (d != n - i) return false;
  }
  return true;
}

BasisChange::BasisChange(Matrix g) : g_(std::move(g)), g_inv_(leibniz::inverse(g_)) {}

BasisChange BasisChange::inverse() const { return BasisChange(g_inv_, g_); }

Algebra apply_basis_change(const Algebra& a, const BasisChange& g) {
  const std::size_t n = a.dim();
  if (g.dim() != n) throw DimensionMismatch("basis change dimension differs from algebra dimension");
  const Matrix& m = g.matrix();
  const Matrix& minv = g.inverse_matrix();
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector w = bracket(a, minv.row(i), minv.row(j));
      SparseVector image;
      for (const auto& [k, c] : w) image.add_scaled(c, m.row(k));
      table[i * n + j] = std::move(image);
    }
  }
  return Algebra(n, std::move(table), a.label());
}

Algebra change_basis(const Algebra& a, const Matrix& new_basis) {
  return apply_basis_change(a, BasisChange(new_basis).inverse());
}

GradedDecomposition graded_decomposition(const Algebra& a) {
  if (!is_filiform(a)) throw NotFiliform("associated graded algebra requires a filiform algebra");
  const std::size_t n = a.dim();
  const auto series = lower_central_series(a);

  std::vector<SparseVector> chosen;
  std::vector<std::size_t> degrees;
  for (std::size_t deg = 1; deg <= series.size(); ++deg) {
    const Subspace& cur = series[deg - 1];
    const Subspace next = deg < series.size() ? series[deg] : Subspace(n);
    std::vector<SparseVector> layer;
    for (std::size_t r = 0; r < next.dim(); ++r) layer.push_back(next.basis().row(r));
    Subspace acc = next;
    const std::size_t want = cur.dim() - next.dim();
    std::size_t got = 0;
    for (std::size_t r = 0; r < cur.dim() && got < want; ++r) {
      // Degree one prefers the input basis vectors; deeper layers use RREF rows.
      const SparseVector cand = deg == 1 ? SparseVector::unit(r) : cur.basis().row(r);
      if (acc.contains(cand)) continue;
      layer.push_back(cand);
      acc = Subspace::span(n, layer);
      chosen.push_back(cand);
      degrees.push_back(deg);
      ++got;
    }
  }

  // Align with the input basis: order by leading index when those are distinct.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> lead(n);
  for (std::size_t r = 0; r < n; ++r) lead[r] = chosen[r].entries().front().first;
  if (std::set<std::size_t>(lead.begin(), lead.end()).size() == n) {
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return lead[x] < lead[y]; });
    std::vector<SparseVector> c2;
    std::vector<std::size_t> d2;
    for (std::size_t r : order) {
      c2.push_back(chosen[r]);
      d2.push_back(degrees[r]);
    }
    chosen = std::move(c2);
    degrees = std::move(d2);
  }

  Matrix basis = Matrix::from_rows(n, chosen);
  const Matrix to_new = inverse(basis);
  std::vector<SparseVector> table(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const SparseVector w = bracket(a, basis.row(p), basis.row(q));
      SparseVector coords;
      for (const auto& [k, c] : w) coords.add_scaled(c, to_new.row(k));
      std::vector<SparseVector::Entry> kept;
      for (const auto& [r, c] : coords) {
        if (degrees[r] == degrees[p] + degrees[q]) kept.emplace_back(r, c);
      }
      table[p * n + q] = SparseVector(std::move(kept));
    }
  }
  return {Algebra(n, std::move(table), a.label()), std::move(basis), std::move(degrees)};
}

Algebra associated_graded(const Algebra& a) { return graded_decomposition(a).graded; }

bool is_naturally_graded_witness(const Algebra& a) { return associated_graded(a) == a; }

}  // namespace leibniz
