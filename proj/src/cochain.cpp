#include "leibniz/cochain.hpp"

#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

Cochain::Cochain(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree), values_(ipow(dim, degree)) {
  if (degree == 0) throw DimensionMismatch("cochains of degree 0 are not supported");
}

Cochain Cochain::from_flat(std::size_t dim, std::size_t degree, const SparseVector& flat) {
  Cochain c(dim, degree);
  if (flat.extent() > c.flat_dim()) throw DimensionMismatch("flat cochain vector too long");
  std::vector<std::vector<SparseVector::Entry>> parts(c.values_.size());
  for (const auto& [idx, val] : flat) parts[idx / dim].emplace_back(idx % dim, val);
  for (std::size_t t = 0; t < parts.size(); ++t) c.values_[t] = SparseVector(std::move(parts[t]));
  return c;
}

Cochain Cochain::from_flat(std::size_t dim, std::size_t degree, const Vector& flat) {
  if (flat.size() != ipow(dim, degree + 1)) throw DimensionMismatch("flat cochain vector has wrong length");
  return from_flat(dim, degree, SparseVector::from_dense(flat));
}

Cochain Cochain::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("linear map matrix must be square");
  Cochain c(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) c.values_[i] = m.row(i);
  return c;
}

Cochain Cochain::from_algebra(const Algebra& a) {
  Cochain c(a.dim(), 2);
  c.values_ = a.table();
  return c;
}

std::size_t Cochain::tuple_index(const std::vector<std::size_t>& args) const {
  if (args.size() != degree_) throw DimensionMismatch("cochain expects " + std::to_string(degree_) + " arguments");
  std::size_t idx = 0;
  for (std::size_t a : args) {
    if (a >= dim_) throw std::out_of_range("cochain argument index out of range");
    idx = idx * dim_ + a;
  }
  return idx;
}

std::vector<std::size_t> Cochain::tuple_args(std::size_t index) const {
  std::vector<std::size_t> args(degree_);
  for (std::size_t p = degree_; p-- > 0;) {
    args[p] = index % dim_;
    index /= dim_;
  }
  return args;
}

const SparseVector& Cochain::value(const std::vector<std::size_t>& args) const { return values_[tuple_index(args)]; }

void Cochain::set_value(const std::vector<std::size_t>& args, SparseVector v) {
  if (v.extent() > dim_) throw DimensionMismatch("cochain value index out of range");
  values_[tuple_index(args)] = std::move(v);
}

void Cochain::add(const std::vector<std::size_t>& args, std::size_t k, const Rational& c) {
  if (k >= dim_) throw std::out_of_range("cochain output index out of range");
  values_[tuple_index(args)].add_scaled(1, SparseVector::unit(k, c));
}

SparseVector Cochain::evaluate(const std::vector<SparseVector>& args) const {
  if (args.size() != degree_) throw DimensionMismatch("cochain expects " + std::to_string(degree_) + " arguments");
  for (const auto& a : args) {
    if (a.extent() > dim_) throw DimensionMismatch("cochain argument out of range");
  }
  SparseVector out;
  // Depth-first expansion over the nonzero coordinates of each argument.
  std::vector<std::size_t> pos(degree_, 0);
  for (const auto& a : args) {
    if (a.empty()) return out;
  }
  while (true) {
    Rational coef = 1;
    std::size_t idx = 0;
    for (std::size_t p = 0; p < degree_; ++p) {
      const auto& e = args[p].entries()[pos[p]];
      coef *= e.second;
      idx = idx * dim_ + e.first;
    }
    if (!values_[idx].empty()) out.add_scaled(coef, values_[idx]);
    std::size_t p = degree_;
    while (p > 0) {
      --p;
      if (++pos[p] < args[p].nnz()) break;
      pos[p] = 0;
      if (p == 0) return out;
    }
  }
}

SparseVector Cochain::flatten() const {
  std::vector<SparseVector::Entry> entries;
  for (std::size_t t = 0; t < values_.size(); ++t) {
    for (const auto& [k, v] : values_[t]) entries.emplace_back(t * dim_ + k, v);
  }
  return SparseVector(std::move(entries));
}

Matrix Cochain::to_matrix() const {
  if (degree_ != 1) throw DimensionMismatch("only degree-1 cochains are linear maps");
  return Matrix::from_rows(dim_, values_);
}

Algebra Cochain::as_algebra() const {
  if (degree_ != 2) throw DimensionMismatch("only degree-2 cochains are products");
  return Algebra(dim_, values_);
}

bool Cochain::is_zero() const {
  for (const auto& v : values_) {
    if (!v.empty()) return false;
  }
  return true;
}

bool Cochain::is_skew() const {
  if (degree_ != 2) throw DimensionMismatch("skew symmetry is defined for degree 2");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (!(values_[i * dim_ + j] + values_[j * dim_ + i]).empty()) return false;
    }
  }
  return true;
}

void Cochain::check_compatible(const Cochain& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw DimensionMismatch("cochains of different shape");
}

Cochain& Cochain::operator+=(const Cochain& o) {
  check_compatible(o);
  for (std::size_t t = 0; t < values_.size(); ++t) values_[t].add_scaled(1, o.values_[t]);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  check_compatible(o);
  for (std::size_t t = 0; t < values_.size(); ++t) values_[t].add_scaled(-1, o.values_[t]);
  return *this;
}

Cochain& Cochain::operator*=(const Rational& c) {
  for (auto& v : values_) v = v.scaled(c);
  return *this;
}

Cochain coboundary(const Algebra& a, const Cochain& f) {
  const std::size_t n = a.dim();
  const std::size_t m = f.degree();
  if (f.dim() != n) throw DimensionMismatch("cochain and algebra dimensions differ");
  Cochain out(n, m + 1);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const std::vector<std::size_t> x = out.tuple_args(t);
    std::vector<SparseVector> basis(m + 1);
    for (std::size_t p = 0; p <= m; ++p) basis[p] = SparseVector::unit(x[p]);

    SparseVector acc = bracket(a, basis[0], f.evaluate({basis.begin() + 1, basis.end()}));
    // 0-based position p is the 1-based index i = p + 1.
    for (std::size_t p = 1; p <= m; ++p) {
      std::vector<SparseVector> rest;
      for (std::size_t q = 0; q <= m; ++q) {
        if (q != p) rest.push_back(basis[q]);
      }
      const Rational sign = ((p + 1) % 2 == 0) ? 1 : -1;
      acc.add_scaled(sign, bracket(a, f.evaluate(rest), basis[p]));
    }
    for (std::size_t p = 0; p <= m; ++p) {
      for (std::size_t q = p + 1; q <= m; ++q) {
        const SparseVector& prod = a.product(x[p], x[q]);
        if (prod.empty()) continue;
        std::vector<SparseVector> args;
        for (std::size_t r = 0; r <= m; ++r) {
          if (r == q) continue;
          args.push_back(r == p ? prod : basis[r]);
        }
        const Rational sign = ((q + 1 + 1) % 2 == 0) ? 1 : -1;
        acc.add_scaled(sign, f.evaluate(args));
      }
    }
    out.set_value(x, std::move(acc));
  }
  return out;
}

Matrix coboundary_matrix(const Algebra& a, std::size_t degree) {
  const std::size_t n = a.dim();
  const std::size_t m = degree;
  if (m == 0) throw DimensionMismatch("coboundary of degree 0 is not supported");
  const std::size_t out_tuples = ipow(n, m + 1);
  const std::size_t cols = ipow(n, m + 1);
  std::vector<std::vector<SparseVector::Entry>> rows(out_tuples * n);

  auto flat = [&](const std::vector<std::size_t>& args, std::size_t k) {
    std::size_t idx = 0;
    for (std::size_t v : args) idx = idx * n + v;
    return idx * n + k;
  };

  std::vector<std::size_t> x(m + 1, 0);
  for (std::size_t t = 0; t < out_tuples; ++t) {
    {
      std::size_t rem = t;
      for (std::size_t p = m + 1; p-- > 0;) {
        x[p] = rem % n;
        rem /= n;
      }
    }
    const std::size_t row_base = t * n;

    // [x_1, f(x_2..)]: coefficient c^l_{x_1 q} on f(x_2..)^q.
    {
      const std::vector<std::size_t> args(x.begin() + 1, x.end());
      for (std::size_t q = 0; q < n; ++q) {
        for (const auto& [l, c] : a.product(x[0], q)) rows[row_base + l].emplace_back(flat(args, q), c);
      }
    }
    // (-1)^i [f(..^x_i..), x_i]
    for (std::size_t p = 1; p <= m; ++p) {
      std::vector<std::size_t> args;
      for (std::size_t r = 0; r <= m; ++r) {
        if (r != p) args.push_back(x[r]);
      }
      const Rational sign = ((p + 1) % 2 == 0) ? 1 : -1;
      for (std::size_t q = 0; q < n; ++q) {
        for (const auto& [l, c] : a.product(q, x[p])) rows[row_base + l].emplace_back(flat(args, q), sign * c);
      }
    }
    // (-1)^{j+1} f(.., [x_i,x_j], .., ^x_j, ..)
    for (std::size_t p = 0; p <= m; ++p) {
      for (std::size_t q = p + 1; q <= m; ++q) {
        const Rational sign = ((q + 2) % 2 == 0) ? 1 : -1;
        for (const auto& [s, c] : a.product(x[p], x[q])) {
          std::vector<std::size_t> args;
          for (std::size_t r = 0; r <= m; ++r) {
            if (r == q) continue;
            args.push_back(r == p ? s : x[r]);
          }
          for (std::size_t l = 0; l < n; ++l) rows[row_base + l].emplace_back(flat(args, l), sign * c);
        }
      }
    }
  }

  Matrix out(0, cols);
  for (auto& r : rows) out.append_row(SparseVector(std::move(r)));
  return out;
}

}  // namespace leibniz
