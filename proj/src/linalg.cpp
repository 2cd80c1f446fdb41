#include "leibniz/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

// ---------------------------------------------------------------------------
// SparseVector

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [idx, val] : entries) {
    if (!entries_.empty() && entries_.back().first == idx) {
      entries_.back().second += val;
      if (entries_.back().second.is_zero()) entries_.pop_back();
    } else if (!val.is_zero()) {
      entries_.emplace_back(idx, std::move(val));
    }
  }
}

SparseVector SparseVector::from_dense(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.entries_.emplace_back(i, v[i]);
  }
  return out;
}

SparseVector SparseVector::unit(std::size_t index, Rational value) {
  SparseVector out;
  if (!value.is_zero()) out.entries_.emplace_back(index, std::move(value));
  return out;
}

Vector SparseVector::to_dense(std::size_t dim) const {
  if (extent() > dim) throw DimensionMismatch("sparse vector does not fit in dimension " + std::to_string(dim));
  Vector out(dim);
  for (const auto& [idx, val] : entries_) out[idx] = val;
  return out;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational();
}

SparseVector& SparseVector::add_scaled(const Rational& factor, const SparseVector& other) {
  if (factor.is_zero() || other.empty()) return *this;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational v = a->second + factor * b->second;
      if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

SparseVector SparseVector::scaled(const Rational& factor) const {
  SparseVector out;
  if (factor.is_zero()) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& [idx, val] : entries_) out.entries_.emplace_back(idx, factor * val);
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVector::unit(i);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
  Matrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged dense matrix");
    m.rows_.push_back(SparseVector::from_dense(r));
  }
  return m;
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("matrix index out of range");
  return rows_[r].at(c);
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("matrix index out of range");
  rows_[r].add_scaled(1, SparseVector::unit(c, value - rows_[r].at(c)));
}

const SparseVector& Matrix::row(std::size_t r) const {
  if (r >= rows_.size()) throw std::out_of_range("matrix row out of range");
  return rows_[r];
}

void Matrix::set_row(std::size_t r, SparseVector row) {
  if (r >= rows_.size()) throw std::out_of_range("matrix row out of range");
  if (row.extent() > cols_) throw DimensionMismatch("row longer than matrix width");
  rows_[r] = std::move(row);
}

void Matrix::append_row(SparseVector row) {
  if (row.extent() > cols_) throw DimensionMismatch("row longer than matrix width");
  rows_.push_back(std::move(row));
}

Matrix Matrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> cols(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) cols[c].emplace_back(r, v);
  }
  Matrix t(0, rows_.size());
  for (auto& c : cols) t.rows_.emplace_back(std::move(c));
  return t;
}

std::vector<Vector> Matrix::to_dense() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_dense(cols_));
  return out;
}

Vector multiply(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, val] : m.row(r)) out[r] += val * v[c];
  }
  return out;
}

Vector left_multiply(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector-matrix size mismatch");
  Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (const auto& [c, val] : m.row(r)) out[c] += v[r] * val;
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product size mismatch");
  Matrix out(0, b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector acc;
    for (const auto& [k, val] : a.row(r)) acc.add_scaled(val, b.row(k));
    out.append_row(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free echelon engine over the integers.
//
// Every stored row is a primitive integer vector with positive leading entry.
// Reducing an incoming row against the pivot row q at its leading column uses
// r <- (q0/g) r - (r0/g) q with g = gcd(q0, r0), followed by content removal,
// so coefficients stay as small as the row space allows.

namespace {

using IntEntry = std::pair<std::size_t, Integer>;
using IntRow = std::vector<IntEntry>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow to_int_row(const SparseVector& v) {
  Integer l = 1;
  for (const auto& [idx, val] : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), val.get().get_den_mpz_t());
  }
  IntRow row;
  row.reserve(v.nnz());
  for (const auto& [idx, val] : v) {
    Integer x = l / val.get().get_den();
    x *= val.get().get_num();
    row.emplace_back(idx, std::move(x));
  }
  make_primitive(row);
  return row;
}

// a*r - b*q
IntRow combine(const Integer& a, const IntRow& r, const Integer& b, const IntRow& q) {
  IntRow out;
  out.reserve(r.size() + q.size());
  auto x = r.begin();
  auto y = q.begin();
  Integer tmp;
  while (x != r.end() || y != q.end()) {
    if (y == q.end() || (x != r.end() && x->first < y->first)) {
      out.emplace_back(x->first, a * x->second);
      ++x;
    } else if (x == r.end() || y->first < x->first) {
      out.emplace_back(y->first, -(b * y->second));
      ++y;
    } else {
      tmp = a * x->second;
      tmp -= b * y->second;
      if (tmp != 0) out.emplace_back(x->first, tmp);
      ++x;
      ++y;
    }
  }
  return out;
}

const Integer* coefficient(const IntRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const IntEntry& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

class Echelon {
 public:
  explicit Echelon(std::size_t cols) : row_of_col_(cols, -1) {}

  bool insert(IntRow r) {
    while (!r.empty()) {
      const std::size_t c = r.front().first;
      const long p = row_of_col_[c];
      if (p < 0) {
        row_of_col_[c] = static_cast<long>(rows_.size());
        pivots_.push_back(c);
        rows_.push_back(std::move(r));
        return true;
      }
      const IntRow& q = rows_[static_cast<std::size_t>(p)];
      Integer g = gcd(q.front().second, r.front().second);
      r = combine(q.front().second / g, r, r.front().second / g, q);
      make_primitive(r);
    }
    return false;
  }

  void insert(const SparseVector& v) {
    if (v.extent() > row_of_col_.size()) throw DimensionMismatch("vector index beyond ambient dimension");
    if (!v.empty()) insert(to_int_row(v));
  }

  std::size_t rank() const noexcept { return rows_.size(); }

  // Rational RREF rows in increasing pivot order.
  std::vector<SparseVector> reduced_rows() {
    std::vector<std::size_t> order(pivots_);
    std::sort(order.begin(), order.end(), std::greater<>());
    for (std::size_t c : order) {
      IntRow& r = rows_[static_cast<std::size_t>(row_of_col_[c])];
      std::vector<std::size_t> targets;
      for (std::size_t k = 1; k < r.size(); ++k) {
        if (row_of_col_[r[k].first] >= 0) targets.push_back(r[k].first);
      }
      for (std::size_t t : targets) {
        const Integer* v = coefficient(r, t);
        if (v == nullptr) continue;
        const IntRow& q = rows_[static_cast<std::size_t>(row_of_col_[t])];
        Integer g = gcd(q.front().second, *v);
        Integer b = *v / g;
        r = combine(q.front().second / g, r, b, q);
        make_primitive(r);
      }
    }
    std::sort(order.begin(), order.end());
    std::vector<SparseVector> out;
    out.reserve(order.size());
    for (std::size_t c : order) {
      const IntRow& r = rows_[static_cast<std::size_t>(row_of_col_[c])];
      const Integer& lead = r.front().second;
      std::vector<SparseVector::Entry> entries;
      entries.reserve(r.size());
      for (const auto& [idx, val] : r) entries.emplace_back(idx, Rational(val, lead));
      out.emplace_back(std::move(entries));
    }
    return out;
  }

 private:
  std::vector<long> row_of_col_;
  std::vector<std::size_t> pivots_;
  std::vector<IntRow> rows_;
};

}  // namespace

Matrix rref(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  Matrix out(m.rows(), m.cols());
  auto rows = e.reduced_rows();
  for (std::size_t r = 0; r < rows.size(); ++r) out.set_row(r, std::move(rows[r]));
  return out;
}

std::size_t rank(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  Echelon e(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<SparseVector::Entry> entries(m.row(r).begin(), m.row(r).end());
    entries.emplace_back(n + r, Rational(1));
    e.insert(SparseVector(std::move(entries)));
  }
  auto rows = e.reduced_rows();
  if (rows.size() < n || rows[n - 1].entries().front().first != n - 1) {
    throw SingularMatrix("matrix is not invertible");
  }
  Matrix out(0, n);
  for (auto& r : rows) {
    std::vector<SparseVector::Entry> right;
    for (const auto& [idx, val] : r) {
      if (idx >= n) right.emplace_back(idx - n, val);
    }
    out.append_row(SparseVector(std::move(right)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(0, ambient_dim), row_of_pivot_(ambient_dim, -1) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.pivots_.push_back(i);
    s.row_of_pivot_[i] = static_cast<long>(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& generators) {
  Echelon e(ambient_dim);
  for (const auto& g : generators) e.insert(g);
  Subspace s(ambient_dim);
  for (auto& r : e.reduced_rows()) {
    const std::size_t p = r.entries().front().first;
    s.row_of_pivot_[p] = static_cast<long>(s.pivots_.size());
    s.pivots_.push_back(p);
    s.basis_.append_row(std::move(r));
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  std::vector<SparseVector> sparse;
  sparse.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw DimensionMismatch("generator length differs from ambient dimension");
    sparse.push_back(SparseVector::from_dense(g));
  }
  return span(ambient_dim, sparse);
}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return span(m.cols(), rows);
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (v.extent() > ambient_dim_) throw DimensionMismatch("vector index beyond ambient dimension");
  SparseVector rem = v;
  for (const auto& [idx, val] : v) {
    const long r = row_of_pivot_[idx];
    if (r >= 0) rem.add_scaled(-val, basis_.row(static_cast<std::size_t>(r)));
  }
  return rem;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
  return contains(SparseVector::from_dense(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("subspaces live in different spaces");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  const auto rows = e.reduced_rows();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& r : rows) is_pivot[r.entries().front().first] = true;

  // Free column f contributes e_f - sum_r R[r][f] e_{pivot(r)}.
  std::vector<std::vector<SparseVector::Entry>> gens(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (!is_pivot[f]) gens[f].emplace_back(f, Rational(1));
  }
  for (const auto& r : rows) {
    const std::size_t p = r.entries().front().first;
    for (const auto& [idx, val] : r) {
      if (idx != p) gens[idx].emplace_back(p, -val);
    }
  }
  std::vector<SparseVector> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (!is_pivot[f]) kernel.emplace_back(std::move(gens[f]));
  }
  return Subspace::span(m.cols(), kernel);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different spaces");
  std::vector<SparseVector> gens;
  for (std::size_t r = 0; r < a.dim(); ++r) gens.push_back(a.basis().row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) gens.push_back(b.basis().row(r));
  return Subspace::span(a.ambient_dim(), gens);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different spaces");
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0 for (s, t).
  std::vector<std::vector<SparseVector::Entry>> cols(a.ambient_dim());
  for (std::size_t i = 0; i < da; ++i) {
    for (const auto& [c, v] : a.basis().row(i)) cols[c].emplace_back(i, v);
  }
  for (std::size_t j = 0; j < db; ++j) {
    for (const auto& [c, v] : b.basis().row(j)) cols[c].emplace_back(da + j, -v);
  }
  Matrix system(0, da + db);
  for (auto& c : cols) system.append_row(SparseVector(std::move(c)));
  const Subspace ker = kernel_basis(system);
  std::vector<SparseVector> gens;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    SparseVector g;
    for (const auto& [idx, val] : ker.basis().row(r)) {
      if (idx < da) g.add_scaled(val, a.basis().row(idx));
    }
    gens.push_back(std::move(g));
  }
  return Subspace::span(a.ambient_dim(), gens);
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim()) throw DimensionMismatch("subspaces live in different spaces");
  if (!big.contains(small)) throw NotContained("quotient of a space by a subspace it does not contain");
  return big.dim() - small.dim();
}

}  // namespace leibniz
