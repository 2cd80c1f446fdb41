#include "leibniz/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "leibniz/errors.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 17> kNames{{
    {FamilyId::NF, "NF"},
    {FamilyId::F1graded, "F1graded"},
    {FamilyId::F2graded, "F2graded"},
    {FamilyId::F3graded, "F3graded"},
    {FamilyId::F1, "F1"},
    {FamilyId::F2, "F2"},
    {FamilyId::F3, "F3"},
    {FamilyId::mu_tilde, "mu_tilde"},
    {FamilyId::mu35, "mu35"},
    {FamilyId::lambda, "lambda"},
    {FamilyId::R, "R"},
    {FamilyId::nu, "nu"},
    {FamilyId::nu1, "nu1"},
    {FamilyId::nu2, "nu2"},
    {FamilyId::nu3, "nu3"},
    {FamilyId::nu4, "nu4"},
    {FamilyId::nu5, "nu5"},
}};

std::string idx(std::string_view prefix, std::size_t i) { return std::string(prefix) + std::to_string(i); }

std::string f3_entry_name(std::size_t i, std::size_t j, std::size_t k) {
  return "t_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

// 1-based table writer.
class Table {
 public:
  explicit Table(std::size_t n) : b_(n), n_(n) {}
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (!c.is_zero()) b_.add(i - 1, j - 1, k - 1, c);
  }
  // [x_i,x_j] = -[x_j,x_i] = c x_k
  void skew(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    add(i, j, k, c);
    add(j, i, k, -c);
  }
  std::size_t n() const { return n_; }
  Algebra build(std::string label) const { return b_.build(std::move(label)); }

 private:
  AlgebraBuilder b_;
  std::size_t n_;
};

class Params {
 public:
  Params(const ParamMap& m, FamilyId id, std::size_t n) : m_(m) {
    const auto names = parameter_names(id, n);
    const std::set<std::string> allowed(names.begin(), names.end());
    for (const auto& [k, v] : m) {
      if (!allowed.contains(k)) {
        throw BadParams("family " + std::string(to_string(id)) + " at n=" + std::to_string(n) +
                        " has no parameter '" + k + "'");
      }
    }
  }
  Rational operator()(const std::string& name) const {
    auto it = m_.find(name);
    return it == m_.end() ? Rational() : it->second;
  }
  Rational operator()(std::string_view prefix, std::size_t i) const { return (*this)(idx(prefix, i)); }

 private:
  const ParamMap& m_;
};

void require_dim(FamilyId id, std::size_t n, std::size_t min_n) {
  if (n < min_n) {
    throw BadParams("family " + std::string(to_string(id)) + " needs n >= " + std::to_string(min_n) +
                    ", got " + std::to_string(n));
  }
}

Rational require_alpha(const Params& p, std::size_t n, FamilyId id) {
  const Rational alpha = p("alpha");
  if (alpha != 0 && alpha != 1) throw BadParams("alpha must be 0 or 1");
  if (alpha == 1 && n % 2 == 1) {
    throw BadParams("family " + std::string(to_string(id)) + ": alpha = 0 is required for odd n");
  }
  return alpha;
}

// [x_i,x_{n+1-i}] = -[x_{n+1-i},x_i] = alpha (-1)^{i+1} x_n, one assignment per pair.
void add_alpha_pairs(Table& t, const Rational& alpha) {
  const std::size_t n = t.n();
  for (std::size_t i = 2; 2 * i < n + 1; ++i) {
    const Rational sign = (i % 2 == 1) ? 1 : -1;
    t.skew(i, n + 1 - i, n, alpha * sign);
  }
}

void add_chain(Table& t, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i <= to; ++i) t.add(i, 1, i + 1, 1);
}

struct NuParams {
  std::vector<Rational> a;  // a[k], 2 <= k <= n
  std::vector<Rational> b;  // b[k], 1 <= k <= n+2
  Rational c1;
};

Algebra nu_table(std::size_t n, const NuParams& q, std::string label) {
  Table t(n);
  add_chain(t, 1, n - 2);
  for (std::size_t k = 2; k <= n; ++k) t.add(n - 1, 1, k, q.a[k]);
  t.add(n, 1, 1, q.b[1]);
  t.add(n, 1, n, q.c1);
  t.add(1, n, 1, -q.b[1]);
  for (std::size_t k = 2; k <= n; ++k) t.add(1, n, k, q.b[k]);
  for (std::size_t i = 2; i <= n - 1; ++i) {
    t.add(i, n, i, -Rational(static_cast<long>(i)) * q.b[1]);
    for (std::size_t k = 2; k + i <= n; ++k) t.add(i, n, k + i - 1, q.b[k]);
  }
  t.add(n, n, n - 1, q.b[n + 1]);
  t.add(n, n, n, q.b[n + 2]);
  return t.build(std::move(label));
}

NuParams empty_nu(std::size_t n) { return {std::vector<Rational>(n + 1), std::vector<Rational>(n + 3), Rational()}; }

void require_leibniz(const Algebra& a, FamilyId id) {
  const auto defect = leibniz_defect(a);
  if (!defect.empty()) {
    const auto& d = defect.front();
    throw BadParams("parameters give a non-Leibniz member of " + std::string(to_string(id)) +
                    " (identity fails on x" + std::to_string(d.i + 1) + ", x" + std::to_string(d.j + 1) +
                    ", x" + std::to_string(d.k + 1) + ")");
  }
}

Algebra build_unchecked(FamilyId id, std::size_t n, const Params& p) {
  const std::string label = std::string(to_string(id));
  switch (id) {
    case FamilyId::NF: {
      require_dim(id, n, 2);
      Table t(n);
      add_chain(t, 1, n - 1);
      return t.build(label);
    }
    case FamilyId::F1graded: {
      require_dim(id, n, 3);
      Table t(n);
      add_chain(t, 2, n - 1);
      return t.build(label);
    }
    case FamilyId::F2graded: {
      require_dim(id, n, 3);
      Table t(n);
      add_chain(t, 1, n - 2);
      return t.build(label);
    }
    case FamilyId::F3graded: {
      require_dim(id, n, 3);
      const Rational alpha = require_alpha(p, n, id);
      Table t(n);
      for (std::size_t i = 2; i <= n - 1; ++i) t.skew(i, 1, i + 1, 1);
      add_alpha_pairs(t, alpha);
      return t.build(label);
    }
    case FamilyId::F1: {
      require_dim(id, n, 3);
      Table t(n);
      add_chain(t, 2, n - 1);
      t.add(1, 2, n, p("theta"));
      for (std::size_t j = 2; j + 2 <= n; ++j) {
        for (std::size_t k = 4; k <= n + 2 - j; ++k) t.add(j, 2, k + j - 2, p("alpha", k));
      }
      return t.build(label);
    }
    case FamilyId::F2: {
      require_dim(id, n, 3);
      Table t(n);
      add_chain(t, 1, n - 2);
      for (std::size_t j = 1; j + 3 <= n; ++j) {
        for (std::size_t k = 3; k + j <= n; ++k) t.add(j, n, k + j - 1, p("beta", k));
      }
      t.add(n, n, n - 1, p("gamma"));
      return t.build(label);
    }
    case FamilyId::F3: {
      require_dim(id, n, 3);
      const Rational alpha = require_alpha(p, n, id);
      Table t(n);
      add_chain(t, 2, n - 1);
      for (std::size_t i = 3; i <= n - 1; ++i) t.add(1, i, i + 1, -1);
      t.add(1, 1, n, p("theta1"));
      t.add(1, 2, 3, -1);
      t.add(1, 2, n, p("theta2"));
      t.add(2, 2, n, p("theta3"));
      for (std::size_t i = 2; i <= n - 1; ++i) {
        for (std::size_t j = i + 1; j <= n - 1; ++j) {
          for (std::size_t k = i + j + 1; k <= n; ++k) t.skew(i, j, k, p(f3_entry_name(i, j, k)));
        }
      }
      add_alpha_pairs(t, alpha);
      return t.build(label);
    }
    case FamilyId::mu_tilde: {
      require_dim(id, n, 2);
      Table t(n);
      add_chain(t, 1, n - 1);
      for (std::size_t k = 2; k <= n; ++k) t.add(n, 1, k, p("alpha", k));
      return t.build(label);
    }
    case FamilyId::mu35: {
      require_dim(id, n, 3);
      Table t(n);
      t.add(1, 1, 2, p("a", 1));
      add_chain(t, 2, n - 1);
      for (std::size_t k = 2; k <= n; ++k) t.add(n, 1, k, p("a", k));
      const Rational c1 = p("c1");
      t.add(1, 2, 1, c1);
      t.add(1, 2, n, p("cn"));
      for (std::size_t i = 2; i <= n; ++i) {
        t.add(i, 2, i, Rational(static_cast<long>(i) - 2) * c1 + p("b", 2));
        for (std::size_t k = 4; k <= n + 2 - i; ++k) t.add(i, 2, k + i - 2, p("b", k));
      }
      for (std::size_t i = 2; i <= n - 1; ++i) t.add(i, 3, i + 1, -c1);
      return t.build(label);
    }
    case FamilyId::lambda: {
      require_dim(id, n, 3);
      Table t(n);
      t.add(1, 1, 2, p("a", 1));
      add_chain(t, 2, n - 1);
      for (std::size_t k = 2; k <= n; ++k) t.add(n, 1, k, p("a", k));
      return t.build(label);
    }
    case FamilyId::R: {
      require_dim(id, n, 3);
      Table t(n);
      add_chain(t, 2, n - 1);
      t.add(1, 2, 1, 1);
      for (std::size_t i = 3; i <= n; ++i) t.add(i, 2, i, static_cast<long>(i) - 2);
      for (std::size_t i = 2; i <= n - 1; ++i) t.add(i, 3, i + 1, -1);
      return t.build(label);
    }
    case FamilyId::nu: {
      require_dim(id, n, 3);
      NuParams q = empty_nu(n);
      for (std::size_t k = 2; k <= n; ++k) q.a[k] = p("a", k);
      for (std::size_t k = 1; k <= n + 2; ++k) q.b[k] = p("b", k);
      q.c1 = p("c1");
      return nu_table(n, q, label);
    }
    case FamilyId::nu1: {
      require_dim(id, n, 3);
      NuParams q = empty_nu(n);
      Rational total;
      for (std::size_t k = 2; k <= n - 1; ++k) {
        q.a[k] = p("a", k);
        total += q.a[k];
      }
      if (total != 1) throw BadParams("nu1 requires a2 + ... + a{n-1} = 1, got " + total.to_string());
      q.c1 = 1;
      return nu_table(n, q, label);
    }
    case FamilyId::nu2: {
      require_dim(id, n, 3);
      NuParams q = empty_nu(n);
      q.b[1] = 1;
      return nu_table(n, q, label);
    }
    case FamilyId::nu3: {
      require_dim(id, n, 3);
      NuParams q = empty_nu(n);
      for (std::size_t k = 2; k <= n - 1; ++k) q.b[k] = p("b", k);
      for (std::size_t k = 2; k + 2 <= n; ++k) {
        if (!q.b[k].is_zero()) {
          throw BadParams("nu3 is a Leibniz algebra only when b2 = ... = b{n-2} = 0 (b" + std::to_string(k) +
                          " = " + q.b[k].to_string() + ")");
        }
      }
      q.a[n - 1] = -1;
      q.b[n] = 1;
      q.c1 = -1;
      return nu_table(n, q, label);
    }
    case FamilyId::nu4: {
      require_dim(id, n, 3);
      NuParams q = empty_nu(n);
      q.a[n - 1] = -2;
      q.b[n] = 1;
      q.b[n + 1] = 1;
      q.c1 = -1;
      return nu_table(n, q, label);
    }
    case FamilyId::nu5: {
      require_dim(id, n, 3);
      NuParams q = empty_nu(n);
      for (std::size_t k = 2; k <= n - 1; ++k) q.a[k] = p("a", k);
      q.b[n] = 1;
      q.c1 = -1;
      return nu_table(n, q, label);
    }
  }
  throw UnknownLabel("unknown family");
}

}  // namespace

std::string_view to_string(FamilyId id) {
  for (const auto& [f, name] : kNames) {
    if (f == id) return name;
  }
  return "?";
}

FamilyId family_from_string(std::string_view name) {
  for (const auto& [f, s] : kNames) {
    if (s == name) return f;
  }
  throw UnknownLabel("unknown family '" + std::string(name) + "'");
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& [f, s] : kNames) v.push_back(f);
    return v;
  }();
  return ids;
}

std::vector<std::string> parameter_names(FamilyId id, std::size_t n) {
  std::vector<std::string> out;
  auto range = [&](std::string_view prefix, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i <= hi; ++i) out.push_back(idx(prefix, i));
  };
  switch (id) {
    case FamilyId::F3graded:
      out.push_back("alpha");
      break;
    case FamilyId::F1:
      out.push_back("theta");
      range("alpha", 4, n);
      break;
    case FamilyId::F2:
      if (n >= 4) range("beta", 3, n - 1);
      out.push_back("gamma");
      break;
    case FamilyId::F3:
      out.insert(out.end(), {"theta1", "theta2", "theta3", "alpha"});
      for (std::size_t i = 2; i + 1 <= n; ++i) {
        for (std::size_t j = i + 1; j + 1 <= n; ++j) {
          for (std::size_t k = i + j + 1; k <= n; ++k) out.push_back(f3_entry_name(i, j, k));
        }
      }
      break;
    case FamilyId::mu_tilde:
      range("alpha", 2, n);
      break;
    case FamilyId::mu35:
      range("a", 1, n);
      out.push_back("b2");
      range("b", 4, n);
      out.insert(out.end(), {"c1", "cn"});
      break;
    case FamilyId::lambda:
      range("a", 1, n);
      break;
    case FamilyId::nu:
      range("a", 2, n);
      range("b", 1, n + 2);
      out.push_back("c1");
      break;
    case FamilyId::nu1:
    case FamilyId::nu5:
      if (n >= 3) range("a", 2, n - 1);
      break;
    case FamilyId::nu3:
      if (n >= 3) range("b", 2, n - 1);
      break;
    default:
      break;
  }
  return out;
}

Algebra build(FamilyId id, std::size_t n, const ParamMap& params) {
  const Params p(params, id, n);
  Algebra a = build_unchecked(id, n, p);
  if (id != FamilyId::mu35 && id != FamilyId::nu) require_leibniz(a, id);
  return a;
}

Algebra build(const FamilySpec& spec) { return build(spec.id, spec.n, spec.params); }

Algebra abelian(std::size_t n) { return Algebra(n, "abelian"); }

Algebra nu1_cover(std::size_t n, const std::vector<Rational>& a) {
  if (n < 3) throw BadParams("nu1_cover needs n >= 3");
  if (a.size() != n - 2) throw BadParams("nu1_cover expects a_2 .. a_{n-1}");
  Table t(n);
  add_chain(t, 1, n - 2);
  t.add(n - 1, 1, n, 1);
  for (std::size_t k = 2; k <= n - 1; ++k) t.add(n - 1, 1, k, a[k - 2]);
  t.add(n, 1, n, 1);
  return t.build("nu1_cover");
}

ParamMap indexed_params(std::string_view prefix, std::size_t first, const std::vector<Rational>& values) {
  ParamMap m;
  for (std::size_t i = 0; i < values.size(); ++i) m[idx(prefix, first + i)] = values[i];
  return m;
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t m) { return rng_() % m; }
  Rational small() { return Rational(static_cast<long>(below(11)) - 5, static_cast<long>(below(3)) + 1); }

 private:
  std::mt19937_64 rng_;
};

// Defect of a as one sparse vector indexed by ((i*n + j)*n + k)*n + l.
SparseVector defect_vector(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, Rational>> out;
  for (const auto& d : leibniz_defect(a)) {
    const std::size_t base = ((d.i * n + d.j) * n + d.k) * n;
    for (const auto& [l, c] : d.defect) out.emplace_back(base + l, c);
  }
  return SparseVector(std::move(out));
}

// The x_n-valued entries of F3 enter the defect affinely: x_n is central and
// never appears as an argument of those entries. Samples are drawn from the
// kernel of that affine map.
std::vector<ParamMap> sample_f3(std::size_t n, std::size_t count, Draw& g) {
  std::vector<std::string> names{"theta1", "theta2", "theta3"};
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    for (std::size_t j = i + 1; j + 1 <= n; ++j) {
      if (i + j + 1 <= n) names.push_back(f3_entry_name(i, j, n));
    }
  }
  std::vector<ParamMap> out;
  while (out.size() < count) {
    ParamMap fixed;
    if (n % 2 == 0 && g.below(2) == 1) fixed["alpha"] = 1;
    const SparseVector d0 = defect_vector(build_unchecked(FamilyId::F3, n, Params(fixed, FamilyId::F3, n)));
    std::map<std::size_t, std::size_t> row_of;
    std::vector<SparseVector> columns;
    for (const auto& name : names) {
      ParamMap m = fixed;
      m[name] = 1;
      SparseVector col = defect_vector(build_unchecked(FamilyId::F3, n, Params(m, FamilyId::F3, n))) - d0;
      for (const auto& [r, c] : col) row_of.emplace(r, row_of.size());
      columns.push_back(std::move(col));
    }
    Matrix lin(row_of.size(), names.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (const auto& [r, v] : columns[c]) lin.set(row_of.at(r), c, v);
    }
    const Subspace ker = kernel_basis(lin);
    Vector x(names.size());
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      const Rational w = g.small();
      for (std::size_t c = 0; c < names.size(); ++c) x[c] += w * ker.basis().at(r, c);
    }
    ParamMap m = fixed;
    for (std::size_t c = 0; c < names.size(); ++c) {
      if (!x[c].is_zero()) m[names[c]] = x[c];
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<ParamMap> sample_leibniz_params(FamilyId id, std::size_t n, std::size_t count, std::uint64_t seed) {
  if (id == FamilyId::mu35 || id == FamilyId::nu) {
    throw BadParams("mu35 and nu are sampled through their constraint systems");
  }
  Draw g(seed);
  if (id == FamilyId::F3) return sample_f3(n, count, g);
  const auto names = parameter_names(id, n);
  std::vector<ParamMap> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    ParamMap m;
    // After repeated rejections, draw sparser vectors; the zero vector always works.
    const std::uint64_t keep = attempts < 64 ? 1 : (attempts < 256 ? 2 : 0);
    for (const auto& name : names) {
      if (name == "alpha") {
        if (n % 2 == 0 && g.below(2) == 1) m[name] = 1;
        continue;
      }
      if (keep != 0 && g.below(keep) == 0) m[name] = g.small();
    }
    if (id == FamilyId::nu1) {
      Rational rest(1);
      for (std::size_t k = 2; k + 2 <= n; ++k) rest -= m["a" + std::to_string(k)];
      m["a" + std::to_string(n - 1)] = rest;
    }
    if (id == FamilyId::nu3) {
      for (std::size_t k = 2; k + 2 <= n; ++k) m.erase("b" + std::to_string(k));
    }
    ++attempts;
    const Algebra a = build_unchecked(id, n, Params(m, id, n));
    if (!is_leibniz(a)) continue;
    out.push_back(std::move(m));
    attempts = 0;
  }
  return out;
}

}  // namespace leibniz

