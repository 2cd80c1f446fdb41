#include "leibniz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <sstream>
#include <thread>

#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/deformation.hpp"
#include "leibniz/degeneration.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/labels.hpp"

namespace leibniz {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "PASS";
    case ClaimStatus::Fail:
      return "FAIL";
    case ClaimStatus::DiscrepancyDocumented:
      return "DISCREPANCY_DOCUMENTED";
  }
  return "?";
}

std::size_t VerificationReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
}

const Claim* VerificationReport::find(std::string_view claim_id) const {
  for (const auto& c : claims) {
    if (c.claim_id == claim_id) return &c;
  }
  return nullptr;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::string_view x = a.substr(i, ie - i), y = b.substr(j, je - j);
      while (x.size() > 1 && x.front() == '0') x.remove_prefix(1);
      while (y.size() > 1 && y.front() == '0') y.remove_prefix(1);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

namespace {

using Claims = std::vector<Claim>;
using Task = std::function<Claims()>;

std::string id(const std::string& stem, std::size_t n) { return stem + "/n=" + std::to_string(n); }
std::string str(std::size_t v) { return std::to_string(v); }
std::size_t sq(std::size_t n) { return n * n; }

Claim make(std::string claim_id, std::string expected, std::string source, std::string computed, bool ok) {
  return {std::move(claim_id), std::move(expected), std::move(source), std::move(computed),
          ok ? ClaimStatus::Pass : ClaimStatus::Fail};
}

Claim dim_claim(const std::string& claim_id, std::size_t expected, const std::string& source, std::size_t computed) {
  return make(claim_id, str(expected), source, str(computed), expected == computed);
}

// Runs body, turning an escaped library error into a single FAIL row.
Claims guarded(const std::string& claim_id, const std::function<Claims()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {make(claim_id, "no error", "harness", std::string("error: ") + e.what(), false)};
  }
}

// --- closed forms on F^3_n(0) --------------------------------------------

std::size_t f3_head(std::size_t n) {
  return n % 2 == 1 ? (n - 1) * (3 * n - 5) / 8 : n * (3 * n - 10) / 8 + n / 4;
}

std::size_t f3_z2_display(std::size_t n) {
  if (n == 3) return 8;
  if (n == 4) return 15;
  return n % 2 == 1 ? f3_head(n) + sq(n) - n - 1 : f3_head(n) + sq(n) - n;
}

std::size_t f3_zl2_display(std::size_t n) {
  if (n == 3) return 11;
  if (n == 4) return 18;
  return n % 2 == 1 ? f3_head(n) + sq(n) - n + 2 : f3_head(n) + sq(n) - n + 3;
}

std::size_t f3_hl2_display(std::size_t n) {
  if (n == 3) return 9;
  if (n == 4) return 10;
  return n % 2 == 1 ? f3_head(n) + n + 2 : f3_head(n) + n + 3;
}

const char* kOddEven = "piecewise in n parity";

// --- dimension claims ------------------------------------------------------

Claims f1_dims(std::size_t n) {
  const Algebra a = build(FamilyId::F1graded, n);
  const auto s = cohomology_summary(a);
  return {dim_claim(id("F1.der_dim", n), n + 1, "n+1", s.der),
          dim_claim(id("F1.zl2_dim", n), sq(n) + n - 1, "n^2+n-1", s.zl2),
          dim_claim(id("F1.bl2_dim", n), sq(n) - n - 1, "n^2-n-1", s.bl2),
          dim_claim(id("F1.hl2_dim", n), 2 * n, "2n", s.hl2),
          dim_claim(id("F1.rank_nullity", n), sq(n), "dim Der + dim BL2 = n^2", s.der + s.bl2)};
}

Claims f2_dims(std::size_t n) {
  const Algebra a = build(FamilyId::F2graded, n);
  const auto s = cohomology_summary(a);
  return {dim_claim(id("F2.der_dim", n), n + 2, "n+2", s.der),
          dim_claim(id("F2.zl2_dim", n), sq(n) + n, "n^2+n", s.zl2),
          dim_claim(id("F2.bl2_dim", n), sq(n) - n - 2, "n^2-n-2", s.bl2),
          dim_claim(id("F2.hl2_dim", n), 2 * n + 2, "2n+2", s.hl2),
          dim_claim(id("F2.rank_nullity", n), sq(n), "dim Der + dim BL2 = n^2", s.der + s.bl2)};
}

Claims r_dims(std::size_t n) {
  const Algebra a = build(FamilyId::R, n);
  const auto s = cohomology_summary(a);
  Claims out{dim_claim(id("R.der_dim", n), 2, "2", s.der),
             dim_claim(id("R.zl2_dim", n), sq(n) - 2, "n^2-2", s.zl2),
             dim_claim(id("R.bl2_dim", n), sq(n) - 2, "n^2-2", s.bl2),
             dim_claim(id("R.hl2_dim", n), 0, "0 (rigid)", s.hl2)};
  return out;
}

bool f3_shape_holds(const Cochain& phi) {
  const std::size_t n = phi.dim();
  auto on_top = [&](const SparseVector& v) { return v.empty() || (v.nnz() == 1 && v.begin()->first == n - 1); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const SparseVector& u = phi.value({i, j});
      const SparseVector& w = phi.value({j, i});
      if ((i == 0 && j == 0) || (i == 1 && j == 1)) {
        if (!on_top(u)) return false;
      } else if (i == 0 && j == 1) {
        if (!on_top(u + w)) return false;
      } else if (!(u + w).empty()) {
        return false;
      }
    }
  }
  return true;
}

Claims f3_dims(std::size_t n, std::size_t shape_n_max) {
  const Algebra a = build(FamilyId::F3graded, n);
  const Subspace der = derivation_space(a);
  const Subspace zl = zl2(a);
  const Subspace bl = bl2(a);
  const Subspace z = skew_cocycles2(a);
  Claims out;
  out.push_back(dim_claim(id("F3.der_dim", n), n == 3 ? 6 : 2 * n - 1, "6 at n=3, 2n-1 otherwise", der.dim()));
  out.push_back(dim_claim(id("F3.bl2_dim", n), n == 3 ? 3 : sq(n - 1), "3 at n=3, (n-1)^2 otherwise", bl.dim()));
  out.push_back(dim_claim(id("F3.zl2_dim", n), f3_zl2_display(n), kOddEven, zl.dim()));
  out.push_back(dim_claim(id("F3.z2_dim", n), f3_z2_display(n), kOddEven, z.dim()));
  out.push_back(dim_claim(id("F3.zl2_minus_z2", n), 3, "psi_1, psi_2, psi_3 complement", zl.dim() - z.dim()));

  // Complement: each psi is a non-skew cocycle outside Z^2; together they fill ZL^2.
  std::vector<SparseVector> gens;
  for (std::size_t r = 0; r < z.dim(); ++r) gens.push_back(z.basis().row(r));
  bool each_ok = true;
  for (const auto& label : skew_complement_labels()) {
    const Cochain psi = named_cochain(BaseFamily::F3Zero, n, label);
    each_ok = each_ok && is_cocycle(a, psi) && !psi.is_skew() && !z.contains(psi.flatten());
    gens.push_back(psi.flatten());
  }
  const Subspace filled = Subspace::span(zl.ambient_dim(), gens);
  const bool fills = filled == zl;
  out.push_back(make(id("F3.skew_complement", n), "each psi_i non-skew cocycle outside Z2; Z2+span = ZL2",
                     "explicit cochains", std::string(each_ok ? "each ok" : "some psi_i fails") + ", " +
                         (fills ? "span equals ZL2" : "span differs from ZL2"),
                     each_ok && fills));

  // HL^2: the quotient dimension against ranks of the coboundary matrices.
  const std::size_t flat2 = n * n * n;
  const std::size_t zl_rank = flat2 - rank(coboundary_matrix(a, 2));
  const std::size_t bl_rank = rank(coboundary_matrix(a, 1));
  const std::size_t hl = hl2_dim(a);
  const std::size_t display = f3_hl2_display(n);
  Claim c;
  c.claim_id = id("F3.hl2_dim", n);
  c.expected = str(display);
  c.source = "display; computed value is ZL2 - BL2";
  c.computed = str(hl);
  if (hl != zl_rank - bl_rank || zl_rank != zl.dim() || bl_rank != bl.dim()) {
    c.status = ClaimStatus::Fail;
    c.computed += " (rank route gives " + str(zl_rank - bl_rank) + ")";
  } else {
    c.status = hl == display ? ClaimStatus::Pass : ClaimStatus::DiscrepancyDocumented;
  }
  out.push_back(std::move(c));

  if (n <= shape_n_max) {
    std::size_t bad = 0;
    for (std::size_t r = 0; r < zl.dim(); ++r) {
      const Cochain phi = Cochain::from_flat(n, 2, zl.basis().row(r));
      if (!f3_shape_holds(phi)) ++bad;
    }
    out.push_back(make(id("F3.zl2_shape", n), "0 basis cocycles off the shape", "general form of ZL2",
                       str(bad) + " of " + str(zl.dim()) + " off the shape", bad == 0));
  }
  return out;
}

// --- explicit bases --------------------------------------------------------

struct LabeledSet {
  std::size_t outside = 0;  // members not in the target space
  std::size_t rank = 0;
};

LabeledSet check_labeled(BaseFamily f, std::size_t n, const std::vector<CochainLabel>& labels, const Subspace& space) {
  std::vector<SparseVector> gens;
  LabeledSet r;
  for (const auto& l : labels) {
    const SparseVector v = named_cochain(f, n, l).flatten();
    if (!space.contains(v)) ++r.outside;
    gens.push_back(v);
  }
  r.rank = Subspace::span(space.ambient_dim(), gens).dim();
  return r;
}

Claims bases(BaseFamily f, std::size_t n) {
  const std::string tag = f == BaseFamily::F1 ? "F1" : "F2";
  const Algebra a = base_algebra(f, n);
  const Subspace zl = zl2(a);
  const Subspace bl = bl2(a);
  const std::size_t zl_expected = f == BaseFamily::F1 ? sq(n) + n - 1 : sq(n) + n;
  const std::size_t bl_expected = f == BaseFamily::F1 ? sq(n) - n - 1 : sq(n) - n - 2;
  const std::size_t hl_expected = f == BaseFamily::F1 ? 2 * n : 2 * n + 2;
  Claims out;
  {
    const auto labels = zl2_basis_labels(f, n);
    const auto r = check_labeled(f, n, labels, zl);
    out.push_back(make(id(tag + ".zl2_basis", n), str(zl_expected) + " independent cocycles", "labeled basis",
                       str(labels.size()) + " labels, rank " + str(r.rank) + ", " + str(r.outside) + " outside ZL2",
                       r.outside == 0 && r.rank == labels.size() && labels.size() == zl_expected));
  }
  {
    const auto labels = bl2_basis_labels(f, n);
    const auto r = check_labeled(f, n, labels, bl);
    out.push_back(make(id(tag + ".bl2_basis", n), str(bl_expected) + " independent coboundaries", "labeled basis",
                       str(labels.size()) + " labels, rank " + str(r.rank) + ", " + str(r.outside) + " outside BL2",
                       r.outside == 0 && r.rank == labels.size() && labels.size() == bl_expected));
  }
  {
    const auto labels = hl2_representative_labels(f, n);
    const auto r = check_labeled(f, n, labels, zl);
    std::vector<SparseVector> gens;
    for (std::size_t i = 0; i < bl.dim(); ++i) gens.push_back(bl.basis().row(i));
    for (const auto& l : labels) gens.push_back(named_cochain(f, n, l).flatten());
    const std::size_t mod_rank = Subspace::span(bl.ambient_dim(), gens).dim() - bl.dim();
    out.push_back(make(id(tag + ".hl2_representatives", n), str(hl_expected) + " independent modulo BL2",
                       "listed representatives",
                       str(labels.size()) + " labels, rank mod BL2 " + str(mod_rank) + ", " + str(r.outside) +
                           " outside ZL2",
                       r.outside == 0 && mod_rank == labels.size() && labels.size() == hl_expected));
  }
  return out;
}

// --- integrability ---------------------------------------------------------

Claims integrability_table(std::size_t n) {
  const Algebra a = base_algebra(BaseFamily::F2, n);
  std::size_t wrong = 0;
  std::string first_wrong;
  const auto yes = f2_integrable_labels(n);
  const auto no = f2_non_integrable_labels(n);
  auto check = [&](const CochainLabel& l, bool expected) {
    if (integrable_linear(a, named_cochain(BaseFamily::F2, n, l)) != expected) {
      ++wrong;
      if (first_wrong.empty()) first_wrong = l.to_string();
    }
  };
  for (const auto& l : yes) check(l, true);
  for (const auto& l : no) check(l, false);
  std::string computed = str(yes.size() + no.size() - wrong) + "/" + str(yes.size() + no.size()) + " as listed";
  if (!first_wrong.empty()) computed += " (first mismatch " + first_wrong + ")";
  return {make(id("F2.integrability", n),
               str(yes.size()) + " integrable, " + str(no.size()) + " not",
               "phi_j_k (k>=2), psi_j (j<=n-1), psi_{n+1} integrable; psi_n, psi_{n+2}, phi_j_1 not", computed,
               wrong == 0)};
}

// --- constraint systems ----------------------------------------------------

Claims constraints(FamilyId family, std::size_t n) {
  const std::uint64_t seed = 7919 * n + static_cast<std::uint64_t>(family);
  std::size_t agree = 0, total = 0;
  for (bool satisfying : {true, false}) {
    for (const auto& m : constraint_samples(family, n, 100, satisfying, seed + (satisfying ? 0 : 1))) {
      ++total;
      if (verify_constraint_system(family, n, m).agree()) ++agree;
    }
  }
  return {make(id(std::string(to_string(family)) + ".constraints", n), str(total) + "/" + str(total) + " agree",
               "constraints hold iff Leibniz (100 satisfying, 100 violating)",
               str(agree) + "/" + str(total) + " agree", agree == total && total == 200)};
}

// --- degenerations ---------------------------------------------------------

std::vector<RationalFunction> ones_with(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<RationalFunction> d(n, RationalFunction(Rational(1)));
  for (std::size_t i = from; i < to; ++i) d[i] = RationalFunction(Polynomial::t());
  return d;
}

Claims degenerations(std::size_t n) {
  Claims out;
  {
    std::size_t ok = 0;
    const auto samples = sample_leibniz_params(FamilyId::mu_tilde, n, 3, 31 * n + 1);
    for (auto m : samples) {
      m.erase("alpha2");
      ParamMap target;
      for (std::size_t k = 3; k <= n; ++k) {
        const std::string key = "alpha" + std::to_string(k);
        if (m.contains(key)) target["a" + std::to_string(k)] = m.at(key);
      }
      const ParamBasisChange g = ParamBasisChange::diagonal(ones_with(n, 1, n));
      if (degenerates_via(build(FamilyId::mu_tilde, n, m), g, build(FamilyId::lambda, n, target))) ++ok;
    }
    out.push_back(make(id("degeneration.mu_tilde_to_lambda", n), "3/3 PASS", "g_t = diag(1,t,...,t)",
                       str(ok) + "/3 PASS", ok == 3));
  }
  {
    std::size_t ok = 0;
    const auto samples = sample_leibniz_params(FamilyId::nu1, n, 3, 37 * n + 2);
    for (const auto& m : samples) {
      std::vector<Rational> a;
      for (std::size_t k = 2; k + 1 <= n; ++k) {
        auto it = m.find("a" + std::to_string(k));
        a.push_back(it == m.end() ? Rational() : it->second);
      }
      const ParamBasisChange g = ParamBasisChange::diagonal(ones_with(n, n - 1, n));
      if (degenerates_via(nu1_cover(n, a), g, build(FamilyId::nu1, n, m))) ++ok;
    }
    out.push_back(make(id("degeneration.nu1_cover_to_nu1", n), "3/3 PASS", "g_t(x_n) = t x_n, sum a_k = 1",
                       str(ok) + "/3 PASS", ok == 3));
  }
  return out;
}

Claims nf4_degeneration() {
  std::vector<RationalFunction> d;
  for (std::size_t i = 0; i < 4; ++i) d.push_back(RationalFunction(Polynomial::monomial(i)));
  const bool ok = degenerates_via(build(FamilyId::NF, 4), ParamBasisChange::diagonal(d), abelian(4));
  return {make("degeneration.NF_to_abelian/n=4", "PASS", "g_t = diag(1,t,t^2,t^3)", ok ? "PASS" : "FAIL", ok)};
}

// --- Leibniz suite ---------------------------------------------------------

Claims leibniz_suite(std::size_t n) {
  std::size_t algebras = 0, defective = 0;
  std::string first_bad;
  auto check = [&](FamilyId f, const ParamMap& m) {
    ++algebras;
    const bool ok = leibniz_defect(build(f, n, m)).empty();
    if (!ok) {
      ++defective;
      if (first_bad.empty()) first_bad = std::string(to_string(f));
    }
  };
  for (FamilyId f : {FamilyId::NF, FamilyId::F1graded, FamilyId::F2graded}) check(f, {});
  check(FamilyId::F3graded, {});
  if (n % 2 == 0) check(FamilyId::F3graded, {{"alpha", Rational(1)}});
  const std::uint64_t seed = 101 * n;
  for (FamilyId f : {FamilyId::F1, FamilyId::F2, FamilyId::F3}) {
    for (const auto& m : sample_leibniz_params(f, n, 5, seed + static_cast<std::uint64_t>(f))) check(f, m);
  }
  for (FamilyId f : {FamilyId::mu_tilde, FamilyId::lambda}) {
    for (const auto& m : sample_leibniz_params(f, n, 3, seed + static_cast<std::uint64_t>(f))) check(f, m);
  }
  check(FamilyId::R, {});
  for (FamilyId f : {FamilyId::nu1, FamilyId::nu2, FamilyId::nu3, FamilyId::nu4, FamilyId::nu5}) {
    for (const auto& m : sample_leibniz_params(f, n, 3, seed + static_cast<std::uint64_t>(f))) check(f, m);
  }
  std::string computed = str(defective) + " of " + str(algebras) + " with nonempty defect";
  if (!first_bad.empty()) computed += " (first: " + first_bad + ")";
  return {make(id("leibniz.catalog", n), "0 of " + str(algebras) + " with nonempty defect",
               "every catalog member is Leibniz", computed, defective == 0)};
}

// --- scheduling ------------------------------------------------------------

Claims run_tasks(const std::vector<std::pair<std::string, Task>>& tasks, std::size_t threads) {
  std::vector<Claims> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = guarded(tasks[i].first, tasks[i].second);
  };
  threads = std::max<std::size_t>(1, std::min(threads, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Claims all;
  for (auto& r : results) all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return all;
}

}  // namespace

VerificationReport run_claims(std::size_t n_lo, std::size_t n_hi, const RunOptions& options) {
  if (n_lo < 3 || n_hi > 12 || n_lo > n_hi) throw BadParams("n range must satisfy 3 <= A <= B <= 12");
  std::vector<std::pair<std::string, Task>> tasks;
  auto add = [&](std::string name, Task t) { tasks.emplace_back(std::move(name), std::move(t)); };
  const std::size_t shape_max = options.basis_n_max;
  // Most expensive first so the pool stays busy.
  for (std::size_t n = n_hi + 1; n-- > n_lo;) {
    add(id("F3.dims", n), [n, shape_max] { return f3_dims(n, shape_max); });
    add(id("F1.dims", n), [n] { return f1_dims(n); });
    add(id("F2.dims", n), [n] { return f2_dims(n); });
    if (n >= 4) add(id("R.dims", n), [n] { return r_dims(n); });
  }
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    if (n <= options.basis_n_max) {
      add(id("F1.bases", n), [n] { return bases(BaseFamily::F1, n); });
      add(id("F2.bases", n), [n] { return bases(BaseFamily::F2, n); });
    }
    if (n >= 4 && n <= 6) {
      add(id("F2.integrability", n), [n] { return integrability_table(n); });
      add(id("mu35.constraints", n), [n] { return constraints(FamilyId::mu35, n); });
      add(id("nu.constraints", n), [n] { return constraints(FamilyId::nu, n); });
      add(id("degeneration", n), [n] { return degenerations(n); });
    }
    add(id("leibniz.catalog", n), [n] { return leibniz_suite(n); });
  }
  add("degeneration.NF_to_abelian/n=4", [] { return nf4_degeneration(); });

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  VerificationReport r;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  r.claims = run_tasks(tasks, threads);
  std::sort(r.claims.begin(), r.claims.end(),
            [](const Claim& a, const Claim& b) { return natural_less(a.claim_id, b.claim_id); });
  return r;
}

std::string render_text(const VerificationReport& r) {
  std::size_t w_id = 8, w_st = 6, w_ex = 8, w_co = 8;
  for (const auto& c : r.claims) {
    w_id = std::max(w_id, c.claim_id.size());
    w_st = std::max(w_st, to_string(c.status).size());
    w_ex = std::max(w_ex, c.expected.size());
    w_co = std::max(w_co, c.computed.size());
  }
  std::ostringstream os;
  auto cell = [&](const std::string& s, std::size_t w) { os << s << std::string(w - s.size() + 2, ' '); };
  cell("claim_id", w_id);
  cell("status", w_st);
  cell("expected", w_ex);
  cell("computed", w_co);
  os << "source\n";
  for (const auto& c : r.claims) {
    cell(c.claim_id, w_id);
    cell(std::string(to_string(c.status)), w_st);
    cell(c.expected, w_ex);
    cell(c.computed, w_co);
    os << c.source << '\n';
  }
  os << r.claims.size() << " claims, n = " << r.n_lo << ".." << r.n_hi << ": " << r.count(ClaimStatus::Pass)
     << " PASS, " << r.count(ClaimStatus::Fail) << " FAIL, " << r.count(ClaimStatus::DiscrepancyDocumented)
     << " DISCREPANCY_DOCUMENTED\n";
  return os.str();
}

io::Json render_json(const VerificationReport& r) {
  io::Json claims = io::Json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"claim_id", c.claim_id},
                      {"expected", {{"value", c.expected}, {"source", c.source}}},
                      {"computed", c.computed},
                      {"status", std::string(to_string(c.status))}});
  }
  io::Json doc;
  doc["n_range"] = {r.n_lo, r.n_hi};
  doc["claims"] = std::move(claims);
  doc["summary"] = {{"total", r.claims.size()},
                    {"pass", r.count(ClaimStatus::Pass)},
                    {"fail", r.count(ClaimStatus::Fail)},
                    {"discrepancy_documented", r.count(ClaimStatus::DiscrepancyDocumented)}};
  return doc;
}

}  // namespace leibniz
