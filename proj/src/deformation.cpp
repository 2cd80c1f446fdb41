#include "leibniz/deformation.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "leibniz/cohomology.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

Algebra deform(const Algebra& base, const Cochain& direction, const Rational& t) {
  const std::size_t n = base.dim();
  if (direction.dim() != n || direction.degree() != 2) {
    throw DimensionMismatch("deformation direction must be a 2-cochain on the base");
  }
  std::vector<SparseVector> table = base.table();
  for (std::size_t p = 0; p < table.size(); ++p) table[p].add_scaled(t, direction.value_at(p));
  return Algebra(n, std::move(table), base.label());
}

Algebra deform(const LinearDeformation& d) { return deform(d.base, d.direction, d.t); }

Cochain deformation_direction(const Algebra& base, const Algebra& deformed) {
  if (base.dim() != deformed.dim()) throw DimensionMismatch("algebras of different dimension");
  return Cochain::from_algebra(deformed) - Cochain::from_algebra(base);
}

std::string_view to_string(Integrability r) {
  switch (r) {
    case Integrability::Integrable:
      return "integrable";
    case Integrability::NotACocycle:
      return "not a cocycle";
    case Integrability::QuadraticFailure:
      return "quadratic condition fails";
  }
  return "?";
}

Integrability integrability(const Algebra& base, const Cochain& phi) {
  if (phi.degree() != 2 || phi.dim() != base.dim()) {
    throw DimensionMismatch("integrability needs a 2-cochain on the base");
  }
  if (!is_leibniz(base)) throw NotLeibniz("integrability requires a Leibniz base");
  if (!is_cocycle(base, phi)) return Integrability::NotACocycle;
  if (!is_leibniz(phi.as_algebra())) return Integrability::QuadraticFailure;
  return Integrability::Integrable;
}

bool integrable_linear(const Algebra& base, const Cochain& phi) {
  return integrability(base, phi) == Integrability::Integrable;
}

namespace {

Rational get(const ParamMap& m, const std::string& name) {
  auto it = m.find(name);
  return it == m.end() ? Rational() : it->second;
}

class Equations {
 public:
  explicit Equations(std::vector<std::string>* sink) : sink_(sink) {}
  void zero(const Rational& value, const std::string& text) {
    if (value.is_zero()) return;
    ok_ = false;
    if (sink_ != nullptr) sink_->push_back(text);
  }
  bool ok() const { return ok_; }

 private:
  std::vector<std::string>* sink_;
  bool ok_ = true;
};

std::string s(std::size_t i) { return std::to_string(i); }

bool mu35_holds(std::size_t n, const ParamMap& p, std::vector<std::string>* violated) {
  Equations eq(violated);
  auto a = [&](std::size_t k) { return get(p, "a" + s(k)); };
  auto b = [&](std::size_t k) { return get(p, "b" + s(k)); };
  eq.zero(b(2), "b2 = 0");
  const Rational c1 = get(p, "c1");
  const Rational cn = get(p, "cn");
  for (std::size_t k = 1; k <= n; ++k) {
    eq.zero(c1 * a(k), "c1 a" + s(k) + " = 0");
    eq.zero(cn * a(k), "cn a" + s(k) + " = 0");
    for (std::size_t i = 4; i <= n; ++i) eq.zero(b(i) * a(k), "b" + s(i) + " a" + s(k) + " = 0");
  }
  return eq.ok();
}

bool nu_reduced_holds(std::size_t n, const ParamMap& p, std::vector<std::string>* violated) {
  Equations eq(violated);
  auto a = [&](std::size_t k) { return get(p, "a" + s(k)); };
  auto b = [&](std::size_t k) { return get(p, "b" + s(k)); };
  const Rational bn = b(n);
  const Rational b1 = b(1);
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    eq.zero(b(n - 1) * a(k) + bn * b(k), "b" + s(n - 1) + " a" + s(k) + " = -b" + s(n) + " b" + s(k));
  }
  for (std::size_t i = 2; i + 2 <= n; ++i) {
    const Rational bi = b(n - i);
    for (std::size_t k = 2; k < i; ++k) eq.zero(bi * a(k), "b" + s(n - i) + " a" + s(k) + " = 0");
    eq.zero(bi * a(i) - Rational(static_cast<long>(i)) * bn * b1,
            "b" + s(n - i) + " a" + s(i) + " = " + s(i) + " b" + s(n) + " b1");
    for (std::size_t k = i + 1; k + 1 <= n; ++k) {
      eq.zero(bi * a(k) + bn * b(k - i + 1),
              "b" + s(n - i) + " a" + s(k) + " = -b" + s(n) + " b" + s(k - i + 1));
    }
  }
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    eq.zero(Rational(static_cast<long>(n - k)) * a(k) * b1, "(" + s(n - k) + ") a" + s(k) + " b1 = 0");
  }
  const Rational coef(static_cast<long>((n + 1) * (n - 2)), 2);
  eq.zero((a(n - 1) + coef * bn) * b1, "(a" + s(n - 1) + " + " + coef.to_string() + " b" + s(n) + ") b1 = 0");
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    eq.zero(b1 * b(k) - b(n + 1) * a(k), "b1 b" + s(k) + " = b" + s(n + 1) + " a" + s(k));
  }
  eq.zero(b1 * b(n - 1) - b(n + 1) * (a(n - 1) + Rational(2) * bn),
          "b1 b" + s(n - 1) + " = b" + s(n + 1) + " (a" + s(n - 1) + " + 2 b" + s(n) + ")");
  return eq.ok();
}

bool nu_holds(std::size_t n, const ParamMap& p, std::vector<std::string>* violated) {
  auto b = [&](std::size_t k) { return get(p, "b" + s(k)); };
  if (!b(n + 2).is_zero()) {
    if (violated != nullptr) violated->push_back("b" + s(n + 2) + " = 0");
    return false;
  }
  bool annihilated = true;
  for (std::size_t k = 1; k <= n + 1; ++k) annihilated = annihilated && b(k).is_zero();
  if (annihilated) return true;
  Equations eq(violated);
  eq.zero(get(p, "a" + s(n)), "a" + s(n) + " = 0");
  eq.zero(get(p, "c1") + b(n), "c1 = -b" + s(n));
  const bool head = eq.ok();
  const bool tail = nu_reduced_holds(n, p, violated);
  return head && tail;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t m) { return rng_() % m; }
  Rational small() {
    const long num = static_cast<long>(below(11)) - 5;
    const long den = static_cast<long>(below(3)) + 1;
    return Rational(num, den);
  }
  Rational nonzero() {
    Rational r;
    do {
      r = small();
    } while (r.is_zero());
    return r;
  }

 private:
  std::mt19937_64 rng_;
};

ParamMap mu35_satisfying(std::size_t n, Sampler& g) {
  ParamMap m;
  if (g.below(2) == 0) {
    // lambda branch: some a_k nonzero, everything else zero.
    for (std::size_t k = 1; k <= n; ++k) m["a" + s(k)] = g.small();
    m["a" + s(1 + g.below(n))] = g.nonzero();
  } else {
    m["c1"] = g.small();
    m["cn"] = g.small();
    for (std::size_t k = 4; k <= n; ++k) m["b" + s(k)] = g.small();
  }
  return m;
}

ParamMap mu35_violating(std::size_t n, Sampler& g) {
  ParamMap m = mu35_satisfying(n, g);
  switch (g.below(3)) {
    case 0:
      m["b2"] = g.nonzero();
      break;
    case 1: {
      m["a" + s(1 + g.below(n))] = g.nonzero();
      const std::size_t pick = g.below(n - 1);
      m[pick == 0 ? "c1" : (pick == 1 ? "cn" : "b" + s(pick + 2))] = g.nonzero();
      break;
    }
    default:
      for (const auto& name : parameter_names(FamilyId::mu35, n)) m[name] = g.small();
      break;
  }
  return m;
}

ParamMap nu_satisfying(std::size_t n, Sampler& g) {
  ParamMap m;
  switch (g.below(6)) {
    case 0:  // x_n in Ann_r
      for (std::size_t k = 2; k <= n; ++k) m["a" + s(k)] = g.small();
      m["c1"] = g.small();
      break;
    case 1:  // b1 != 0
      m["b1"] = g.nonzero();
      m["b" + s(n + 1)] = g.small();
      break;
    case 2:  // nilpotent F1/F2 branch
      for (std::size_t k = 2; k + 1 <= n; ++k) m["b" + s(k)] = g.small();
      m["b" + s(n + 1)] = g.small();
      break;
    case 3: {
      const Rational bn = g.nonzero();
      m["b" + s(n)] = bn;
      m["b" + s(n - 1)] = g.small();
      m["a" + s(n - 1)] = -bn;
      m["c1"] = -bn;
      break;
    }
    case 4: {
      const Rational bn = g.small();
      m["b" + s(n)] = bn;
      m["b" + s(n + 1)] = g.nonzero();
      m["a" + s(n - 1)] = Rational(-2) * bn;
      m["c1"] = -bn;
      break;
    }
    default: {
      const Rational bn = g.nonzero();
      m["b" + s(n)] = bn;
      for (std::size_t k = 2; k + 1 <= n; ++k) m["a" + s(k)] = g.small();
      m["c1"] = -bn;
      break;
    }
  }
  return m;
}

ParamMap nu_violating(std::size_t n, Sampler& g) {
  const auto names = parameter_names(FamilyId::nu, n);
  if (g.below(2) == 0) {
    ParamMap m;
    for (const auto& name : names) m[name] = g.small();
    return m;
  }
  ParamMap m = nu_satisfying(n, g);
  m[names[g.below(names.size())]] = g.nonzero();
  return m;
}

}  // namespace

bool constraint_system_holds(FamilyId family, std::size_t n, const ParamMap& params,
                             std::vector<std::string>* violated) {
  switch (family) {
    case FamilyId::mu35:
      return mu35_holds(n, params, violated);
    case FamilyId::nu:
      return nu_holds(n, params, violated);
    default:
      throw BadParams("constraint systems exist for mu35 and nu only");
  }
}

ConstraintReport verify_constraint_system(FamilyId family, std::size_t n, const ParamMap& params) {
  ConstraintReport r;
  r.family = family;
  r.n = n;
  r.constraints_hold = constraint_system_holds(family, n, params, &r.violated);
  const auto defect = leibniz_defect(build(family, n, params));
  r.defect_triples = defect.size();
  r.leibniz = defect.empty();
  return r;
}

std::vector<ParamMap> constraint_samples(FamilyId family, std::size_t n, std::size_t count, bool satisfying,
                                         std::uint64_t seed) {
  if (family != FamilyId::mu35 && family != FamilyId::nu) {
    throw BadParams("constraint samples exist for mu35 and nu only");
  }
  if (n < 4) throw BadParams("constraint samples need n >= 4");
  Sampler g(seed);
  std::vector<ParamMap> out;
  while (out.size() < count) {
    ParamMap m;
    if (family == FamilyId::mu35) {
      m = satisfying ? mu35_satisfying(n, g) : mu35_violating(n, g);
    } else {
      m = satisfying ? nu_satisfying(n, g) : nu_violating(n, g);
    }
    if (constraint_system_holds(family, n, m) == satisfying) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace leibniz
