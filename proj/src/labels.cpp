#include "leibniz/labels.hpp"

#include <cctype>
#include <charconv>

#include "leibniz/catalog.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

using Kind = CochainLabel::Kind;

CochainLabel L(Kind k, std::vector<std::size_t> idx) { return CochainLabel{k, std::move(idx)}; }

// 1-based writer for degree-2 cochains.
struct Writer {
  Cochain c;
  explicit Writer(std::size_t n) : c(n, 2) {}
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (!v.is_zero()) c.add({i - 1, j - 1}, k - 1, v);
  }
};

[[noreturn]] void out_of_range(BaseFamily f, std::size_t n, const CochainLabel& label) {
  throw IndexOutOfFamilyRange(label.to_string() + " is outside the index range of " + std::string(to_string(f)) +
                              " at n=" + std::to_string(n));
}

[[noreturn]] void unknown(BaseFamily f, const CochainLabel& label) {
  throw UnknownLabel(label.to_string() + " is not a named cochain of " + std::string(to_string(f)));
}

void expect_arity(BaseFamily f, const CochainLabel& label, std::size_t arity) {
  if (label.indices.size() != arity) unknown(f, label);
}

Cochain phi(BaseFamily f, std::size_t n, std::size_t j, std::size_t k) {
  Writer w(n);
  if (k == 1) {
    // F^1: 2 <= j <= n-1, rows i = 2..n-1; F^2: 1 <= j <= n-2, rows i = 1..n-2.
    w.add(j, 1, 1, 1);
    const std::size_t lo = f == BaseFamily::F1 ? 2 : 1;
    const std::size_t hi = f == BaseFamily::F1 ? n - 1 : n - 2;
    for (std::size_t i = lo; i <= hi; ++i) w.add(i, j + 1, i + 1, -1);
  } else {
    w.add(j, 1, k, 1);
  }
  return w.c;
}

bool phi_in_range(BaseFamily f, std::size_t n, std::size_t j, std::size_t k) {
  if (k == 1) return f == BaseFamily::F1 ? (j >= 2 && j + 1 <= n) : (j >= 1 && j + 2 <= n);
  return j >= 1 && j <= n && k >= 2 && k <= n;
}

Cochain f1_named(std::size_t n, const CochainLabel& label) {
  const BaseFamily f = BaseFamily::F1;
  const auto& ix = label.indices;
  switch (label.kind) {
    case Kind::phi: {
      expect_arity(f, label, 2);
      if (!phi_in_range(f, n, ix[0], ix[1])) out_of_range(f, n, label);
      return phi(f, n, ix[0], ix[1]);
    }
    case Kind::psi: {
      expect_arity(f, label, 1);
      const std::size_t j = ix[0];
      if (j < 2 || j > n) out_of_range(f, n, label);
      Writer w(n);
      for (std::size_t i = 2; i + j <= n + 2; ++i) w.add(i, 2, j + i - 2, 1);
      return w.c;
    }
    case Kind::xi: {
      expect_arity(f, label, 1);
      Writer w(n);
      if (ix[0] == 1) {
        w.add(1, 2, 1, 1);
        for (std::size_t i = 3; i <= n; ++i) w.add(i, 2, i, static_cast<long>(i) - 2);
        for (std::size_t i = 2; i + 1 <= n; ++i) w.add(i, 3, i + 1, -1);
      } else if (ix[0] == 2) {
        w.add(1, 2, n, 1);
      } else {
        out_of_range(f, n, label);
      }
      return w.c;
    }
    case Kind::eta: {
      expect_arity(f, label, 2);
      const std::size_t j = ix[0];
      const std::size_t k = ix[1];
      if (j == 1 && k >= 2 && k + 1 <= n) return phi(f, n, 1, k + 1);
      if (j == 2 && k == 1) return f1_named(n, L(Kind::psi, {3}));
      if (j >= 3 && j <= n && k == 1) return phi(f, n, j - 1, 1);
      if (j >= 3 && j <= k && k <= n) return phi(f, n, j - 1, k);
      if (k >= 2 && k < j && j <= n) return phi(f, n, j - 1, k) - phi(f, n, j, k + 1);
      out_of_range(f, n, label);
    }
  }
  unknown(f, label);
}

Cochain f2_named(std::size_t n, const CochainLabel& label) {
  const BaseFamily f = BaseFamily::F2;
  const auto& ix = label.indices;
  switch (label.kind) {
    case Kind::phi: {
      expect_arity(f, label, 2);
      if (!phi_in_range(f, n, ix[0], ix[1])) out_of_range(f, n, label);
      return phi(f, n, ix[0], ix[1]);
    }
    case Kind::psi: {
      expect_arity(f, label, 1);
      const std::size_t j = ix[0];
      Writer w(n);
      if (j == 1) {
        w.add(n, 1, 1, 1);
        for (std::size_t i = 1; i + 1 <= n; ++i) w.add(i, n, i, -static_cast<long>(i));
      } else if (j >= 2 && j + 1 <= n) {
        for (std::size_t i = 1; i + j <= n; ++i) w.add(i, n, j + i - 1, 1);
      } else if (j == n) {
        w.add(1, n, n, 1);
      } else if (j == n + 1) {
        w.add(n, n, n - 1, 1);
      } else if (j == n + 2) {
        w.add(n, n, n, 1);
      } else {
        out_of_range(f, n, label);
      }
      return w.c;
    }
    case Kind::xi:
      unknown(f, label);
    case Kind::eta: {
      expect_arity(f, label, 2);
      const std::size_t j = ix[0];
      const std::size_t k = ix[1];
      if (j >= 2 && j + 1 <= n && k == 1) return phi(f, n, j - 1, 1) - phi(f, n, j, 2);
      if (j >= 2 && j <= k && k + 1 <= n) return phi(f, n, j - 1, k);
      if (k >= 2 && k < j && j + 1 <= n) return phi(f, n, j - 1, k) - phi(f, n, j, k + 1);
      if (j >= 2 && j + 1 <= n && k == n) return phi(f, n, j - 1, n);
      if (j == n && k == 1) return phi(f, n, n, 2) + f2_named(n, L(Kind::psi, {2}));
      if (j == n && k >= 2 && k + 2 <= n) return phi(f, n, n, k + 1);
      out_of_range(f, n, label);
    }
  }
  unknown(f, label);
}

Cochain f3_named(std::size_t n, const CochainLabel& label) {
  const BaseFamily f = BaseFamily::F3Zero;
  if (label.kind != Kind::psi) unknown(f, label);
  expect_arity(f, label, 1);
  Writer w(n);
  switch (label.indices[0]) {
    case 1:
      w.add(1, 1, n, 1);
      break;
    case 2:
      w.add(1, 2, n, 1);
      break;
    case 3:
      w.add(2, 2, n, 1);
      break;
    default:
      out_of_range(f, n, label);
  }
  return w.c;
}

}  // namespace

std::string_view to_string(BaseFamily f) {
  switch (f) {
    case BaseFamily::F1:
      return "F1";
    case BaseFamily::F2:
      return "F2";
    case BaseFamily::F3Zero:
      return "F3(0)";
  }
  return "?";
}

BaseFamily base_family_from_string(std::string_view name) {
  if (name == "F1" || name == "F1graded") return BaseFamily::F1;
  if (name == "F2" || name == "F2graded") return BaseFamily::F2;
  if (name == "F3" || name == "F3graded" || name == "F3(0)") return BaseFamily::F3Zero;
  throw UnknownLabel("unknown base family '" + std::string(name) + "'");
}

Algebra base_algebra(BaseFamily f, std::size_t n) {
  switch (f) {
    case BaseFamily::F1:
      return build(FamilyId::F1graded, n);
    case BaseFamily::F2:
      return build(FamilyId::F2graded, n);
    case BaseFamily::F3Zero:
      return build(FamilyId::F3graded, n, {{"alpha", Rational(0)}});
  }
  throw UnknownLabel("unknown base family");
}

CochainLabel CochainLabel::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch == '{' || ch == '}') continue;
    s.push_back(ch == ',' ? '_' : ch);
  }
  std::size_t pos = 0;
  while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
  const std::string name = s.substr(0, pos);
  CochainLabel label;
  if (name == "phi") {
    label.kind = Kind::phi;
  } else if (name == "psi") {
    label.kind = Kind::psi;
  } else if (name == "xi") {
    label.kind = Kind::xi;
  } else if (name == "eta") {
    label.kind = Kind::eta;
  } else {
    throw UnknownLabel("unknown cochain name '" + std::string(text) + "'");
  }
  while (pos < s.size()) {
    if (s[pos] != '_') throw UnknownLabel("malformed cochain label '" + std::string(text) + "'");
    ++pos;
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc() || end == s.data() + pos) {
      throw UnknownLabel("malformed cochain label '" + std::string(text) + "'");
    }
    label.indices.push_back(value);
    pos = static_cast<std::size_t>(end - s.data());
  }
  const std::size_t arity = (label.kind == Kind::phi || label.kind == Kind::eta) ? 2 : 1;
  if (label.indices.size() != arity) throw UnknownLabel("wrong number of indices in '" + std::string(text) + "'");
  return label;
}

std::string CochainLabel::to_string() const {
  std::string s;
  switch (kind) {
    case Kind::phi:
      s = "phi";
      break;
    case Kind::psi:
      s = "psi";
      break;
    case Kind::xi:
      s = "xi";
      break;
    case Kind::eta:
      s = "eta";
      break;
  }
  for (std::size_t i : indices) s += "_" + std::to_string(i);
  return s;
}

Cochain named_cochain(BaseFamily f, std::size_t n, const CochainLabel& label) {
  if (n < 3) throw IndexOutOfFamilyRange("named cochains need n >= 3");
  switch (f) {
    case BaseFamily::F1:
      return f1_named(n, label);
    case BaseFamily::F2:
      return f2_named(n, label);
    case BaseFamily::F3Zero:
      return f3_named(n, label);
  }
  throw UnknownLabel("unknown base family");
}

BaseFamily identify_base(const Algebra& a) {
  if (a.dim() >= 3) {
    for (BaseFamily f : {BaseFamily::F1, BaseFamily::F2, BaseFamily::F3Zero}) {
      if (base_algebra(f, a.dim()) == a) return f;
    }
  }
  throw UnknownLabel("algebra is none of F1, F2, F3(0); named cochains are unavailable");
}

Cochain named_cochain(const Algebra& a, const CochainLabel& label) {
  return named_cochain(identify_base(a), a.dim(), label);
}

std::vector<CochainLabel> zl2_basis_labels(BaseFamily f, std::size_t n) {
  std::vector<CochainLabel> out;
  if (f == BaseFamily::F1) {
    for (std::size_t j = 2; j + 1 <= n; ++j) out.push_back(L(Kind::phi, {j, 1}));
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 2; k <= n; ++k) out.push_back(L(Kind::phi, {j, k}));
    }
    for (std::size_t j = 2; j <= n; ++j) out.push_back(L(Kind::psi, {j}));
    out.push_back(L(Kind::xi, {1}));
    out.push_back(L(Kind::xi, {2}));
  } else if (f == BaseFamily::F2) {
    for (std::size_t j = 1; j + 2 <= n; ++j) out.push_back(L(Kind::phi, {j, 1}));
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 2; k <= n; ++k) out.push_back(L(Kind::phi, {j, k}));
    }
    for (std::size_t j = 1; j <= n + 2; ++j) out.push_back(L(Kind::psi, {j}));
  } else {
    throw UnknownLabel("no labeled ZL2 basis for F3(0)");
  }
  return out;
}

std::vector<CochainLabel> bl2_basis_labels(BaseFamily f, std::size_t n) {
  std::vector<CochainLabel> out;
  if (f == BaseFamily::F1) {
    for (std::size_t k = 2; k + 1 <= n; ++k) out.push_back(L(Kind::eta, {1, k}));
    out.push_back(L(Kind::eta, {2, 1}));
    for (std::size_t j = 3; j <= n; ++j) out.push_back(L(Kind::eta, {j, 1}));
    for (std::size_t j = 3; j <= n; ++j) {
      for (std::size_t k = j; k <= n; ++k) out.push_back(L(Kind::eta, {j, k}));
    }
    for (std::size_t j = 3; j <= n; ++j) {
      for (std::size_t k = 2; k < j; ++k) out.push_back(L(Kind::eta, {j, k}));
    }
  } else if (f == BaseFamily::F2) {
    for (std::size_t j = 2; j + 1 <= n; ++j) out.push_back(L(Kind::eta, {j, 1}));
    for (std::size_t j = 2; j + 1 <= n; ++j) {
      for (std::size_t k = j; k + 1 <= n; ++k) out.push_back(L(Kind::eta, {j, k}));
    }
    for (std::size_t j = 3; j + 1 <= n; ++j) {
      for (std::size_t k = 2; k < j; ++k) out.push_back(L(Kind::eta, {j, k}));
    }
    for (std::size_t j = 2; j + 1 <= n; ++j) out.push_back(L(Kind::eta, {j, n}));
    out.push_back(L(Kind::eta, {n, 1}));
    for (std::size_t k = 2; k + 2 <= n; ++k) out.push_back(L(Kind::eta, {n, k}));
  } else {
    throw UnknownLabel("no labeled BL2 basis for F3(0)");
  }
  return out;
}

std::vector<CochainLabel> hl2_representative_labels(BaseFamily f, std::size_t n) {
  std::vector<CochainLabel> out;
  if (f == BaseFamily::F1) {
    out.push_back(L(Kind::psi, {2}));
    out.push_back(L(Kind::xi, {1}));
    out.push_back(L(Kind::xi, {2}));
    out.push_back(L(Kind::phi, {1, 2}));
    for (std::size_t k = 2; k <= n; ++k) out.push_back(L(Kind::phi, {n, k}));
    for (std::size_t j = 4; j <= n; ++j) out.push_back(L(Kind::psi, {j}));
  } else if (f == BaseFamily::F2) {
    out.push_back(L(Kind::phi, {n, n}));
    for (std::size_t k = 2; k <= n; ++k) out.push_back(L(Kind::phi, {n - 1, k}));
    for (std::size_t j = 1; j <= n + 2; ++j) out.push_back(L(Kind::psi, {j}));
  } else {
    throw UnknownLabel("no labeled HL2 representatives for F3(0)");
  }
  return out;
}

std::vector<CochainLabel> skew_complement_labels() {
  return {L(Kind::psi, {1}), L(Kind::psi, {2}), L(Kind::psi, {3})};
}

std::vector<CochainLabel> f2_integrable_labels(std::size_t n) {
  std::vector<CochainLabel> out;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 2; k <= n; ++k) out.push_back(L(Kind::phi, {j, k}));
  }
  for (std::size_t j = 1; j + 1 <= n; ++j) out.push_back(L(Kind::psi, {j}));
  out.push_back(L(Kind::psi, {n + 1}));
  return out;
}

std::vector<CochainLabel> f2_non_integrable_labels(std::size_t n) {
  std::vector<CochainLabel> out{L(Kind::psi, {n}), L(Kind::psi, {n + 2})};
  for (std::size_t j = 1; j + 2 <= n; ++j) out.push_back(L(Kind::phi, {j, 1}));
  return out;
}

Cochain elementary_map(std::size_t n, std::size_t j, std::size_t k) {
  if (j < 1 || j > n || k < 1 || k > n) throw std::out_of_range("elementary map index out of range");
  Cochain c(n, 1);
  c.add({j - 1}, k - 1, 1);
  return c;
}

}  // namespace leibniz
