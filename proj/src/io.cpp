#include "leibniz/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz::io {

namespace {

[[noreturn]] void fail(const std::string& why) { throw ParseError(why); }

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) fail("expected a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t positive_index(const Json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
  const auto x = v.get<long long>();
  if (x < 1 || static_cast<unsigned long long>(x) > bound) {
    fail(std::string(what) + " " + std::to_string(x) + " outside 1.." + std::to_string(bound));
  }
  return static_cast<std::size_t>(x - 1);
}

std::size_t dimension(const Json& doc) {
  const Json& d = field(doc, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) fail("dim must be a positive integer");
  return static_cast<std::size_t>(d.get<long long>());
}

void check_schema(const Json& doc) {
  auto it = doc.find("schema_version");
  if (it == doc.end()) return;
  if (!it->is_string() || it->get<std::string>() != kSchemaVersion) {
    fail("unsupported schema_version (expected \"" + std::string(kSchemaVersion) + "\")");
  }
}

Json coeffs_json(const SparseVector& v) {
  Json c = Json::object();
  for (const auto& [k, x] : v) c[std::to_string(k + 1)] = x.to_string();
  return c;
}

SparseVector coeffs_from_json(const Json& c, std::size_t n) {
  if (!c.is_object()) fail("coeffs must be an object mapping k to a rational string");
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (auto it = c.begin(); it != c.end(); ++it) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      const long long raw = std::stoll(it.key(), &used);
      if (used != it.key().size() || raw < 1 || static_cast<unsigned long long>(raw) > n) fail("");
      k = static_cast<std::size_t>(raw - 1);
    } catch (const std::logic_error&) {
      fail("coefficient key '" + it.key() + "' is not an index in 1.." + std::to_string(n));
    } catch (const ParseError&) {
      fail("coefficient key '" + it.key() + "' is not an index in 1.." + std::to_string(n));
    }
    entries.emplace_back(k, parse_rational_value(it.value()));
  }
  return SparseVector(std::move(entries));
}

RationalFunction rf_from_json(const Json& v) {
  if (v.is_string()) return RationalFunction::parse(v.get<std::string>());
  if (v.is_number_integer()) return RationalFunction(Rational(Integer(std::to_string(v.get<long long>()), 10)));
  fail("witness entries must be rational-function strings");
}

}  // namespace

Rational parse_rational_value(const Json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>()), 10));
  fail("rational values must be strings \"p/q\" or integers");
}

Json algebra_to_json(const Algebra& a) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dim"] = a.dim();
  if (!a.label().empty()) doc["label"] = a.label();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const SparseVector& p = a.product(i, j);
      if (p.empty()) continue;
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs_json(p)}});
    }
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

Algebra algebra_from_json(const Json& doc) {
  try {
    check_schema(doc);
    const std::size_t n = dimension(doc);
    std::string label;
    if (auto it = doc.find("label"); it != doc.end() && !it->is_null()) {
      if (!it->is_string()) fail("label must be a string");
      label = it->get<std::string>();
    }
    AlgebraBuilder b(n);
    const auto bit = doc.find("brackets");
    const Json empty = Json::array();
    const Json& brackets = bit == doc.end() ? empty : *bit;
    if (!brackets.is_array()) fail("brackets must be an array");
    for (const Json& e : brackets) {
      const std::size_t i = positive_index(field(e, "i"), n, "bracket index i");
      const std::size_t j = positive_index(field(e, "j"), n, "bracket index j");
      const SparseVector v = coeffs_from_json(field(e, "coeffs"), n);
      for (const auto& [k, c] : v) b.add(i, j, k, c);
    }
    return b.build(label);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid algebra document: ") + e.what());
  }
}

std::string emit_algebra(const Algebra& a) { return algebra_to_json(a).dump(2); }

Algebra parse_algebra(std::string_view text) { return algebra_from_json(parse_text(text)); }

Json cochain_to_json(const Cochain& c) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dim"] = c.dim();
  doc["degree"] = c.degree();
  Json values = Json::array();
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    const SparseVector& v = c.value_at(t);
    if (v.empty()) continue;
    Json args = Json::array();
    for (std::size_t x : c.tuple_args(t)) args.push_back(x + 1);
    values.push_back({{"args", std::move(args)}, {"coeffs", coeffs_json(v)}});
  }
  doc["values"] = std::move(values);
  return doc;
}

Cochain cochain_from_json(const Json& doc) {
  try {
    check_schema(doc);
    const std::size_t n = dimension(doc);
    const Json& deg = field(doc, "degree");
    if (!deg.is_number_integer() || deg.get<long long>() < 1 || deg.get<long long>() > 8) {
      fail("degree must be an integer in 1..8");
    }
    const auto m = static_cast<std::size_t>(deg.get<long long>());
    Cochain c(n, m);
    const Json& values = field(doc, "values");
    if (!values.is_array()) fail("values must be an array");
    for (const Json& e : values) {
      const Json& args = field(e, "args");
      if (!args.is_array() || args.size() != m) fail("args must list " + std::to_string(m) + " indices");
      std::vector<std::size_t> idx;
      for (const Json& x : args) idx.push_back(positive_index(x, n, "argument index"));
      for (const auto& [k, v] : coeffs_from_json(field(e, "coeffs"), n)) c.add(idx, k, v);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid cochain document: ") + e.what());
  }
}

std::string emit_cochain(const Cochain& c) { return cochain_to_json(c).dump(2); }

Cochain parse_cochain(std::string_view text) { return cochain_from_json(parse_text(text)); }

ParamBasisChange witness_from_json(const Json& doc) {
  try {
    const Json* rows = nullptr;
    const Json* diag = nullptr;
    if (doc.is_object()) {
      if (auto it = doc.find("rows"); it != doc.end()) rows = &*it;
      if (auto it = doc.find("diag"); it != doc.end()) diag = &*it;
      if ((rows == nullptr) == (diag == nullptr)) fail("witness object needs exactly one of 'rows' or 'diag'");
    } else if (doc.is_array() && !doc.empty() && doc.front().is_array()) {
      rows = &doc;
    } else if (doc.is_array()) {
      diag = &doc;
    } else {
      fail("witness must be an object or an array");
    }
    if (diag != nullptr) {
      if (!diag->is_array() || diag->empty()) fail("diag must be a non-empty array");
      std::vector<RationalFunction> d;
      for (const Json& x : *diag) d.push_back(rf_from_json(x));
      return ParamBasisChange::diagonal(d);
    }
    if (!rows->is_array() || rows->empty()) fail("rows must be a non-empty array");
    RFMatrix g;
    for (const Json& r : *rows) {
      if (!r.is_array() || r.size() != rows->size()) fail("witness must be a square matrix");
      std::vector<RationalFunction> row;
      for (const Json& x : r) row.push_back(rf_from_json(x));
      g.push_back(std::move(row));
    }
    return ParamBasisChange(std::move(g));
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid witness document: ") + e.what());
  }
}

ParamBasisChange parse_witness(std::string_view text) { return witness_from_json(parse_text(text)); }

Json witness_to_json(const ParamBasisChange& g) {
  Json rows = Json::array();
  for (const auto& r : g.matrix()) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace leibniz::io
