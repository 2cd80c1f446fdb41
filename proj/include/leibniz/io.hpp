#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/degeneration.hpp"

namespace leibniz::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Algebra document:
//   {"schema_version": "1", "dim": n, "label": "...",
//    "brackets": [{"i": 2, "j": 1, "coeffs": {"3": "1", "4": "-1/2"}}]}
// Indices are 1-based; rationals are strings "p/q" or "p" (JSON integers are
// accepted on input). Every parse failure raises ParseError.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& doc);
std::string emit_algebra(const Algebra& a);
Algebra parse_algebra(std::string_view text);

// Cochain document:
//   {"schema_version": "1", "dim": n, "degree": m,
//    "values": [{"args": [1, 2], "coeffs": {"5": "1"}}]}
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& doc);
std::string emit_cochain(const Cochain& c);
Cochain parse_cochain(std::string_view text);

// Witness g_t, row i = g_t(x_i). Accepted shapes:
//   {"rows": [["t", "0"], ["0", "t^2"]]}, a bare array of rows,
//   {"diag": ["1", "t"]}, or a bare array of strings (diagonal).
ParamBasisChange witness_from_json(const Json& doc);
ParamBasisChange parse_witness(std::string_view text);
Json witness_to_json(const ParamBasisChange& g);

Rational parse_rational_value(const Json& v);

/// Contents of path, or of standard input when path is empty or "-".
std::string read_input(const std::string& path);

}  // namespace leibniz::io
