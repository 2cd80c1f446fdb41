// leibniz: command-line front end for the algebra, cohomology, deformation
// and degeneration routines.
//
// Exit codes: 0 success, 1 negative answer (FAIL, not integrable, failed
// claim), 2 invalid input, 3 cohomology requested for a non-Leibniz algebra.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/deformation.hpp"
#include "leibniz/degeneration.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"
#include "leibniz/labels.hpp"
#include "leibniz/verify.hpp"

namespace {

using namespace leibniz;
using io::Json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kNotLeibniz = 3;

struct Globals {
  bool json = false;
  std::string n_range = "3..8";
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw ParseError("--n-range expects A..B, got '" + s + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const unsigned long lo = std::stoul(a, &used_a);
    const unsigned long hi = std::stoul(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing characters");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("--n-range expects A..B with integers, got '" + s + "'");
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

Cochain load_direction(const Algebra& a, const std::string& cochain_path, const std::string& label) {
  if (!label.empty()) return named_cochain(a, CochainLabel::parse(label));
  if (cochain_path.empty()) throw ParseError("give a cochain document or --label");
  return io::parse_cochain(io::read_input(cochain_path));
}

ParamBasisChange load_witness(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return io::parse_witness(arg);
  return io::parse_witness(io::read_input(arg));
}

// --- subcommands -----------------------------------------------------------

int cmd_build(const std::string& family, std::size_t n, const std::vector<std::string>& params,
              const std::optional<std::string>& alpha) {
  ParamMap m;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw BadParams("--param expects name=value, got '" + p + "'");
    m[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
  }
  if (alpha) m["alpha"] = Rational::parse(*alpha);
  print_json(io::algebra_to_json(build(family_from_string(family), n, m)));
  return kOk;
}

int cmd_analyze(const Globals& g, const std::string& path, bool with_cohomology) {
  const Algebra a = io::parse_algebra(io::read_input(path));
  const bool leib = is_leibniz(a);
  const auto lcs = dims(lower_central_series(a));
  const auto ds = dims(derived_series(a));
  const auto ni = nilindex(a);
  const bool fil = is_filiform(a);
  const std::size_t ann = right_annihilator(a).dim();
  std::optional<CohomologySummary> s;
  if (with_cohomology && leib) s = cohomology_summary(a);

  if (g.json) {
    Json j;
    j["label"] = a.label();
    j["dim"] = a.dim();
    j["leibniz"] = leib;
    j["lie"] = leib && is_anticommutative(a);
    j["lower_central_series"] = lcs;
    j["derived_series"] = ds;
    j["nilindex"] = ni ? Json(*ni) : Json(nullptr);
    j["filiform"] = fil;
    j["ann_r_dim"] = ann;
    if (s) {
      j["cohomology"] = {{"der", s->der}, {"zl2", s->zl2}, {"bl2", s->bl2}, {"hl2", s->hl2},
                         {"rigid_criterion", s->hl2 == 0}};
    }
    print_json(j);
  } else {
    if (!a.label().empty()) std::cout << "label: " << a.label() << '\n';
    std::cout << "dim: " << a.dim() << '\n'
              << "leibniz: " << (leib ? "yes" : "no") << '\n'
              << "lie: " << (leib && is_anticommutative(a) ? "yes" : "no") << '\n'
              << "lower central series dims: " << join(lcs) << '\n'
              << "derived series dims: " << join(ds) << '\n'
              << "nilindex: " << (ni ? std::to_string(*ni) : "none (not nilpotent)") << '\n'
              << "filiform: " << (fil ? "yes" : "no") << '\n'
              << "Ann_r dim: " << ann << '\n';
    if (s) {
      std::cout << "Der=" << s->der << " ZL2=" << s->zl2 << " BL2=" << s->bl2 << " HL2=" << s->hl2
                << (s->hl2 == 0 ? " (rigid criterion met)" : "") << '\n';
    }
  }
  if (with_cohomology && !leib) throw NotLeibniz("cohomology requested for a non-Leibniz algebra");
  return kOk;
}

int cmd_cohomology(const Globals& g, const std::string& path) {
  const Algebra a = io::parse_algebra(io::read_input(path));
  const CohomologySummary s = cohomology_summary(a);
  std::optional<std::size_t> z2;
  if (is_anticommutative(a)) z2 = skew_cocycles2(a).dim();
  if (g.json) {
    Json j{{"der", s.der}, {"zl2", s.zl2}, {"bl2", s.bl2}, {"hl2", s.hl2}, {"rigid_criterion", s.hl2 == 0}};
    if (z2) j["z2_skew"] = *z2;
    print_json(j);
  } else {
    std::cout << "Der=" << s.der << " ZL2=" << s.zl2 << " BL2=" << s.bl2 << " HL2=" << s.hl2
              << (s.hl2 == 0 ? " (rigid criterion met)" : "") << '\n';
    if (z2) std::cout << "Z2(skew)=" << *z2 << '\n';
  }
  return kOk;
}

int cmd_deform(const std::string& alg_path, const std::string& cochain_path, const std::string& label,
               const std::string& t) {
  const Algebra a = io::parse_algebra(io::read_input(alg_path));
  const Cochain phi = load_direction(a, cochain_path, label);
  print_json(io::algebra_to_json(deform(a, phi, Rational::parse(t))));
  return kOk;
}

int cmd_integrable(const Globals& g, const std::string& alg_path, const std::string& cochain_path,
                   const std::string& label) {
  const Algebra a = io::parse_algebra(io::read_input(alg_path));
  const Cochain phi = load_direction(a, cochain_path, label);
  const Integrability r = integrability(a, phi);
  if (g.json) {
    print_json({{"integrable", r == Integrability::Integrable}, {"result", std::string(to_string(r))}});
  } else {
    std::cout << to_string(r) << '\n';
  }
  return r == Integrability::Integrable ? kOk : kNegative;
}

int cmd_degenerate(const Globals& g, const std::string& source, const std::string& witness,
                   const std::string& target) {
  const Algebra a = io::parse_algebra(io::read_input(source));
  const ParamBasisChange w = load_witness(witness);
  const Algebra b = io::parse_algebra(io::read_input(target));
  if (w.dim() != a.dim()) throw DimensionMismatch("witness dimension differs from the source algebra");
  Json j;
  bool pass = false;
  try {
    const Algebra limit = limit_at_zero(conjugate_family(a, w));
    pass = limit == b;
    j["result"] = pass ? "PASS" : "FAIL";
    if (!pass) {
      j["reason"] = "limit differs from target";
      j["limit"] = io::algebra_to_json(limit);
    }
  } catch (const PoleAtZero& e) {
    j["result"] = "FAIL";
    j["reason"] = "pole at t = 0";
    Json poles = Json::array();
    for (const auto& p : e.entries()) poles.push_back({p[0] + 1, p[1] + 1, p[2] + 1});
    j["poles"] = std::move(poles);
    if (!g.json) {
      std::cout << "FAIL\n" << e.what() << '\n';
      return kNegative;
    }
  }
  if (g.json) {
    print_json(j);
  } else {
    std::cout << j["result"].get<std::string>() << '\n';
    if (!pass) std::cout << j["reason"].get<std::string>() << '\n';
  }
  return pass ? kOk : kNegative;
}

int cmd_verify(const Globals& g, std::size_t threads) {
  const auto [lo, hi] = parse_range(g.n_range);
  RunOptions opt;
  opt.threads = threads;
  const VerificationReport r = run_claims(lo, hi, opt);
  if (g.json) {
    print_json(render_json(r));
  } else {
    std::cout << render_text(r);
  }
  return r.any_fail() ? kNegative : kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Leibniz algebra structure, cohomology, deformations and degenerations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--n-range", g.n_range, "Dimension range A..B for verify-paper (within 3..12)");

  std::function<int()> action;

  auto* build_cmd = app.add_subcommand("build", "Emit the algebra document of a catalog family member");
  std::string family;
  std::size_t n = 0;
  std::vector<std::string> params;
  std::optional<std::string> alpha;
  build_cmd->add_option("family", family, "Family name (NF, F1graded, F2graded, F3graded, F1, F2, F3, "
                                          "mu_tilde, mu35, lambda, R, nu, nu1..nu5)")
      ->required();
  build_cmd->add_option("n", n, "Dimension")->required();
  build_cmd->add_option("--param,-p", params, "Parameter name=value (repeatable)");
  build_cmd->add_option("--alpha", alpha, "Shorthand for --param alpha=VALUE");
  build_cmd->callback([&] { action = [&] { return cmd_build(family, n, params, alpha); }; });

  auto* analyze_cmd = app.add_subcommand("analyze", "Structure report and cohomology dimensions");
  std::string input = "-";
  bool no_cohomology = false;
  analyze_cmd->add_option("input", input, "Algebra document (path or - for stdin)");
  analyze_cmd->add_flag("--no-cohomology", no_cohomology, "Skip Der/ZL2/BL2/HL2");
  analyze_cmd->callback([&] { action = [&] { return cmd_analyze(g, input, !no_cohomology); }; });

  auto* coh_cmd = app.add_subcommand("cohomology", "Der, ZL2, BL2, HL2 (and skew Z2 for Lie input)");
  coh_cmd->add_option("input", input, "Algebra document (path or - for stdin)");
  coh_cmd->callback([&] { action = [&] { return cmd_cohomology(g, input); }; });

  std::string cochain_path, label, t = "1";
  auto* deform_cmd = app.add_subcommand("deform", "Emit the product mu + t*phi");
  deform_cmd->add_option("algebra", input, "Algebra document")->required();
  deform_cmd->add_option("cochain", cochain_path, "Cochain document");
  deform_cmd->add_option("--label", label, "Named cochain such as psi_1 or phi_2_1");
  deform_cmd->add_option("--t", t, "Deformation parameter (rational)");
  deform_cmd->callback([&] { action = [&] { return cmd_deform(input, cochain_path, label, t); }; });

  auto* integ_cmd = app.add_subcommand("integrable", "Is mu + t*phi Leibniz for every t");
  integ_cmd->add_option("algebra", input, "Algebra document")->required();
  integ_cmd->add_option("cochain", cochain_path, "Cochain document");
  integ_cmd->add_option("--label", label, "Named cochain such as psi_1 or phi_2_1");
  integ_cmd->callback([&] { action = [&] { return cmd_integrable(g, input, cochain_path, label); }; });

  std::string source, witness, target;
  auto* degen_cmd = app.add_subcommand("degenerate", "Check lim_{t->0} g_t . source = target");
  degen_cmd->add_option("source", source, "Source algebra document")->required();
  degen_cmd->add_option("witness", witness, "Witness document or inline JSON")->required();
  degen_cmd->add_option("target", target, "Target algebra document")->required();
  degen_cmd->callback([&] { action = [&] { return cmd_degenerate(g, source, witness, target); }; });

  std::size_t threads = 0;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full claim suite");
  verify_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  verify_cmd->callback([&] { action = [&] { return cmd_verify(g, threads); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }
  try {
    return action();
  } catch (const NotLeibniz& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotLeibniz;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
}
