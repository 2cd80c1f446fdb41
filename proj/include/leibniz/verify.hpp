#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/io.hpp"

namespace leibniz {

enum class ClaimStatus { Pass, Fail, DiscrepancyDocumented };

std::string_view to_string(ClaimStatus s);

struct Claim {
  std::string claim_id;  ///< e.g. "F1.zl2_dim/n=6"
  std::string expected;
  std::string source;    ///< where the expected value comes from
  std::string computed;
  ClaimStatus status = ClaimStatus::Fail;
};

struct VerificationReport {
  std::size_t n_lo = 3;
  std::size_t n_hi = 8;
  std::vector<Claim> claims;  ///< sorted by claim_id (numeric runs compare as numbers)

  std::size_t count(ClaimStatus s) const;
  bool any_fail() const { return count(ClaimStatus::Fail) != 0; }
  const Claim* find(std::string_view claim_id) const;
};

/// Orders "a/n=9" before "a/n=10".
bool natural_less(std::string_view a, std::string_view b);

struct RunOptions {
  std::size_t threads = 0;       ///< 0: hardware concurrency
  std::size_t basis_n_max = 6;   ///< explicit basis and shape claims stop here
};

/// Runs every claim for n in [n_lo, n_hi] (within 3..12; BadParams otherwise).
/// The report is identical for any thread count.
VerificationReport run_claims(std::size_t n_lo, std::size_t n_hi, const RunOptions& options = {});

std::string render_text(const VerificationReport& r);
io::Json render_json(const VerificationReport& r);

}  // namespace leibniz
