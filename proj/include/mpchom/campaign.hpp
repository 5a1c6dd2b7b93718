// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_CAMPAIGN_HPP
#define MPCHOM_CAMPAIGN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mpchom/parse.hpp"

namespace mpchom {

/// SplitMix64: the campaign PRNG. State advances by the 64-bit golden-ratio
/// increment and each output is finalized by the standard mix. Per-trial
/// streams are seeded as mix(seed, trial index), so serial and parallel
/// schedules draw identically.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [lo, hi] by modulo reduction (documented, not
  /// rejection-corrected; determinism matters here, not bias).
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    return g.next();
  }

 private:
  std::uint64_t state_;
};

struct CampaignConfig {
  std::string ring_text = "Z4";
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t m_min = 1, m_max = 3;
  std::size_t l_min = 1, l_max = 4;
  std::size_t n_min = 1, n_max = 2;
  std::vector<std::string> code_kinds = {"linear", "nested", "explicit",
                                         "socle"};
  std::uint64_t max_product = 50'000;   // cap on prod |C_j| per trial
  std::uint64_t max_dual = 1'000'000;   // cap on |R|^(n*m) for dual checks
  bool check_dual = true;
  bool check_rowspan = true;
  bool check_partial = true;
  bool include_trials = false;  // per-trial detail in the JSON report
  std::string format = "json";  // "json" or "csv"
  std::string out_path;         // empty = stdout

  static CampaignConfig from_json(const Json& j);
  Json to_json() const;
};

struct TrialSummary {
  std::uint64_t index = 0;
  std::size_t m = 0, l = 0, n = 0;
  std::string kind;
  bool skipped = false;
  std::string skip_reason;
  Rat d_h;
  Rat bound;
  bool hypothesis_ok = false;
  bool bound_holds = false;
  bool c1 = false;
  bool c2 = false;
  bool equality = false;
  bool dual_checked = false;
  bool dual_ok = false;
  bool rowspan_ok = true;
  bool partial_ok = true;
};

struct CampaignResult {
  std::uint64_t trials = 0;
  std::uint64_t completed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;      // completed trials with d_h < bound
  std::uint64_t equality_hits = 0;
  std::uint64_t c1_trials = 0;
  std::uint64_t c2_trials = 0;
  std::uint64_t flagged_equality_misses = 0;  // c1/c2 trials without equality
  std::uint64_t dual_checked = 0;
  std::uint64_t dual_failures = 0;
  std::uint64_t rowspan_checks = 0;
  std::uint64_t rowspan_failures = 0;
  std::uint64_t partial_checks = 0;
  std::uint64_t partial_skips = 0;
  std::uint64_t partial_failures = 0;
  std::vector<TrialSummary> detail;
};

/// Deterministic given (config, seed): every draw comes from the per-trial
/// SplitMix64 stream. Sampled matrices are re-validated with is_nsc before
/// use; infeasible shapes and over-cap trials are counted as skips.
CampaignResult run_campaign(const CampaignConfig& config);

std::string campaign_report_json(const CampaignConfig& config,
                                 const CampaignResult& result);
std::string campaign_report_csv(const CampaignConfig& config,
                                const CampaignResult& result);

extern const char* const kVersion;

}  // namespace mpchom

#endif
