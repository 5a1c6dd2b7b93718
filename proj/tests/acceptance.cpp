// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria that specify CLI behaviour run the real binary
// (MPCHOM_CLI_PATH); the rest drive the core library directly.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpchom/campaign.hpp"
#include "mpchom/errors.hpp"
#include "mpchom/mpc.hpp"
#include "mpchom/parse.hpp"

using namespace mpchom;
using nlohmann::json;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void expect_eq(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) {
      std::ostringstream os;
      os << what << " (got " << a << ", want " << b << ")";
      failures.push_back(os.str());
    }
  }
};

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string(MPCHOM_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::set<Elem> orbit(const Pir& ring, Elem r) {
  std::set<Elem> out;
  for (Elem x = 0; x < ring.size(); ++x) out.insert(ring.mul(x, r));
  return out;
}

const std::vector<std::string> kWeightRings = {
    "Z4", "Z8", "Z9", "Z25", "Z6", "Z10", "Z12", "Z36", "F4", "Z2 x F4"};

const std::vector<std::string> kCampaignRings = {"Z4",  "Z5",  "Z8", "Z9",
                                                 "Z25", "Z10", "Z20"};

// --- criteria ---------------------------------------------------------

void criterion_weight_tables(Check& c) {
  const std::map<std::string, std::vector<std::string>> expected = {
      {"Z6", {"0", "1/2", "3/2", "2", "3/2", "1/2"}},
      {"Z4", {"0", "1", "2", "1"}},
  };
  for (const auto& [ring_text, table] : expected) {
    const CliResult cli = run_cli("weights " + ring_text);
    c.expect_eq(cli.exit_code, 0, "weights " + ring_text + " exit code");
    if (cli.exit_code != 0) continue;
    const json doc = json::parse(cli.output);
    c.expect_eq(doc.at("weights").size(), table.size(),
                "weights " + ring_text + " table size");
    for (std::size_t k = 0; k < table.size(); ++k) {
      c.expect_eq(doc.at("weights")[k].at("w_h").get<std::string>(), table[k],
                  "weights " + ring_text + " entry " + std::to_string(k));
      c.expect_eq(doc.at("weights")[k].at("element").get<std::uint64_t>(), k,
                  "weights " + ring_text + " element order");
    }
    // independent oracle: the averaging identity over every orbit
    const auto ring = parse_ring(ring_text);
    for (Elem r = 1; r < ring->size(); ++r) {
      const auto rr = orbit(*ring, r);
      Rat sum(0);
      for (const Elem x : rr) sum += hom_weight(*ring, x);
      c.expect(sum == Rat(static_cast<long long>(rr.size())),
               "averaging oracle on " + ring_text);
    }
  }
}

void criterion_weight_properties(Check& c) {
  for (const std::string& text : kWeightRings) {
    const auto ring = parse_ring(text);
    std::map<std::set<Elem>, Rat> orbit_weight;
    for (Elem r = 0; r < ring->size(); ++r) {
      const Rat piecewise = hom_weight(*ring, r);
      c.expect(piecewise == hom_weight_product_form(*ring, r),
               "product-form agreement on " + text);
      if (r == 0) continue;
      const auto rr = orbit(*ring, r);
      Rat sum(0);
      for (const Elem x : rr) sum += hom_weight(*ring, x);
      c.expect(sum == Rat(static_cast<long long>(rr.size())),
               "averaging on " + text);
      const auto [it, inserted] = orbit_weight.emplace(rr, piecewise);
      if (!inserted) {
        c.expect(it->second == piecewise, "orbit constancy on " + text);
      }
    }
  }
}

void criterion_weight_range(Check& c) {
  for (const std::string& text : kWeightRings) {
    const auto ring = parse_ring(text);
    if (ring->component_count() < 2) continue;
    const WeightBounds bounds = weight_bounds(*ring);
    for (Elem x = 1; x < ring->size(); ++x) {
      const Rat w = hom_weight(*ring, x);
      c.expect(bounds.lower <= w && w <= bounds.upper,
               "weight range on " + text);
    }
  }
}

void criterion_counterexample(Check& c) {
  const CliResult cli = run_cli("counterexample Z6");
  c.expect_eq(cli.exit_code, 2, "counterexample Z6 exit code");
  if (cli.exit_code == 2) {
    const json doc = json::parse(cli.output);
    c.expect_eq(doc.at("d_h").get<std::string>(), "1", "Z6 d_h");
    c.expect_eq(doc.at("bound").get<std::string>(), "3/2", "Z6 bound");
    c.expect(doc.at("witness") == json::parse("[1,5]"), "Z6 witness is (1,5)");
    c.expect(doc.at("violated").get<bool>(), "Z6 violated flag");
  }
  // reproduced on Z12 and Z2 x Z9
  for (const std::string& text : {std::string("Z12"), std::string("Z2 x Z9")}) {
    const Counterexample ce = build_counterexample(parse_ring(text));
    c.expect(ce.report.d_h < ce.report.bound, "strict violation on " + text);
    const long long q = static_cast<long long>(ce.a.ring()->min_q());
    c.expect(ce.witness_weight == Rat(q) - Rat(1, q - 1),
             "witness weight q - 1/(q-1) on " + text);
  }
  // hypothesis-satisfying rings refuse the construction
  try {
    build_counterexample(parse_ring("Z10"));
    c.expect(false, "Z10 counterexample should fail");
  } catch (const RingError& e) {
    c.expect(e.code() == Errc::HypothesisSatisfied, "Z10 error code");
  }
}

CampaignConfig acceptance_campaign(const std::string& ring_text,
                                   std::uint64_t seed) {
  CampaignConfig config;
  config.ring_text = ring_text;
  config.trials = 160;
  config.seed = seed;
  const auto ring = parse_ring(ring_text);
  const std::size_t cap =
      std::min<std::size_t>(4, static_cast<std::size_t>(ring->min_q()));
  config.m_min = 1;
  config.m_max = cap;
  config.l_min = 1;
  config.l_max = cap;
  config.n_min = 1;
  config.n_max = 2;
  config.max_product = 20'000;
  config.max_dual = 200'000;
  return config;
}

void criterion_bound_campaign(Check& c) {
  std::uint64_t completed = 0;
  std::uint64_t rowspan_checks = 0;
  std::uint64_t seed = 20240801;
  for (const std::string& text : kCampaignRings) {
    const CampaignConfig config = acceptance_campaign(text, seed++);
    const CampaignResult r = run_campaign(config);
    completed += r.completed;
    rowspan_checks += r.rowspan_checks;
    c.expect_eq(r.violations, 0ULL, "bound violations on " + text);
    c.expect_eq(r.flagged_equality_misses, 0ULL,
                "equality under C1/C2 on " + text);
    c.expect_eq(r.rowspan_failures, 0ULL, "rowspan failures on " + text);
    c.expect_eq(r.partial_failures, 0ULL, "partial-bound failures on " + text);
    c.expect_eq(r.dual_failures, 0ULL, "dual failures on " + text);
    c.expect(r.completed + r.skipped == r.trials, "counter sum on " + text);
  }
  c.expect(completed >= 1000,
           "at least 1000 completed trials (got " + std::to_string(completed) +
               ")");
  c.expect(rowspan_checks > 0, "rowspan checks ran");
}

void criterion_rowspan_grid(Check& c) {
  for (const std::string& text : kCampaignRings) {
    const auto ring = parse_ring(text);
    const std::size_t cap =
        std::min<std::size_t>(4, static_cast<std::size_t>(ring->min_q()));
    for (std::size_t m = 1; m <= cap; ++m) {
      for (std::size_t l = m; l <= cap; ++l) {
        const RingMatrix a = build_nsc(ring, m, l);
        for (std::size_t k = 1; k <= m; ++k) {
          const RowspanReport rep = rowspan_hamming(a, k);
          c.expect(rep.ok, "rowspan " + text + " m=" + std::to_string(m) +
                               " l=" + std::to_string(l) +
                               " k=" + std::to_string(k));
        }
      }
    }
  }
}

void criterion_build_nsc_grid(Check& c) {
  for (const std::string& text : kWeightRings) {
    const auto ring = parse_ring(text);
    const std::size_t minq = static_cast<std::size_t>(ring->min_q());
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t l = m; l <= std::min<std::size_t>(minq + 2, 6); ++l) {
        const bool feasible = (m == 1) || l <= minq;
        try {
          const RingMatrix a = build_nsc(ring, m, l);
          c.expect(feasible, "build_nsc should have failed on " + text);
          c.expect(is_nsc(a).ok, "build_nsc output NSC on " + text);
        } catch (const RingError& e) {
          c.expect(!feasible && e.code() == Errc::InfeasibleShape,
                   "unexpected build_nsc error on " + text + ": " + e.what());
        }
      }
    }
  }
}

void criterion_nsc_residue_equivalence(Check& c) {
  for (const std::string& text : kWeightRings) {
    const auto ring = parse_ring(text);
    SplitMix64 rng(0xACCE55 + ring->size());
    std::uint64_t disagreements = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t m = 1 + rng.next() % 3;
      const std::size_t l = m + rng.next() % 2;
      std::vector<Elem> entries(m * l);
      for (Elem& x : entries) x = rng.next() % ring->size();
      const RingMatrix a(ring, m, l, std::move(entries));
      if (is_nsc(a).ok != nsc_via_residue_fields(a)) ++disagreements;
    }
    c.expect_eq(disagreements, 0ULL, "NSC-residue equivalence on " + text);
  }
}

void criterion_dual(Check& c) {
  for (const std::string& text : {std::string("Z4"), std::string("Z5"),
                                  std::string("Z10")}) {
    const auto ring = parse_ring(text);
    SplitMix64 rng(0xD0A1 + ring->size());
    const std::size_t m_cap =
        std::min<std::size_t>(3, static_cast<std::size_t>(ring->min_q()));
    std::uint64_t verified = 0;
    for (int attempt = 0; attempt < 400 && verified < 40; ++attempt) {
      const std::size_t m = 1 + rng.next() % m_cap;
      const std::size_t n = 1 + rng.next() % 2;
      // NSC-preserving perturbations of the deterministic base
      RingMatrix a = build_nsc(ring, m, m);
      std::vector<Elem> w = a.entries();
      if (m >= 2) {
        for (std::size_t t = 0; t < 2 * m; ++t) {
          const std::size_t j = 1 + rng.next() % (m - 1);
          const std::size_t i = rng.next() % j;
          const Elem r = rng.next() % ring->size();
          for (std::size_t col = 0; col < m; ++col) {
            w[j * m + col] =
                ring->add(w[j * m + col], ring->mul(r, w[i * m + col]));
          }
        }
      }
      a = RingMatrix(ring, m, m, std::move(w));
      if (!is_nsc(a).ok) continue;

      std::vector<Code> codes;
      for (std::size_t j = 0; j < m; ++j) {
        Word g(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
          g[i] = rng.next() % ring->size();
          nonzero = nonzero || g[i] != 0;
        }
        if (!nonzero) g[0] = ring->one();
        codes.push_back(Code::linear_code(ring, n, {g}));
      }
      const DualReport rep = verify_dual(codes, a);
      c.expect(rep.set_equal, "dual set identity on " + text);
      c.expect(rep.reversed_inverse_nsc, "J(A^-1)^T NSC on " + text);
      c.expect(rep.cardinality_ok, "dual cardinality on " + text);
      if (rep.bound_defined) {
        ++verified;
        c.expect(rep.bound_holds, "dual bound on " + text);
        if (rep.c1 || rep.c2) {
          c.expect(rep.equality, "dual equality under C1/C2 on " + text);
        }
      }
    }
    c.expect(verified >= 40, "enough dual bound instances on " + text +
                                 " (got " + std::to_string(verified) + ")");
  }
}

void criterion_determinism(Check& c) {
  CampaignConfig config = acceptance_campaign("Z10", 777);
  config.trials = 50;
  config.include_trials = true;
  const CampaignResult r1 = run_campaign(config);
  const CampaignResult r2 = run_campaign(config);
  c.expect(campaign_report_json(config, r1) == campaign_report_json(config, r2),
           "in-process JSON reports byte-identical");
  c.expect(campaign_report_csv(config, r1) == campaign_report_csv(config, r2),
           "in-process CSV reports byte-identical");

  // end to end through the CLI
  const std::string config_path = "/tmp/mpchom_acceptance_config.json";
  {
    std::FILE* f = std::fopen(config_path.c_str(), "w");
    const std::string text =
        R"({"ring": "Z10", "trials": 40, "seed": 4242, "m": [1, 2],
            "l": [1, 2], "n": [1, 1], "include_trials": true})";
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  const CliResult run1 = run_cli("campaign " + config_path);
  const CliResult run2 = run_cli("campaign " + config_path);
  c.expect_eq(run1.exit_code, 0, "CLI campaign exit code");
  c.expect(!run1.output.empty() && run1.output == run2.output,
           "CLI campaign reports byte-identical");
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact homogeneous weight tables (CLI)", 1.0,
       criterion_weight_tables},
      {2, "averaging, orbit constancy, formula agreement", 5.0,
       criterion_weight_properties},
      {3, "weight range bounds for s >= 2", 1.0, criterion_weight_range},
      {4, "sharpness counterexample (CLI + core)", 1.0,
       criterion_counterexample},
      {5, "seeded bound campaign, >= 1000 trials", 60.0,
       criterion_bound_campaign},
      {6, "row-span minimum Hamming distance grid", 30.0,
       criterion_rowspan_grid},
      {7, "NSC construction feasibility grid", 10.0, criterion_build_nsc_grid},
      {8, "NSC-residue equivalence, 500 random matrices per ring", 30.0,
       criterion_nsc_residue_equivalence},
      {9, "dual-code identity, bound, and equality", 30.0, criterion_dual},
      {10, "byte-identical reports for identical config and seed", 30.0,
       criterion_determinism},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > criterion.budget_seconds) {
      std::ostringstream os;
      os << "runtime " << elapsed << "s exceeds budget "
         << criterion.budget_seconds << "s";
      check.failures.push_back(os.str());
    }
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  %2d  %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.title.c_str(), elapsed);
    for (const std::string& failure : check.failures) {
      std::printf("      - %s\n", failure.c_str());
    }
  }
  if (failed) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
