// SPDX-License-Identifier: Apache-2.0
#include "mpchom/campaign.hpp"

#include <algorithm>
#include <sstream>

#include "mpchom/errors.hpp"

namespace mpchom {

const char* const kVersion = "0.1.0";

namespace {

Elem random_element(SplitMix64& rng, const Pir& ring) {
  return rng.next() % ring.size();
}

Elem random_unit(SplitMix64& rng, const Pir& ring) {
  for (int tries = 0; tries < 256; ++tries) {
    const Elem x = random_element(rng, ring);
    if (ring.is_unit(x)) return x;
  }
  return ring.one();
}

Word random_word(SplitMix64& rng, const Pir& ring, std::size_t n) {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = random_element(rng, ring);
  return w;
}

Word random_nonzero_word(SplitMix64& rng, const Pir& ring, std::size_t n) {
  for (int tries = 0; tries < 16; ++tries) {
    Word w = random_word(rng, ring, n);
    if (std::any_of(w.begin(), w.end(), [](Elem x) { return x != 0; })) {
      return w;
    }
  }
  Word w(n, ring.zero());
  w[0] = ring.one();
  return w;
}

/// build_nsc base, NSC-preserving perturbations (unipotent lower-triangular
/// row operations, unit column scalings, column permutation), optionally
/// upper-triangularized first so C1 instances appear in the mix.
RingMatrix sample_nsc_matrix(SplitMix64& rng, PirPtr ring, std::size_t m,
                             std::size_t l) {
  RingMatrix a = build_nsc(ring, m, l);
  std::vector<Elem> w = a.entries();
  if (m >= 2) {
    for (std::size_t t = 0; t < 2 * m; ++t) {
      const std::size_t j = rng.range(1, m - 1);
      const std::size_t i = rng.range(0, j - 1);
      const Elem r = random_element(rng, *ring);
      for (std::size_t c = 0; c < l; ++c) {
        w[j * l + c] = ring->add(w[j * l + c], ring->mul(r, w[i * l + c]));
      }
    }
  }
  for (std::size_t c = 0; c < l; ++c) {
    const Elem u = random_unit(rng, *ring);
    for (std::size_t i = 0; i < m; ++i) {
      w[i * l + c] = ring->mul(w[i * l + c], u);
    }
  }
  RingMatrix perturbed(ring, m, l, std::move(w));
  if (rng.next() % 2 == 0) {
    perturbed = upper_triangularize(perturbed);
  }
  std::vector<std::size_t> perm(l);
  for (std::size_t i = 0; i < l; ++i) perm[i] = i;
  for (std::size_t i = l; i-- > 1;) {
    std::swap(perm[i], perm[rng.range(0, i)]);
  }
  return perturbed.permute_columns(perm);
}

std::uint64_t sizes_product(const std::vector<Code>& codes) {
  std::uint64_t p = 1;
  for (const Code& c : codes) {
    if (p > 2'000'000'000ULL / c.size()) return 2'000'000'000ULL;
    p *= c.size();
  }
  return p;
}

Code two_word_code(const PirPtr& ring, std::size_t n, const Word& nonzero) {
  return Code::explicit_code(ring, n, {Word(n, ring->zero()), nonzero});
}

/// Multiplying by this kills field components and deepens Z_{p^e} ones;
/// used to shrink single-generator orbits into an enumeration budget.
Elem radical_step(const Pir& ring) {
  std::vector<ChainVal> parts(ring.component_count());
  for (std::size_t t = 0; t < ring.component_count(); ++t) {
    const ChainRing& comp = ring.component(t);
    parts[t] = comp.is_field() ? 0 : static_cast<ChainVal>(comp.p());
  }
  return ring.from_parts(parts);
}

std::optional<std::vector<Code>> sample_codes(SplitMix64& rng,
                                              const PirPtr& ring,
                                              const std::string& kind,
                                              std::size_t m, std::size_t n,
                                              std::uint64_t max_product) {
  std::vector<Code> codes;
  if (kind == "explicit") {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t count = rng.range(2, 4);
      std::vector<Word> words;
      for (std::size_t i = 0; i < count; ++i) {
        words.push_back(random_word(rng, *ring, n));
      }
      words.push_back(random_nonzero_word(rng, *ring, n));  // >= 2 after dedup
      words.push_back(Word(n, ring->zero()));
      codes.push_back(Code::explicit_code(ring, n, std::move(words)));
    }
  } else if (kind == "socle") {
    // single-component socle orbits: C_j = R * (0,...,a_t,...,0) with a_t a
    // generator of J_t^(e_t - 1); these sit at the extremes of the weight
    // range and drive the sharpness instances on q_2 == q_1 + 1 rings
    const std::size_t s = ring->component_count();
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t t = (j + rng.next()) % s;
      std::vector<ChainVal> parts(s, 0);
      parts[t] = ring->component(t).socle_generator();
      Word g(n, ring->zero());
      g[rng.next() % n] = ring->from_parts(parts);
      codes.push_back(Code::linear_code(ring, n, {g}));
    }
  } else if (kind == "nested") {
    std::vector<Word> gens;
    for (std::size_t j = 0; j < m; ++j) {
      gens.push_back(random_nonzero_word(rng, *ring, n));
    }
    // C_j = span{g_j, ..., g_m} gives C_1 >= C_2 >= ... >= C_m
    for (std::size_t j = 0; j < m; ++j) {
      codes.push_back(Code::linear_code(
          ring, n, std::vector<Word>(gens.begin() + j, gens.end())));
    }
    if (sizes_product(codes) > max_product) {
      // equal chain on a shrunken orbit: scale the generator into deeper
      // powers of the maximal ideals until the budget fits
      const Elem step = radical_step(*ring);
      Word g = gens.back();
      while (true) {
        const Code c = Code::linear_code(ring, n, {g});
        std::uint64_t p = 1;
        bool fits = true;
        for (std::size_t j = 0; j < m; ++j) {
          if (p > max_product / c.size()) {
            fits = false;
            break;
          }
          p *= c.size();
        }
        if (fits && c.size() >= 2) {
          codes.assign(m, c);
          break;
        }
        bool all_zero = true;
        for (Elem& x : g) {
          x = ring->mul(x, step);
          if (x != 0) all_zero = false;
        }
        if (all_zero) return std::nullopt;  // cannot fit the budget
      }
    }
  } else {  // "linear"
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t gcount = rng.range(1, 2);
      std::vector<Word> gens;
      for (std::size_t i = 0; i < gcount; ++i) {
        gens.push_back(random_nonzero_word(rng, *ring, n));
      }
      // generators are nonzero, so the span always has at least two words
      codes.push_back(Code::linear_code(ring, n, std::move(gens)));
    }
    // greedy downgrade to two-word codes until the enumeration budget fits;
    // a downgraded code is explicit, which makes the product nonlinear and
    // subject to the tighter pairwise-scan budget
    bool downgraded = false;
    const auto budget = [&] {
      return downgraded ? std::min<std::uint64_t>(max_product, 4000)
                        : max_product;
    };
    while (sizes_product(codes) > budget()) {
      std::size_t largest = 0;
      for (std::size_t j = 1; j < m; ++j) {
        if (codes[j].size() > codes[largest].size()) largest = j;
      }
      if (codes[largest].size() <= 2) return std::nullopt;
      const Word* nonzero = nullptr;
      for (const Word& w : codes[largest].words()) {
        if (std::any_of(w.begin(), w.end(), [](Elem x) { return x != 0; })) {
          nonzero = &w;
          break;
        }
      }
      codes[largest] = two_word_code(ring, n, *nonzero);
      downgraded = true;
    }
  }
  for (const Code& c : codes) {
    if (c.size() < 2) return std::nullopt;
  }
  const bool all_linear = std::all_of(
      codes.begin(), codes.end(), [](const Code& c) { return c.linear(); });
  const std::uint64_t cap =
      all_linear ? max_product : std::min<std::uint64_t>(max_product, 4000);
  if (sizes_product(codes) > cap) return std::nullopt;
  return codes;
}

}  // namespace

CampaignConfig CampaignConfig::from_json(const Json& j) {
  CampaignConfig c;
  if (!j.is_object()) fail(Errc::Parse, "campaign config must be a JSON object");
  const auto get_range = [&](const char* key, std::size_t& lo, std::size_t& hi) {
    if (!j.contains(key)) return;
    const Json& r = j.at(key);
    if (!r.is_array() || r.size() != 2) {
      fail(Errc::Parse, std::string("'") + key + "' must be [min, max]");
    }
    lo = r[0].get<std::size_t>();
    hi = r[1].get<std::size_t>();
    if (lo < 1 || hi < lo) {
      fail(Errc::Parse, std::string("'") + key + "' range is empty");
    }
  };
  if (j.contains("ring")) c.ring_text = j.at("ring").get<std::string>();
  if (j.contains("trials")) c.trials = j.at("trials").get<std::uint64_t>();
  if (c.trials < 1) fail(Errc::Parse, "trial count must be >= 1");
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  get_range("m", c.m_min, c.m_max);
  get_range("l", c.l_min, c.l_max);
  get_range("n", c.n_min, c.n_max);
  if (j.contains("code_kinds")) {
    c.code_kinds.clear();
    for (const Json& k : j.at("code_kinds")) {
      const std::string kind = k.get<std::string>();
      if (kind != "linear" && kind != "nested" && kind != "explicit" &&
          kind != "socle") {
        fail(Errc::Parse, "unknown code kind '" + kind + "'");
      }
      c.code_kinds.push_back(kind);
    }
    if (c.code_kinds.empty()) fail(Errc::Parse, "code_kinds must be nonempty");
  }
  if (j.contains("max_product")) {
    c.max_product = j.at("max_product").get<std::uint64_t>();
  }
  if (j.contains("max_dual")) c.max_dual = j.at("max_dual").get<std::uint64_t>();
  if (j.contains("check_dual")) c.check_dual = j.at("check_dual").get<bool>();
  if (j.contains("check_rowspan")) {
    c.check_rowspan = j.at("check_rowspan").get<bool>();
  }
  if (j.contains("check_partial")) {
    c.check_partial = j.at("check_partial").get<bool>();
  }
  if (j.contains("include_trials")) {
    c.include_trials = j.at("include_trials").get<bool>();
  }
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  if (c.format != "json" && c.format != "csv") {
    fail(Errc::Parse, "format must be 'json' or 'csv'");
  }
  if (j.contains("out")) c.out_path = j.at("out").get<std::string>();
  return c;
}

Json CampaignConfig::to_json() const {
  Json out = Json::object();
  out["ring"] = ring_text;
  out["trials"] = trials;
  out["seed"] = seed;
  out["m"] = Json::array({m_min, m_max});
  out["l"] = Json::array({l_min, l_max});
  out["n"] = Json::array({n_min, n_max});
  out["code_kinds"] = code_kinds;
  out["max_product"] = max_product;
  out["max_dual"] = max_dual;
  out["check_dual"] = check_dual;
  out["check_rowspan"] = check_rowspan;
  out["check_partial"] = check_partial;
  out["include_trials"] = include_trials;
  out["format"] = format;
  return out;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  const PirPtr ring = parse_ring(config.ring_text);
  CampaignResult result;
  result.trials = config.trials;
  result.detail.reserve(static_cast<std::size_t>(config.trials));

  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    SplitMix64 rng(SplitMix64::mix(config.seed, trial));
    TrialSummary summary;
    summary.index = trial;

    const std::size_t m = rng.range(config.m_min, config.m_max);
    std::size_t l_hi = config.l_max;
    if (m > 1) l_hi = std::min<std::size_t>(l_hi, ring->min_q());
    const std::size_t l_lo = std::max(config.l_min, m);
    summary.m = m;
    if (l_lo > l_hi) {
      summary.skipped = true;
      summary.skip_reason = "infeasible-shape";
      ++result.skipped;
      result.detail.push_back(std::move(summary));
      continue;
    }
    const std::size_t l = rng.range(l_lo, l_hi);
    const std::size_t n = rng.range(config.n_min, config.n_max);
    summary.l = l;
    summary.n = n;
    summary.kind =
        config.code_kinds[rng.next() % config.code_kinds.size()];

    const RingMatrix a = sample_nsc_matrix(rng, ring, m, l);
    if (!is_nsc(a).ok) {
      fail(Errc::Internal, "sampled matrix failed NSC re-validation");
    }

    auto codes =
        sample_codes(rng, ring, summary.kind, m, n, config.max_product);
    if (!codes) {
      summary.skipped = true;
      summary.skip_reason = "enumeration-cap";
      ++result.skipped;
      result.detail.push_back(std::move(summary));
      continue;
    }

    MpcReport rep;
    try {
      rep = verify_bound(*codes, a);
    } catch (const RingError& e) {
      if (e.code() == Errc::EnumerationTooLarge ||
          e.code() == Errc::DegenerateCode) {
        summary.skipped = true;
        summary.skip_reason = "enumeration-cap";
        ++result.skipped;
        result.detail.push_back(std::move(summary));
        continue;
      }
      throw;
    }
    ++result.completed;
    summary.d_h = rep.d_h;
    summary.bound = rep.bound;
    summary.hypothesis_ok = rep.hypothesis_ok;
    summary.bound_holds = rep.bound_holds;
    summary.c1 = rep.c1;
    summary.c2 = rep.c2;
    summary.equality = rep.equality;
    if (!rep.bound_holds) ++result.violations;
    if (rep.equality) ++result.equality_hits;
    if (rep.c1) ++result.c1_trials;
    if (rep.c2) ++result.c2_trials;
    if (rep.hypothesis_ok && (rep.c1 || rep.c2) && !rep.equality) {
      ++result.flagged_equality_misses;
    }

    if (config.check_rowspan) {
      for (std::size_t k = 1; k <= m; ++k) {
        std::uint64_t space = 1;
        bool fits = true;
        for (std::size_t i = 0; i < k; ++i) {
          if (space > 1'000'000ULL / ring->size()) {
            fits = false;
            break;
          }
          space *= ring->size();
        }
        if (!fits) break;
        const RowspanReport rs = rowspan_hamming(a, k);
        ++result.rowspan_checks;
        if (!rs.ok) {
          ++result.rowspan_failures;
          summary.rowspan_ok = false;
        }
      }
    }

    if (config.check_partial) {
      for (std::size_t k = 1; k <= m; ++k) {
        PartialBoundReport pb;
        try {
          pb = partial_bound_check(a, *codes, k);
        } catch (const RingError& e) {
          if (e.code() == Errc::EnumerationTooLarge) break;
          throw;
        }
        if (!pb.applicable) {
          ++result.partial_skips;
          continue;
        }
        ++result.partial_checks;
        if (!pb.held) {
          ++result.partial_failures;
          summary.partial_ok = false;
        }
      }
    }

    if (config.check_dual && m == l) {
      const bool all_linear = std::all_of(
          codes->begin(), codes->end(), [](const Code& c) { return c.linear(); });
      std::uint64_t space = 1;
      bool fits = true;
      for (std::size_t i = 0; i < n * m; ++i) {
        if (space > config.max_dual / ring->size()) {
          fits = false;
          break;
        }
        space *= ring->size();
      }
      if (all_linear && fits) {
        try {
          const DualReport dr = verify_dual(*codes, a);
          ++result.dual_checked;
          summary.dual_checked = true;
          summary.dual_ok =
              dr.set_equal && dr.reversed_inverse_nsc && dr.cardinality_ok &&
              (!dr.hypothesis_ok || dr.bound_holds) &&
              (!(dr.hypothesis_ok && (dr.c1 || dr.c2)) || dr.equality);
          if (!summary.dual_ok) ++result.dual_failures;
        } catch (const RingError& e) {
          if (e.code() != Errc::DegenerateCode &&
              e.code() != Errc::EnumerationTooLarge) {
            throw;
          }
        }
      }
    }

    result.detail.push_back(std::move(summary));
  }
  return result;
}

namespace {

Json summary_to_json(const CampaignResult& r) {
  Json out = Json::object();
  out["trials"] = r.trials;
  out["completed"] = r.completed;
  out["skipped"] = r.skipped;
  out["violations"] = r.violations;
  out["equality_hits"] = r.equality_hits;
  out["c1_trials"] = r.c1_trials;
  out["c2_trials"] = r.c2_trials;
  out["flagged_equality_misses"] = r.flagged_equality_misses;
  out["dual_checked"] = r.dual_checked;
  out["dual_failures"] = r.dual_failures;
  out["rowspan_checks"] = r.rowspan_checks;
  out["rowspan_failures"] = r.rowspan_failures;
  out["partial_checks"] = r.partial_checks;
  out["partial_skips"] = r.partial_skips;
  out["partial_failures"] = r.partial_failures;
  return out;
}

Json trial_to_json(const TrialSummary& t) {
  Json out = Json::object();
  out["trial"] = t.index;
  out["m"] = t.m;
  out["l"] = t.l;
  out["n"] = t.n;
  out["kind"] = t.kind;
  if (t.skipped) {
    out["skipped"] = t.skip_reason;
    return out;
  }
  out["d_h"] = rat_to_string(t.d_h);
  out["bound"] = rat_to_string(t.bound);
  out["hypothesis_ok"] = t.hypothesis_ok;
  out["bound_holds"] = t.bound_holds;
  out["c1"] = t.c1;
  out["c2"] = t.c2;
  out["equality"] = t.equality;
  out["dual_checked"] = t.dual_checked;
  out["dual_ok"] = t.dual_ok;
  out["rowspan_ok"] = t.rowspan_ok;
  out["partial_ok"] = t.partial_ok;
  return out;
}

}  // namespace

std::string campaign_report_json(const CampaignConfig& config,
                                 const CampaignResult& result) {
  Json out = Json::object();
  out["version"] = kVersion;
  out["config"] = config.to_json();
  out["summary"] = summary_to_json(result);
  if (config.include_trials) {
    Json trials = Json::array();
    for (const TrialSummary& t : result.detail) trials.push_back(trial_to_json(t));
    out["trials"] = std::move(trials);
  }
  return out.dump(2) + "\n";
}

std::string campaign_report_csv(const CampaignConfig& config,
                                const CampaignResult& result) {
  (void)config;
  std::ostringstream os;
  os << "trial,m,l,n,kind,status,d_h,bound,hypothesis_ok,bound_holds,c1,c2,"
        "equality,dual_checked,dual_ok,rowspan_ok,partial_ok\n";
  for (const TrialSummary& t : result.detail) {
    os << t.index << ',' << t.m << ',' << t.l << ',' << t.n << ',' << t.kind
       << ',';
    if (t.skipped) {
      os << "skipped:" << t.skip_reason << ",,,,,,,,,,,\n";
      continue;
    }
    os << "ok," << rat_to_string(t.d_h) << ',' << rat_to_string(t.bound) << ','
       << t.hypothesis_ok << ',' << t.bound_holds << ',' << t.c1 << ',' << t.c2
       << ',' << t.equality << ',' << t.dual_checked << ',' << t.dual_ok << ','
       << t.rowspan_ok << ',' << t.partial_ok << '\n';
  }
  return os.str();
}

}  // namespace mpchom
