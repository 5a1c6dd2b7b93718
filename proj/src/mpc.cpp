// SPDX-License-Identifier: Apache-2.0
#include "mpchom/mpc.hpp"

#include <algorithm>

#include "mpchom/errors.hpp"

namespace mpchom {

namespace {

constexpr std::uint64_t kEnumerationGuard = 1'000'000ULL;

void validate_inputs(const std::vector<Code>& codes, const RingMatrix& a) {
  if (codes.empty()) {
    fail(Errc::ShapeMismatch, "a matrix product code needs at least one code");
  }
  if (a.rows() != codes.size()) {
    fail(Errc::ShapeMismatch,
         "matrix has " + std::to_string(a.rows()) + " rows but " +
             std::to_string(codes.size()) + " codes were given");
  }
  for (const Code& c : codes) {
    require_same_spec(*c.ring(), *a.ring(), "matrix product");
    if (c.length() != codes.front().length()) {
      fail(Errc::LengthMismatch, "codes must share one length");
    }
  }
}

Word product_word(const Pir& R, const std::vector<const Word*>& tuple,
                  const RingMatrix& a, std::size_t n) {
  const std::size_t m = a.rows(), l = a.cols();
  Word w(n * l, R.zero());
  for (std::size_t j = 0; j < m; ++j) {
    const Word& cj = *tuple[j];
    for (std::size_t i = 0; i < n; ++i) {
      const Elem cji = cj[i];
      if (cji == 0) continue;
      for (std::size_t c = 0; c < l; ++c) {
        const Elem ajc = a.at(j, c);
        if (ajc == 0) continue;
        w[i * l + c] = R.add(w[i * l + c], R.mul(cji, ajc));
      }
    }
  }
  return w;
}

}  // namespace

Code matrix_product(const std::vector<Code>& codes, const RingMatrix& a) {
  validate_inputs(codes, a);
  const Pir& R = *a.ring();
  const std::size_t m = codes.size();
  const std::size_t n = codes.front().length();
  const std::size_t l = a.cols();

  std::uint64_t tuples = 1;
  for (const Code& c : codes) {
    if (tuples > kEnumerationGuard / c.size()) {
      fail(Errc::EnumerationTooLarge,
           "code tuple enumeration exceeds the 10^6 guard");
    }
    tuples *= c.size();
  }

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(tuples));
  std::vector<std::size_t> idx(m, 0);
  std::vector<const Word*> tuple(m);
  for (std::size_t j = 0; j < m; ++j) tuple[j] = &codes[j].words()[0];
  while (true) {
    words.push_back(product_word(R, tuple, a, n));
    std::size_t j = 0;
    while (j < m) {
      if (++idx[j] < codes[j].size()) {
        tuple[j] = &codes[j].words()[idx[j]];
        break;
      }
      idx[j] = 0;
      tuple[j] = &codes[j].words()[0];
      ++j;
    }
    if (j == m) break;
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  const bool linear =
      std::all_of(codes.begin(), codes.end(),
                  [](const Code& c) { return c.linear(); });
  std::vector<Word> generators;
  if (linear) {
    // images of the component spanning sets, each embedded in its slot
    for (std::size_t j = 0; j < m; ++j) {
      const Word zero(n, R.zero());
      std::vector<const Word*> embedded(m);
      for (std::size_t jj = 0; jj < m; ++jj) embedded[jj] = &zero;
      for (const Word& g : codes[j].spanning_set()) {
        embedded[j] = &g;
        generators.push_back(product_word(R, embedded, a, n));
        embedded[j] = &zero;
      }
    }
  }
  return Code::from_materialized(a.ring(), n * l, linear, std::move(words),
                                 std::move(generators));
}

Rat distance_bound(const std::vector<Code>& codes, const RingMatrix& a) {
  validate_inputs(codes, a);
  const std::size_t l = a.cols();
  Rat best;
  bool found = false;
  for (std::size_t j = 0; j < codes.size(); ++j) {
    const Rat dj = min_distance(DistanceKind::Homogeneous, codes[j]).value;
    const Rat term = Rat(static_cast<long long>(l - j)) * dj;
    if (!found || term < best) {
      best = term;
      found = true;
    }
  }
  return best;
}

Hypothesis hypothesis_check(const Pir& ring) {
  if (ring.component_count() == 1) {
    return {true, "single chain ring, the q_2 > q_1 + 1 proviso is vacuous"};
  }
  const std::uint64_t q1 = ring.qs()[0], q2 = ring.qs()[1];
  if (q2 > q1 + 1) {
    return {true, "q_2 = " + std::to_string(q2) + " > q_1 + 1 = " +
                      std::to_string(q1 + 1)};
  }
  return {false, "q_2 = " + std::to_string(q2) + " <= q_1 + 1 = " +
                     std::to_string(q1 + 1) + " (components " +
                     ring.component(0).describe() + ", " +
                     ring.component(1).describe() + ")"};
}

MpcReport verify_bound(const std::vector<Code>& codes, const RingMatrix& a) {
  validate_inputs(codes, a);
  if (!is_nsc(a).ok) {
    fail(Errc::NotNsc, "matrix is not non-singular by columns");
  }
  MpcReport rep;
  rep.m = codes.size();
  rep.l = a.cols();
  rep.n = codes.front().length();

  rep.bound = distance_bound(codes, a);
  const Code c = matrix_product(codes, a);
  const DistanceResult d = min_distance(DistanceKind::Homogeneous, c);
  rep.d_h = d.value;
  rep.witness_a = d.witness_a;
  rep.witness_b = d.witness_b;

  const Hypothesis hyp = hypothesis_check(*a.ring());
  rep.hypothesis_ok = hyp.ok;
  rep.hypothesis_reason = hyp.reason;
  rep.bound_holds = rep.d_h >= rep.bound;
  rep.c1 = cput_check(a).has_value();
  rep.c2 = std::all_of(codes.begin(), codes.end(),
                       [](const Code& cj) { return cj.linear(); }) &&
           is_nested(codes);
  rep.equality = rep.d_h == rep.bound;

  rep.cardinality = c.size();
  rep.expected_cardinality = 1;
  for (const Code& cj : codes) rep.expected_cardinality *= cj.size();
  rep.cardinality_ok = rep.cardinality == rep.expected_cardinality;
  return rep;
}

DualReport verify_dual(const std::vector<Code>& codes, const RingMatrix& a) {
  validate_inputs(codes, a);
  if (a.rows() != a.cols()) {
    fail(Errc::NotSquare, "dual verification needs a square matrix");
  }
  if (!is_nsc(a).ok) {
    fail(Errc::NotNsc, "matrix is not non-singular by columns");
  }
  for (const Code& cj : codes) {
    if (!cj.linear()) {
      fail(Errc::NonlinearCode, "dual verification needs linear codes");
    }
  }
  const std::size_t m = a.rows();
  const std::size_t n = codes.front().length();
  const Pir& R = *a.ring();

  const Code c = matrix_product(codes, a);
  const Code c_dual = dual(c);

  std::vector<Code> duals;
  duals.reserve(m);
  for (const Code& cj : codes) duals.push_back(dual(cj));

  const RingMatrix b = inverse(a).transpose();
  const Code rhs = matrix_product(duals, b);

  DualReport rep;
  rep.set_equal = c_dual.words() == rhs.words();
  rep.reversed_inverse_nsc =
      is_nsc(RingMatrix::reversal(a.ring(), m).mul(b)).ok;

  const Hypothesis hyp = hypothesis_check(R);
  rep.hypothesis_ok = hyp.ok;
  rep.c1 = cput_check(a).has_value();
  rep.c2 = is_nested(codes);

  // bound min{m d_h(C_m^perp), ..., 1 d_h(C_1^perp)}: coefficient j for C_j.
  // A full component code has dual {0} with no distance; the bound is then
  // vacuous and reported as such.
  rep.bound_defined =
      c_dual.size() >= 2 &&
      std::all_of(duals.begin(), duals.end(),
                  [](const Code& d) { return d.size() >= 2; });
  if (rep.bound_defined) {
    Rat bound;
    bool found = false;
    for (std::size_t j = 0; j < m; ++j) {
      const Rat dj = min_distance(DistanceKind::Homogeneous, duals[j]).value;
      const Rat term = Rat(static_cast<long long>(j + 1)) * dj;
      if (!found || term < bound) {
        bound = term;
        found = true;
      }
    }
    rep.dual_bound = bound;
    rep.dual_d_h = min_distance(DistanceKind::Homogeneous, c_dual).value;
    rep.bound_holds = rep.dual_d_h >= rep.dual_bound;
    rep.equality = rep.dual_d_h == rep.dual_bound;
  }

  rep.dual_cardinality = c_dual.size();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n * m; ++i) space *= R.size();
  rep.cardinality_ok =
      static_cast<std::uint64_t>(c.size()) * c_dual.size() == space;
  return rep;
}

RowspanReport rowspan_hamming(const RingMatrix& a, std::size_t k) {
  if (!is_nsc(a).ok) {
    fail(Errc::NotNsc, "matrix is not non-singular by columns");
  }
  if (k < 1 || k > a.rows()) {
    fail(Errc::OutOfRange, "row count k must lie in [1, m]");
  }
  const Pir& R = *a.ring();
  const std::size_t l = a.cols();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (space > kEnumerationGuard / R.size()) {
      fail(Errc::EnumerationTooLarge,
           "row-span enumeration exceeds the 10^6 guard");
    }
    space *= R.size();
  }
  RowspanReport rep;
  rep.k = k;
  rep.expected = l - k + 1;
  std::uint64_t best = l + 1;
  std::vector<Elem> coeff(k, 0);
  std::uint64_t counter = 0;
  while (++counter < space) {
    // advance first so the all-zero tuple is skipped
    std::size_t i = 0;
    while (true) {
      if (++coeff[i] < R.size()) break;
      coeff[i] = 0;
      ++i;
    }
    std::uint64_t weight = 0;
    for (std::size_t c = 0; c < l; ++c) {
      Elem acc = R.zero();
      for (std::size_t i = 0; i < k; ++i) {
        if (coeff[i] == 0) continue;
        acc = R.add(acc, R.mul(coeff[i], a.at(i, c)));
      }
      if (acc != 0) ++weight;
    }
    best = std::min(best, weight);
  }
  rep.min_hamming = best;
  rep.ok = best == rep.expected;
  return rep;
}

PartialBoundReport partial_bound_check(const RingMatrix& a,
                                       const std::vector<Code>& codes,
                                       std::size_t k) {
  validate_inputs(codes, a);
  if (!is_nsc(a).ok) {
    fail(Errc::NotNsc, "matrix is not non-singular by columns");
  }
  if (k < 1 || k > codes.size()) {
    fail(Errc::OutOfRange, "prefix length k must lie in [1, m]");
  }
  const Pir& R = *a.ring();
  const std::size_t n = codes.front().length();
  const std::size_t l = a.cols();

  PartialBoundReport rep;
  rep.k = k;
  if (k == 1 || k >= 3) {
    rep.applicable = true;
  } else {  // k == 2
    const std::uint64_t q1 = R.min_q();
    if (l < q1) {
      rep.applicable = true;
    } else if (l == q1 && hypothesis_check(R).ok) {
      rep.applicable = true;
    } else {
      rep.skip_reason =
          "k = 2 needs l < q_1, or l == q_1 with the q_2 > q_1 + 1 hypothesis";
    }
  }

  std::uint64_t tuples = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (tuples > kEnumerationGuard / codes[j].size()) {
      fail(Errc::EnumerationTooLarge,
           "tuple enumeration exceeds the 10^6 guard");
    }
    tuples *= codes[j].size();
  }

  const long long factor = static_cast<long long>(l - k + 1);
  const auto scaled = scaled_weight_table(R, WeightKind::Homogeneous);
  const Word zero(n, R.zero());
  rep.held = true;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    const Word& ck = codes[k - 1].words()[idx[k - 1]];
    if (ck != zero) {
      std::vector<const Word*> tuple(codes.size(), &zero);
      for (std::size_t j = 0; j < k; ++j) {
        tuple[j] = &codes[j].words()[idx[j]];
      }
      const Word w = product_word(R, tuple, a, n);
      bool ok;
      if (scaled) {
        long long lhs = 0, ckw = 0;
        for (const Elem x : w) lhs += scaled->values[x];
        for (const Elem x : ck) ckw += scaled->values[x];
        const long long rhs = factor * ckw;
        ok = (k == 1) ? (lhs == rhs) : (lhs >= rhs);
      } else {
        const Rat lhs = word_weight(WeightKind::Homogeneous, R, w);
        const Rat rhs =
            Rat(factor) * word_weight(WeightKind::Homogeneous, R, ck);
        ok = (k == 1) ? (lhs == rhs) : (lhs >= rhs);
      }
      if (!ok) {
        rep.held = false;
        std::vector<Word> violation;
        for (std::size_t j = 0; j < k; ++j) {
          violation.push_back(codes[j].words()[idx[j]]);
        }
        rep.violation = std::move(violation);
        break;
      }
    }
    std::size_t j = 0;
    while (j < k) {
      if (++idx[j] < codes[j].size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == k) break;
  }
  return rep;
}

PartialBoundReport partial_bound_property(const RingMatrix& a,
                                          const std::vector<Code>& codes,
                                          std::size_t k) {
  PartialBoundReport rep = partial_bound_check(a, codes, k);
  if (!rep.applicable) {
    fail(Errc::ConditionNotMet, rep.skip_reason);
  }
  return rep;
}

Counterexample build_counterexample(PirPtr ring) {
  const std::size_t s = ring->component_count();
  if (s < 2 || ring->qs()[1] != ring->qs()[0] + 1) {
    fail(Errc::HypothesisSatisfied,
         "the construction needs q_2 == q_1 + 1; ring " + ring->describe() +
             " satisfies the hypothesis");
  }
  const std::size_t q = static_cast<std::size_t>(ring->min_q());

  // beta_j: all residues in component 1, the nonzero residues in component 2,
  // arbitrary distinct residues elsewhere (canonical representatives).
  std::vector<Elem> beta(q);
  for (std::size_t j = 0; j < q; ++j) {
    std::vector<ChainVal> parts(s);
    for (std::size_t t = 0; t < s; ++t) {
      const auto reps = ring->component(t).residue_reps();
      parts[t] = (t == 1) ? reps[j + 1] : reps[j];
    }
    beta[j] = ring->from_parts(parts);
  }
  std::vector<Elem> entries(2 * q);
  for (std::size_t j = 0; j < q; ++j) {
    entries[j] = ring->one();
    entries[q + j] = beta[j];
  }
  RingMatrix a_mat(ring, 2, q, std::move(entries));

  // a = (a_1, 0, ..., 0) with a_1 in J_1^(e_1 - 1) \ {0}; b likewise in slot 2
  std::vector<ChainVal> pa(s, 0), pb(s, 0);
  pa[0] = ring->component(0).socle_generator();
  pb[1] = ring->component(1).socle_generator();
  const Elem gen_a = ring->from_parts(pa);
  const Elem gen_b = ring->from_parts(pb);

  std::vector<Code> codes;
  codes.push_back(Code::linear_code(ring, 1, {Word{gen_a}}));
  codes.push_back(Code::linear_code(ring, 1, {Word{gen_b}}));

  Counterexample ce{std::move(a_mat), std::move(codes), {}, Rat(0), {}};
  ce.report = verify_bound(ce.codes, ce.a);

  // the constructed witness (a, b) A
  ce.witness.resize(q);
  for (std::size_t j = 0; j < q; ++j) {
    ce.witness[j] = ring->add(gen_a, ring->mul(gen_b, beta[j]));
  }
  ce.witness_weight = word_weight(WeightKind::Homogeneous, *ring, ce.witness);

  if (ce.report.bound_holds) {
    fail(Errc::Internal,
         "constructed instance did not violate the bound strictly");
  }
  return ce;
}

}  // namespace mpchom
