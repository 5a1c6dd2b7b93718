// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_MPC_HPP
#define MPCHOM_MPC_HPP

#include <optional>
#include <string>
#include <vector>

#include "mpchom/codes.hpp"
#include "mpchom/ring_matrix.hpp"

namespace mpchom {

/// Verification report for one matrix product code instance.
struct MpcReport {
  Rat d_h;
  Rat bound;  // min over j of (l - j + 1) * d_h(C_j)
  bool hypothesis_ok = false;
  std::string hypothesis_reason;
  bool bound_holds = false;
  bool c1 = false;  // column-permutably upper triangular
  bool c2 = false;  // linear nested chain C_1 >= ... >= C_m
  bool equality = false;
  Word witness_a;
  Word witness_b;
  std::uint64_t cardinality = 0;
  std::uint64_t expected_cardinality = 0;  // prod M_j
  bool cardinality_ok = false;
  std::size_t m = 0, l = 0, n = 0;
};

/// C = [C_1,...,C_m] A: every tuple of column codewords times A, flattened
/// row-major (word[(i-1)*l + c] = sum_j c_j[i] * a_{jc}). The result is an
/// explicit code of length n*l, linear iff every C_j is linear.
Code matrix_product(const std::vector<Code>& codes, const RingMatrix& a);

/// min over j of (l - j + 1) * d_h(C_j); every C_j needs two words.
Rat distance_bound(const std::vector<Code>& codes, const RingMatrix& a);

struct Hypothesis {
  bool ok = false;
  std::string reason;
};

/// q_2 > q_1 + 1 whenever s > 1 (vacuous for a single chain ring). For Z_N
/// this is equivalent to N not being divisible by 6.
Hypothesis hypothesis_check(const Pir& ring);

/// Full distance-bound verification; rejects matrices that are not NSC.
MpcReport verify_bound(const std::vector<Code>& codes, const RingMatrix& a);

/// Dual-side verification for square NSC matrices and linear codes:
/// checks dual(C) == [C_1^perp,...,C_m^perp] (A^-1)^T as sets, that
/// J (A^-1)^T is NSC, and the dual bound min over j of j * d_h(C_j^perp).
struct DualReport {
  /// False when C^perp or some C_j^perp has fewer than two words (duals of
  /// full codes are {0}); the distance fields are then vacuous.
  bool bound_defined = false;
  Rat dual_d_h;
  Rat dual_bound;
  bool set_equal = false;
  bool reversed_inverse_nsc = false;  // J (A^-1)^T passes is_nsc
  bool hypothesis_ok = false;
  bool c1 = false;
  bool c2 = false;
  bool bound_holds = true;  // vacuously true when !bound_defined
  bool equality = true;
  std::uint64_t dual_cardinality = 0;
  bool cardinality_ok = false;  // |C| * |C^perp| == |R|^(n*m)
};

DualReport verify_dual(const std::vector<Code>& codes, const RingMatrix& a);

/// Exhaustive minimum Hamming weight of the span of the first k rows of an
/// NSC matrix; equals l - k + 1.
struct RowspanReport {
  std::size_t k = 0;
  std::uint64_t min_hamming = 0;
  std::uint64_t expected = 0;  // l - k + 1
  bool ok = false;
};

RowspanReport rowspan_hamming(const RingMatrix& a, std::size_t k);

/// Partial-sum weight inequality
///   w_h((c_1,...,c_k,0,...,0)A) >= (l-k+1) * w_h(c_k)   for c_k != 0,
/// with equality for k == 1. Guaranteed when k == 1, k >= 3, or k == 2 with
/// l < q_1 or (l == q_1 and the q_2 > q_1 + 1 hypothesis holds).
struct PartialBoundReport {
  std::size_t k = 0;
  bool applicable = false;  // within the guaranteed regime above
  std::string skip_reason;  // set when not applicable
  bool held = false;
  std::optional<std::vector<Word>> violation;  // tuple (c_1..c_k) on failure
};

/// Routing predicate for the guaranteed regime.
PartialBoundReport partial_bound_check(const RingMatrix& a,
                                       const std::vector<Code>& codes,
                                       std::size_t k);

/// Strict form: throws RingError(Errc::ConditionNotMet) outside the
/// guaranteed regime, otherwise returns the evaluated report.
PartialBoundReport partial_bound_property(const RingMatrix& a,
                                          const std::vector<Code>& codes,
                                          std::size_t k);

/// The sharpness construction for rings with q_2 == q_1 + 1: a 2 x q_1 NSC
/// matrix of lifted representatives and two length-1 ideal codes whose
/// product violates the bound strictly.
struct Counterexample {
  RingMatrix a;
  std::vector<Code> codes;
  Word witness;  // the constructed violating codeword
  Rat witness_weight;
  MpcReport report;
};

Counterexample build_counterexample(PirPtr ring);

}  // namespace mpchom

#endif
