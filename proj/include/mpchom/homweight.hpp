// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_HOMWEIGHT_HPP
#define MPCHOM_HOMWEIGHT_HPP

#include <optional>
#include <span>
#include <vector>

#include "mpchom/pir.hpp"
#include "mpchom/rational.hpp"

namespace mpchom {

/// Moebius/orbit-count pair of a chain-ring element, from the closed-form
/// case table. With f = e - valuation(x) for x != 0:
///   x == 0: (1, 1);  f == 1: (-1, q-1);  f > 1: (0, q^f - q^(f-1)).
struct MuPhi {
  int mu = 0;
  long long phi = 1;
};

MuPhi mu_phi(const ChainRing& ring, ChainVal x);

enum class WeightKind { Homogeneous, Hamming };

/// Homogeneous weight of a ring element (normalization constant 1),
/// piecewise form: 0 for x = 0; 1 when some nonzero part lies outside
/// J^(e-1); otherwise 1 - (-1)^|T| * prod_{t in T} 1/(q_t - 1).
Rat hom_weight(const Pir& ring, Elem x);

/// Same value through the product route 1 - prod_t mu(x_t)/phi(x_t).
/// Kept as an independently computed cross-check of hom_weight.
Rat hom_weight_product_form(const Pir& ring, Elem x);

Rat hamming_weight(const Pir& ring, Elem x);

/// Coordinatewise sum over a word.
Rat word_weight(WeightKind kind, const Pir& ring, std::span<const Elem> word);

/// d(u, v) = w(u - v); lengths must match.
Rat word_distance(WeightKind kind, const Pir& ring, std::span<const Elem> u,
                  std::span<const Elem> v);

/// Range of the homogeneous weight over nonzero elements.
/// For s >= 2: [1 - 1/((q_1-1)(q_2-1)), 1 + 1/(q_1-1)].
/// For s == 1 the generic lower bound is vacuous; the exact minimum is
/// reported instead: 1 + 1/(q-1) for fields, 1 otherwise.
struct WeightBounds {
  Rat lower;
  Rat upper;
};

WeightBounds weight_bounds(const Pir& ring);

/// Precomputed per-element homogeneous weights for distance scans;
/// guarded at 10^6 elements.
std::vector<Rat> weight_table(const Pir& ring);

/// Weights rendered as exact integers against the common denominator
/// prod_t (q_t - 1), so enumeration loops can sum plain int64 instead of
/// normalizing rationals. Available for rings with at most 65536 elements.
struct ScaledWeights {
  long long denom = 1;
  std::vector<long long> values;  // values[x] = w(x) * denom, exact

  Rat unscale(long long total) const { return Rat(total, denom); }
};

std::optional<ScaledWeights> scaled_weight_table(const Pir& ring,
                                                 WeightKind kind);

}  // namespace mpchom

#endif
