// SPDX-License-Identifier: Apache-2.0
#include "mpchom/homweight.hpp"

#include "mpchom/errors.hpp"

namespace mpchom {

MuPhi mu_phi(const ChainRing& ring, ChainVal x) {
  if (x == 0) return {1, 1};
  const unsigned f = ring.e() - ring.valuation(x);
  if (f == 1) return {-1, static_cast<long long>(ring.q() - 1)};
  long long qf = 1;
  for (unsigned i = 0; i + 1 < f; ++i) qf *= static_cast<long long>(ring.q());
  // q^f - q^(f-1) = q^(f-1) * (q - 1)
  return {0, qf * static_cast<long long>(ring.q() - 1)};
}

Rat hom_weight(const Pir& ring, Elem x) {
  if (x == 0) return Rat(0);
  int sign = 1;
  long long denom = 1;
  for (std::size_t t = 0; t < ring.component_count(); ++t) {
    const ChainVal part = ring.part(x, t);
    if (part == 0) continue;
    const ChainRing& comp = ring.component(t);
    if (comp.valuation(part) + 1 < comp.e()) {
      return Rat(1);  // some nonzero part outside J^(e-1), i.e. Tbar != T
    }
    sign = -sign;
    denom *= static_cast<long long>(comp.q() - 1);
  }
  return Rat(1) - Rat(sign, denom);
}

Rat hom_weight_product_form(const Pir& ring, Elem x) {
  Rat prod(1);
  for (std::size_t t = 0; t < ring.component_count(); ++t) {
    const MuPhi mp = mu_phi(ring.component(t), ring.part(x, t));
    prod *= Rat(mp.mu, mp.phi);
  }
  return Rat(1) - prod;
}

Rat hamming_weight(const Pir& ring, Elem x) {
  (void)ring;
  return x == 0 ? Rat(0) : Rat(1);
}

Rat word_weight(WeightKind kind, const Pir& ring, std::span<const Elem> word) {
  Rat sum(0);
  for (const Elem x : word) {
    sum += (kind == WeightKind::Homogeneous) ? hom_weight(ring, x)
                                             : hamming_weight(ring, x);
  }
  return sum;
}

Rat word_distance(WeightKind kind, const Pir& ring, std::span<const Elem> u,
                  std::span<const Elem> v) {
  if (u.size() != v.size()) {
    fail(Errc::LengthMismatch, "distance of words with different lengths");
  }
  Rat sum(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Elem diff = ring.sub(u[i], v[i]);
    sum += (kind == WeightKind::Homogeneous) ? hom_weight(ring, diff)
                                             : hamming_weight(ring, diff);
  }
  return sum;
}

WeightBounds weight_bounds(const Pir& ring) {
  const auto& qs = ring.qs();
  const long long q1 = static_cast<long long>(qs[0]);
  WeightBounds b;
  b.upper = Rat(1) + Rat(1, q1 - 1);
  if (qs.size() >= 2) {
    const long long q2 = static_cast<long long>(qs[1]);
    b.lower = Rat(1) - Rat(1, (q1 - 1) * (q2 - 1));
  } else {
    // exact minimum over nonzero elements of a single chain ring: every
    // nonzero weight is either 1 (f > 1) or 1 + 1/(q-1) (f == 1)
    b.lower = ring.component(0).is_field() ? b.upper : Rat(1);
  }
  return b;
}

std::vector<Rat> weight_table(const Pir& ring) {
  if (ring.size() > 1'000'000ULL) {
    fail(Errc::EnumerationTooLarge,
         "weight table enumeration over " + std::to_string(ring.size()) +
             " elements exceeds the guard");
  }
  std::vector<Rat> table(static_cast<std::size_t>(ring.size()));
  for (Elem x = 0; x < ring.size(); ++x) {
    table[static_cast<std::size_t>(x)] = hom_weight(ring, x);
  }
  return table;
}

std::optional<ScaledWeights> scaled_weight_table(const Pir& ring,
                                                 WeightKind kind) {
  if (ring.size() > 65536ULL) return std::nullopt;
  ScaledWeights out;
  if (kind == WeightKind::Homogeneous) {
    for (const std::uint64_t q : ring.qs()) {
      out.denom *= static_cast<long long>(q - 1);
    }
  }
  out.values.resize(static_cast<std::size_t>(ring.size()));
  for (Elem x = 0; x < ring.size(); ++x) {
    const Rat w = (kind == WeightKind::Homogeneous)
                      ? hom_weight(ring, x)
                      : hamming_weight(ring, x);
    const Rat scaled = w * Rat(out.denom);
    if (scaled.denominator() != 1) {
      fail(Errc::Internal, "weight did not scale to an integer");
    }
    out.values[static_cast<std::size_t>(x)] = scaled.numerator();
  }
  return out;
}

}  // namespace mpchom
