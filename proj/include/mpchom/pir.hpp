// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_PIR_HPP
#define MPCHOM_PIR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mpchom/chain_ring.hpp"

namespace mpchom {

/// Element of a product ring, encoded as a mixed-radix index over the
/// component encodings: idx = sum_t part_t * stride_t with stride_1 = 1
/// and stride_{t+1} = stride_t * |R_t|. Always canonical.
using Elem = std::uint64_t;

/// Support sets of an element (component indices are 1-based, matching the
/// reports): T = components with a nonzero part, Tbar = the subset of T
/// whose part lies in J^(e-1).
struct SupportSets {
  std::vector<std::size_t> T;
  std::vector<std::size_t> Tbar;
};

/// A finite commutative principal ideal ring R = R_1 x ... x R_s, stored
/// with components sorted by residue field size q_1 <= ... <= q_s (stable,
/// so equal-q components keep their input order). Immutable; hold through
/// shared_ptr so matrices and codes can carry their ring identity.
class Pir {
 public:
  /// Product of chain rings in any order; the canonical sorted order and
  /// the permutation from input slots to canonical slots are recorded.
  static std::shared_ptr<const Pir> product(std::vector<ChainRing> components);

  /// Z_N via the Chinese Remainder Theorem, N = p_1^e_1 * ... * p_s^e_s
  /// decomposed by trial division. Elements of such a ring serialize as
  /// plain integers in [0, N).
  static std::shared_ptr<const Pir> from_modulus(std::uint64_t modulus);

  std::size_t component_count() const { return components_.size(); }
  const ChainRing& component(std::size_t t) const { return components_[t]; }
  const std::vector<ChainRing>& components() const { return components_; }

  /// Maps input slot -> canonical slot (identity for modulus-built rings).
  const std::vector<std::size_t>& sort_permutation() const {
    return input_to_canonical_;
  }

  std::uint64_t size() const { return size_; }
  std::optional<std::uint64_t> modulus() const { return modulus_; }
  /// Sorted residue field sizes (q_1, ..., q_s).
  const std::vector<std::uint64_t>& qs() const { return qs_; }
  std::uint64_t min_q() const { return qs_.front(); }

  /// Canonical text form, e.g. "Z6" or "Z4 x Z9 x F4". Structural ring
  /// identity for mismatch checks; serialization style is not part of it.
  const std::string& signature() const { return signature_; }
  /// Like signature(), but shows the modulus form when one is recorded.
  std::string describe() const;

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  ChainVal part(Elem x, std::size_t t) const {
    return (x / strides_[t]) % components_[t].size();
  }
  std::vector<ChainVal> parts(Elem x) const;
  Elem from_parts(const std::vector<ChainVal>& parts) const;

  Elem add(Elem a, Elem b) const {
    return ops_cached() ? add_tab_[a * size_ + b] : add_slow(a, b);
  }
  Elem mul(Elem a, Elem b) const {
    return ops_cached() ? mul_tab_[a * size_ + b] : mul_slow(a, b);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const {
    return ops_cached() ? neg_tab_[a] : neg_slow(a);
  }

  bool is_unit(Elem a) const;
  Elem unit_inverse(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }

  SupportSets support_sets(Elem a) const;

  /// CRT transport Z_N <-> R; requires modulus provenance.
  Elem from_integer(std::uint64_t k) const;
  std::uint64_t to_integer(Elem a) const;

  bool same_spec(const Pir& other) const;

 private:
  Pir() = default;

  bool ops_cached() const { return !add_tab_.empty(); }
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;

  std::vector<ChainRing> components_;
  std::vector<std::size_t> input_to_canonical_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint64_t> qs_;
  std::uint64_t size_ = 0;
  Elem one_ = 0;
  std::optional<std::uint64_t> modulus_;
  std::string signature_;
  // full operation tables for small rings; enumeration-heavy paths stay in
  // one array lookup per ring operation
  std::vector<Elem> add_tab_;
  std::vector<Elem> mul_tab_;
  std::vector<Elem> neg_tab_;

  void finish_init();
};

using PirPtr = std::shared_ptr<const Pir>;

/// Throws RingError(Errc::SpecMismatch) unless the two rings agree.
void require_same_spec(const Pir& a, const Pir& b, const char* context);

}  // namespace mpchom

#endif
