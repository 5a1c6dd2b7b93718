// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_CHAIN_RING_HPP
#define MPCHOM_CHAIN_RING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mpchom {

/// Canonical encoding of a chain-ring element.
///
/// For Z_{p^e} (extension degree r == 1) this is the residue value in
/// [0, p^e). For GF(p^r) with r > 1 it is the base-p packing of the
/// coefficient vector (c_0, ..., c_{r-1}), i.e. sum c_i * p^i.
using ChainVal = std::uint64_t;

/// A finite chain ring: either Z_{p^e} or a Galois field GF(p^r).
///
/// The two supported families cover every chain ring with e == 1 or r == 1.
/// Galois rings with both e >= 2 and r >= 2 are rejected at construction.
/// The maximal ideal J has p^((e-1)*r) elements, J^e = 0 and J^(e-1) != 0,
/// and the residue field R/J is GF(q) with q = p^r.
class ChainRing {
 public:
  /// Z_{p^e}.
  static ChainRing integers_mod(std::uint64_t p, unsigned e);

  /// GF(p^r). For r > 1 an irreducible monic polynomial of degree r over
  /// GF(p) is required; when none is supplied a built-in table covering
  /// q in {4, 8, 9, 16, 25, 27} is consulted. The polynomial is given as
  /// the coefficient list (c_0, ..., c_r) with c_r == 1 and is verified
  /// irreducible by exhaustive divisor trial over GF(p).
  static ChainRing galois_field(
      std::uint64_t p, unsigned r,
      std::optional<std::vector<std::uint32_t>> irreducible = std::nullopt);

  /// General entry point used by parsers: dispatches on (e, r).
  static ChainRing make(
      std::uint64_t p, unsigned e, unsigned r,
      std::optional<std::vector<std::uint32_t>> irreducible = std::nullopt);

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned r() const { return r_; }
  /// Residue field size q = p^r.
  std::uint64_t q() const { return q_; }
  /// |R| = p^(e*r).
  std::uint64_t size() const { return size_; }
  /// |J| = p^((e-1)*r) = |R| / q.
  std::uint64_t ideal_size() const { return size_ / q_; }
  bool is_field() const { return e_ == 1; }
  /// Coefficients (c_0, ..., c_r) of the defining polynomial; empty if r == 1.
  const std::vector<std::uint32_t>& irreducible() const { return irr_; }

  ChainVal zero() const { return 0; }
  ChainVal one() const { return 1; }

  ChainVal add(ChainVal a, ChainVal b) const;
  ChainVal sub(ChainVal a, ChainVal b) const;
  ChainVal mul(ChainVal a, ChainVal b) const;
  ChainVal neg(ChainVal a) const;
  ChainVal pow(ChainVal a, std::uint64_t k) const;

  /// J-adic valuation in [0, e]: v = e iff a == 0, v = 0 iff a is a unit;
  /// in Z_{p^e} this is the multiplicity of p in a.
  unsigned valuation(ChainVal a) const;
  bool is_unit(ChainVal a) const { return valuation(a) == 0; }

  /// Multiplicative inverse; precondition: is_unit(a).
  ChainVal unit_inverse(ChainVal a) const;

  /// Reduction modulo J, as an element of the residue field (see
  /// residue_field()). A surjective ring homomorphism with kernel J.
  ChainVal residue(ChainVal a) const;

  /// The residue field F = R/J as a chain ring (GF(p) for Z_{p^e};
  /// the field itself when e == 1).
  ChainRing residue_field() const;

  /// Canonical coset representatives of R/J, exactly q of them, in a
  /// deterministic order: the lifts 0..p-1 for Z_{p^e}, all elements for
  /// fields.
  std::vector<ChainVal> residue_reps() const;

  /// A canonical generator of J^(e-1) \ {0}: p^(e-1) for Z_{p^e}, 1 for
  /// fields.
  ChainVal socle_generator() const;

  /// "Z4", "Z9", "F4", ...
  std::string describe() const;

  bool same_spec(const ChainRing& other) const;

 private:
  ChainRing() = default;

  std::uint64_t p_ = 0;
  unsigned e_ = 0;
  unsigned r_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> irr_;  // degree r, monic, constant term first
};

/// Deterministic primality test by trial division (inputs are desk scale).
bool is_prime_u64(std::uint64_t n);

/// base^exp with overflow guard; throws RingError(Errc::TooLarge).
std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp);

}  // namespace mpchom

#endif
