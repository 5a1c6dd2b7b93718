// SPDX-License-Identifier: Apache-2.0
#include "mpchom/chain_ring.hpp"

#include <algorithm>
#include <sstream>

#include "mpchom/errors.hpp"

namespace mpchom {

namespace {

constexpr std::uint64_t kMaxRingSize = 1'000'000'000'000'000ULL;  // 10^15

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, constant first

unsigned poly_degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) return static_cast<unsigned>(i);
  }
  return 0;
}

// Remainder of f by a monic divisor g, coefficients mod p.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  const unsigned dg = poly_degree(g);
  while (true) {
    const unsigned df = poly_degree(f);
    if (df < dg || (df == 0 && f[0] == 0)) break;
    const std::uint64_t lead = f[df];
    if (lead == 0) break;
    // f -= lead * x^(df-dg) * g
    for (unsigned j = 0; j <= dg; ++j) {
      const std::uint64_t t = (static_cast<std::uint64_t>(g[j]) * lead) % p;
      f[df - dg + j] =
          static_cast<std::uint32_t>((f[df - dg + j] + p - t) % p);
    }
    if (f[df] != 0) fail(Errc::Internal, "polynomial reduction did not cancel");
    f.resize(df);  // drop the (now zero) leading term
    if (f.empty()) f.push_back(0);
  }
  return f;
}

bool poly_is_zero(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

// Exhaustive divisor trial: no monic divisor of degree 1..r/2 over GF(p).
bool poly_irreducible(const Poly& f, std::uint64_t p, unsigned r) {
  for (unsigned d = 1; d <= r / 2; ++d) {
    // enumerate all monic polynomials of degree d
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t k = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(k % p);
        k /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

// Built-in defaults for the residue-field sizes exercised by the CLI grammar.
std::optional<Poly> default_irreducible(std::uint64_t q) {
  switch (q) {
    case 4:  return Poly{1, 1, 1};        // x^2 + x + 1 over GF(2)
    case 8:  return Poly{1, 1, 0, 1};     // x^3 + x + 1 over GF(2)
    case 9:  return Poly{1, 0, 1};        // x^2 + 1 over GF(3)
    case 16: return Poly{1, 1, 0, 0, 1};  // x^4 + x + 1 over GF(2)
    case 25: return Poly{2, 0, 1};        // x^2 + 2 over GF(5)
    case 27: return Poly{1, 2, 0, 1};     // x^3 + 2x + 1 over GF(3)
    default: return std::nullopt;
  }
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > kMaxRingSize / base) {
      fail(Errc::TooLarge, "ring size exceeds the supported bound");
    }
    out *= base;
  }
  return out;
}

ChainRing ChainRing::integers_mod(std::uint64_t p, unsigned e) {
  return make(p, e, 1, std::nullopt);
}

ChainRing ChainRing::galois_field(
    std::uint64_t p, unsigned r,
    std::optional<std::vector<std::uint32_t>> irreducible) {
  return make(p, 1, r, std::move(irreducible));
}

ChainRing ChainRing::make(
    std::uint64_t p, unsigned e, unsigned r,
    std::optional<std::vector<std::uint32_t>> irreducible) {
  if (e < 1 || r < 1) {
    fail(Errc::OutOfRange, "chain ring requires e >= 1 and r >= 1");
  }
  if (!is_prime_u64(p)) {
    fail(Errc::CompositeCharacteristic,
         "characteristic " + std::to_string(p) + " is not prime");
  }
  if (e >= 2 && r >= 2) {
    fail(Errc::UnsupportedGaloisRing,
         "Galois rings GR(p^e, r) with e >= 2 and r >= 2 are not supported");
  }

  ChainRing ring;
  ring.p_ = p;
  ring.e_ = e;
  ring.r_ = r;
  ring.q_ = checked_pow_u64(p, r);
  ring.size_ = checked_pow_u64(p, e * r);

  if (r == 1) {
    if (irreducible.has_value()) {
      fail(Errc::InvalidArgument,
           "an irreducible polynomial is only meaningful for r > 1");
    }
    return ring;
  }

  Poly f;
  if (irreducible.has_value()) {
    f = *irreducible;
  } else if (auto table = default_irreducible(ring.q_)) {
    f = *table;
  } else {
    fail(Errc::MissingPolynomial,
         "no irreducible polynomial supplied for GF(" +
             std::to_string(ring.q_) + ") and none in the built-in table");
  }
  if (f.size() != static_cast<std::size_t>(r) + 1 || f[r] != 1) {
    fail(Errc::InvalidArgument,
         "defining polynomial must be monic of degree exactly r");
  }
  for (auto& c : f) {
    if (c >= p) {
      fail(Errc::InvalidArgument, "polynomial coefficients must lie in [0, p)");
    }
  }
  if (!poly_irreducible(f, p, r)) {
    fail(Errc::ReduciblePolynomial,
         "defining polynomial is reducible over GF(" + std::to_string(p) + ")");
  }
  ring.irr_ = std::move(f);
  return ring;
}

ChainVal ChainRing::add(ChainVal a, ChainVal b) const {
  if (r_ == 1) return (a + b) % size_;
  ChainVal out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    const std::uint64_t ca = (a / scale) % p_;
    const std::uint64_t cb = (b / scale) % p_;
    out += ((ca + cb) % p_) * scale;
    scale *= p_;
  }
  return out;
}

ChainVal ChainRing::sub(ChainVal a, ChainVal b) const { return add(a, neg(b)); }

ChainVal ChainRing::neg(ChainVal a) const {
  if (r_ == 1) return a == 0 ? 0 : size_ - a;
  ChainVal out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    const std::uint64_t c = (a / scale) % p_;
    out += (c == 0 ? 0 : p_ - c) * scale;
    scale *= p_;
  }
  return out;
}

ChainVal ChainRing::mul(ChainVal a, ChainVal b) const {
  if (r_ == 1) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % size_);
  }
  // schoolbook product of coefficient vectors, then reduction by the monic
  // irreducible: x^r = -(c_0 + c_1 x + ... + c_{r-1} x^{r-1})
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  std::uint64_t sa = 1;
  for (unsigned i = 0; i < r_; ++i, sa *= p_) {
    const std::uint64_t ca = (a / sa) % p_;
    if (ca == 0) continue;
    std::uint64_t sb = 1;
    for (unsigned j = 0; j < r_; ++j, sb *= p_) {
      const std::uint64_t cb = (b / sb) % p_;
      prod[i + j] = (prod[i + j] + ca * cb) % p_;
    }
  }
  for (unsigned d = 2 * r_ - 2; d >= r_; --d) {
    const std::uint64_t lead = prod[d];
    if (lead != 0) {
      for (unsigned j = 0; j < r_; ++j) {
        const std::uint64_t t = (static_cast<std::uint64_t>(irr_[j]) * lead) % p_;
        prod[d - r_ + j] = (prod[d - r_ + j] + p_ - t) % p_;
      }
      prod[d] = 0;
    }
    if (d == r_) break;
  }
  ChainVal out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    out += prod[i] * scale;
    scale *= p_;
  }
  return out;
}

ChainVal ChainRing::pow(ChainVal a, std::uint64_t k) const {
  ChainVal out = one();
  ChainVal base = a;
  while (k > 0) {
    if (k & 1) out = mul(out, base);
    base = mul(base, base);
    k >>= 1;
  }
  return out;
}

unsigned ChainRing::valuation(ChainVal a) const {
  if (a == 0) return e_;
  if (r_ > 1) return 0;  // nonzero field element
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

ChainVal ChainRing::unit_inverse(ChainVal a) const {
  if (!is_unit(a)) fail(Errc::SingularMatrix, "element is not a unit");
  if (r_ == 1) {
    // extended gcd of (a, p^e)
    std::int64_t m = static_cast<std::int64_t>(size_);
    std::int64_t r0 = m, r1 = static_cast<std::int64_t>(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t qq = r0 / r1;
      std::int64_t tmp = r0 - qq * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - qq * t1;
      t0 = t1;
      t1 = tmp;
    }
    std::int64_t inv = t0 % m;
    if (inv < 0) inv += m;
    return static_cast<ChainVal>(inv);
  }
  return pow(a, q_ - 2);
}

ChainVal ChainRing::residue(ChainVal a) const {
  if (r_ == 1) return a % p_;
  return a;  // J = 0 when e == 1
}

ChainRing ChainRing::residue_field() const {
  if (r_ == 1) return integers_mod(p_, 1);
  return *this;
}

std::vector<ChainVal> ChainRing::residue_reps() const {
  const std::uint64_t count = (r_ == 1) ? p_ : q_;
  std::vector<ChainVal> reps(count);
  for (std::uint64_t i = 0; i < count; ++i) reps[i] = i;
  return reps;
}

ChainVal ChainRing::socle_generator() const {
  if (r_ > 1) return one();
  ChainVal g = 1;
  for (unsigned i = 0; i + 1 < e_; ++i) g *= p_;
  return g;
}

std::string ChainRing::describe() const {
  std::ostringstream os;
  if (r_ == 1) {
    os << "Z" << size_;
  } else {
    os << "F" << q_;
  }
  return os.str();
}

bool ChainRing::same_spec(const ChainRing& other) const {
  return p_ == other.p_ && e_ == other.e_ && r_ == other.r_ &&
         irr_ == other.irr_;
}

}  // namespace mpchom
