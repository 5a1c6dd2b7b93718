// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "mpchom/chain_ring.hpp"
#include "mpchom/errors.hpp"

using namespace mpchom;

namespace {

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const RingError& e) {
    return e.code();
  }
  return Errc::Ok;
}

// rings small enough for exhaustive checks
std::vector<ChainRing> test_rings() {
  return {
      ChainRing::integers_mod(2, 1), ChainRing::integers_mod(2, 2),
      ChainRing::integers_mod(2, 3), ChainRing::integers_mod(3, 2),
      ChainRing::integers_mod(5, 2), ChainRing::integers_mod(7, 1),
      ChainRing::galois_field(2, 2), ChainRing::galois_field(3, 2),
      ChainRing::galois_field(2, 3),
  };
}

}  // namespace

TEST_CASE("chain ring construction") {
  const ChainRing z4 = ChainRing::integers_mod(2, 2);
  CHECK(z4.q() == 2);
  CHECK(z4.size() == 4);
  CHECK(z4.ideal_size() == 2);
  CHECK(z4.describe() == "Z4");

  const ChainRing f3 = ChainRing::integers_mod(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.is_field());

  // irreducibility oracle for x^2 + x + 1 over GF(2): no root at 0 or 1
  const std::vector<std::uint32_t> f = {1, 1, 1};
  for (std::uint32_t x : {0u, 1u}) {
    const std::uint32_t value = (f[0] + f[1] * x + f[2] * x * x) % 2;
    CHECK(value != 0);
  }
  const ChainRing f4 = ChainRing::galois_field(2, 2, f);
  CHECK(f4.q() == 4);
  CHECK(f4.size() == 4);
  CHECK(f4.describe() == "F4");
}

TEST_CASE("chain ring construction errors") {
  CHECK(error_of([] { ChainRing::integers_mod(4, 1); }) ==
        Errc::CompositeCharacteristic);
  CHECK(error_of([] { ChainRing::make(2, 2, 2); }) ==
        Errc::UnsupportedGaloisRing);
  CHECK(error_of([] {
          ChainRing::galois_field(2, 2, std::vector<std::uint32_t>{0, 0, 1});
        }) == Errc::ReduciblePolynomial);  // x^2 = x * x
  CHECK(error_of([] { ChainRing::galois_field(7, 2); }) ==
        Errc::MissingPolynomial);  // q = 49 not in the default table
  CHECK(error_of([] { ChainRing::make(2, 1, 1, std::vector<std::uint32_t>{1, 1}); }) ==
        Errc::InvalidArgument);
  // defaults cover q in {4, 8, 9, 16, 25, 27}
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
    CHECK(ChainRing::galois_field(p, r).q() == checked_pow_u64(p, r));
  }
}

TEST_CASE("chain ring arithmetic examples") {
  const ChainRing z4 = ChainRing::integers_mod(2, 2);
  CHECK(z4.add(3, 3) == 2);

  const ChainRing z9 = ChainRing::integers_mod(3, 2);
  CHECK(z9.mul(3, 3) == 0);  // J^2 = 0 in Z_9

  // GF(4) with x^2 + x + 1: indices 2 = a, 3 = a + 1
  const ChainRing f4 = ChainRing::galois_field(2, 2);
  CHECK(f4.mul(2, 2) == 3);  // a * a = a + 1
  CHECK(f4.mul(2, 3) == 1);  // a * (a + 1) = 1
  CHECK(f4.mul(3, 3) == 2);  // (a + 1)^2 = a
}

TEST_CASE("valuation and residue examples") {
  const ChainRing z8 = ChainRing::integers_mod(2, 3);
  CHECK(z8.valuation(4) == 2);
  CHECK(z8.valuation(0) == 3);

  const ChainRing f4 = ChainRing::galois_field(2, 2);
  CHECK(f4.valuation(2) == 0);  // nonzero field element is a unit
  CHECK(f4.valuation(0) == 1);

  const ChainRing z4 = ChainRing::integers_mod(2, 2);
  CHECK(z4.residue(3) == 1);
  const ChainRing z9 = ChainRing::integers_mod(3, 2);
  CHECK(z9.residue(6) == 0);
  CHECK(f4.residue(2) == 2);
}

TEST_CASE("residue representatives") {
  CHECK(ChainRing::integers_mod(2, 2).residue_reps() ==
        std::vector<ChainVal>{0, 1});
  CHECK(ChainRing::integers_mod(3, 2).residue_reps() ==
        std::vector<ChainVal>{0, 1, 2});
  CHECK(ChainRing::galois_field(2, 2).residue_reps() ==
        std::vector<ChainVal>{0, 1, 2, 3});

  // oracle: representatives are pairwise distinct modulo J
  for (const ChainRing& ring : test_rings()) {
    std::set<ChainVal> residues;
    for (const ChainVal rep : ring.residue_reps()) {
      residues.insert(ring.residue(rep));
    }
    CHECK(residues.size() == ring.q());
  }
}

TEST_CASE("valuation is multiplicative in Z_{p^e}") {
  for (const ChainRing& ring : test_rings()) {
    if (ring.r() > 1) continue;
    for (ChainVal x = 0; x < ring.size(); ++x) {
      for (ChainVal y = 0; y < ring.size(); ++y) {
        const unsigned expected =
            std::min(ring.e(), ring.valuation(x) + ring.valuation(y));
        CHECK(ring.valuation(ring.mul(x, y)) == expected);
      }
    }
  }
}

TEST_CASE("coset covering: reps * a enumerate J^(k-1)/J^k") {
  for (const ChainRing& ring : test_rings()) {
    const auto reps = ring.residue_reps();
    for (unsigned k = 1; k <= ring.e(); ++k) {
      for (ChainVal a = 0; a < ring.size(); ++a) {
        if (ring.valuation(a) != k - 1) continue;
        // quotient by J^k: classes of x are x + J^k; enumerate J^k first
        std::set<ChainVal> jk;
        for (ChainVal x = 0; x < ring.size(); ++x) {
          if (ring.valuation(x) >= k) jk.insert(x);
        }
        std::set<ChainVal> class_reps;  // smallest member of each coset hit
        for (const ChainVal u : reps) {
          const ChainVal ua = ring.mul(u, a);
          CHECK(ring.valuation(ua) >= k - 1);  // lands in J^(k-1)
          ChainVal smallest = ua;
          for (const ChainVal j : jk) {
            smallest = std::min(smallest, ring.add(ua, j));
          }
          class_reps.insert(smallest);
        }
        CHECK(class_reps.size() == ring.q());  // pairwise distinct mod J^k
      }
    }
  }
}

TEST_CASE("residue is a surjective ring homomorphism with kernel J") {
  for (const ChainRing& ring : test_rings()) {
    const ChainRing field = ring.residue_field();
    std::size_t kernel = 0;
    std::set<ChainVal> image;
    for (ChainVal x = 0; x < ring.size(); ++x) {
      image.insert(ring.residue(x));
      if (ring.residue(x) == 0) ++kernel;
      for (ChainVal y = 0; y < ring.size(); ++y) {
        CHECK(ring.residue(ring.add(x, y)) ==
              field.add(ring.residue(x), ring.residue(y)));
        CHECK(ring.residue(ring.mul(x, y)) ==
              field.mul(ring.residue(x), ring.residue(y)));
      }
    }
    CHECK(image.size() == ring.q());
    CHECK(kernel == ring.ideal_size());
  }
}

TEST_CASE("units: valuation zero iff residue nonzero, with inverses") {
  for (const ChainRing& ring : test_rings()) {
    for (ChainVal x = 0; x < ring.size(); ++x) {
      const bool unit = ring.is_unit(x);
      CHECK(unit == (ring.residue(x) != 0));
      if (unit) {
        CHECK(ring.mul(x, ring.unit_inverse(x)) == ring.one());
      }
    }
  }
}

TEST_CASE("socle generator lies in J^(e-1) and is nonzero") {
  for (const ChainRing& ring : test_rings()) {
    const ChainVal g = ring.socle_generator();
    CHECK(g != 0);
    CHECK(ring.valuation(g) == ring.e() - 1);
  }
}
