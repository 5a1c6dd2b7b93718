// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <functional>
#include <numeric>

#include "mpchom/campaign.hpp"
#include "mpchom/errors.hpp"
#include "mpchom/ring_matrix.hpp"

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

RingMatrix from_integers(const PirPtr& ring, std::size_t m, std::size_t l,
                         const std::vector<std::uint64_t>& values) {
  std::vector<Elem> entries;
  entries.reserve(values.size());
  for (const std::uint64_t v : values) entries.push_back(ring->from_integer(v));
  return RingMatrix(ring, m, l, std::move(entries));
}

RingMatrix random_matrix(SplitMix64& rng, const PirPtr& ring, std::size_t m,
                         std::size_t l) {
  std::vector<Elem> entries(m * l);
  for (Elem& x : entries) x = rng.next() % ring->size();
  return RingMatrix(ring, m, l, std::move(entries));
}

std::vector<PirPtr> matrix_test_rings() {
  return {
      Pir::from_modulus(4),  Pir::from_modulus(5),  Pir::from_modulus(6),
      Pir::from_modulus(9),  Pir::from_modulus(10), Pir::from_modulus(12),
      Pir::product(
          {ChainRing::integers_mod(2, 1), ChainRing::galois_field(2, 2)}),
  };
}

// brute-force column-permutation upper-triangularity for small widths
bool cput_brute_force(const RingMatrix& a) {
  std::vector<std::size_t> perm(a.cols());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const RingMatrix b = a.permute_columns(perm);
    bool upper = true;
    for (std::size_t i = 0; i < b.rows() && upper; ++i) {
      for (std::size_t j = 0; j < i && j < b.cols(); ++j) {
        if (b.at(i, j) != 0) {
          upper = false;
          break;
        }
      }
    }
    if (upper) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("determinant examples") {
  const auto z6 = Pir::from_modulus(6);
  CHECK(z6->to_integer(det(from_integers(z6, 2, 2, {1, 1, 4, 5}))) == 1);
  CHECK(det(RingMatrix::identity(z6, 3)) == z6->one());
  CHECK(z6->to_integer(det(from_integers(z6, 1, 1, {4}))) == 4);
  CHECK(error_of([&] { det(from_integers(z6, 1, 2, {1, 2})); }) ==
        Errc::NotSquare);
}

TEST_CASE("determinant is multiplicative") {
  SplitMix64 rng(11);
  for (const auto& ring : matrix_test_rings()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 30; ++trial) {
        const RingMatrix a = random_matrix(rng, ring, n, n);
        const RingMatrix b = random_matrix(rng, ring, n, n);
        CHECK(det(a.mul(b)) == ring->mul(det(a), det(b)));
      }
    }
  }
}

TEST_CASE("is_nsc examples") {
  const auto z5 = Pir::from_modulus(5);
  CHECK(is_nsc(from_integers(z5, 2, 3, {1, 1, 1, 0, 1, 2})).ok);

  const auto z4 = Pir::from_modulus(4);
  const NscResult bad = is_nsc(from_integers(z4, 2, 2, {1, 2, 0, 1}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.failure.has_value());
  CHECK(bad.failure->k == 1);
  CHECK(bad.failure->cols == std::vector<std::size_t>{2});

  const auto z6 = Pir::from_modulus(6);
  CHECK(is_nsc(from_integers(z6, 2, 2, {1, 1, 4, 5})).ok);

  CHECK(error_of([&] { is_nsc(from_integers(z6, 2, 1, {1, 1})); }) ==
        Errc::WideMatrix);
}

TEST_CASE("residue projections") {
  const auto z6 = Pir::from_modulus(6);
  const RingMatrix a = from_integers(z6, 2, 2, {1, 1, 4, 5});
  const RingMatrix p1 = project(a, 0);
  CHECK(p1.ring()->size() == 2);
  CHECK(p1.entries() == std::vector<Elem>{1, 1, 0, 1});
  const RingMatrix p2 = project(a, 1);
  CHECK(p2.ring()->size() == 3);
  CHECK(p2.entries() == std::vector<Elem>{1, 1, 1, 2});
  CHECK(error_of([&] { project(a, 2); }) == Errc::BadIndex);

  const RingMatrix zero(z6, 2, 2, std::vector<Elem>(4, 0));
  CHECK(project(zero, 0).entries() == std::vector<Elem>(4, 0));
}

TEST_CASE("nsc via residue fields: examples and equivalence") {
  const auto z6 = Pir::from_modulus(6);
  CHECK(nsc_via_residue_fields(from_integers(z6, 2, 2, {1, 1, 4, 5})));
  CHECK_FALSE(nsc_via_residue_fields(from_integers(z6, 2, 2, {1, 1, 1, 1})));
  const auto z10 = Pir::from_modulus(10);
  CHECK(nsc_via_residue_fields(from_integers(z10, 2, 2, {1, 1, 0, 1})));

  // the two routes agree on random matrices over every test ring
  SplitMix64 rng(77);
  for (const auto& ring : matrix_test_rings()) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = 1 + rng.next() % 3;
      const std::size_t l = m + rng.next() % 2;
      const RingMatrix a = random_matrix(rng, ring, m, l);
      CHECK(is_nsc(a).ok == nsc_via_residue_fields(a));
    }
  }
}

TEST_CASE("inverse examples and exactness") {
  const auto z4 = Pir::from_modulus(4);
  const RingMatrix a = from_integers(z4, 2, 2, {1, 1, 0, 1});
  const RingMatrix ainv = inverse(a);
  CHECK(ainv == from_integers(z4, 2, 2, {1, 3, 0, 1}));
  CHECK(a.mul(ainv) == RingMatrix::identity(z4, 2));

  CHECK(inverse(RingMatrix::identity(z4, 3)) == RingMatrix::identity(z4, 3));
  CHECK(error_of([&] { inverse(from_integers(z4, 2, 2, {2, 0, 0, 1})); }) ==
        Errc::SingularMatrix);

  SplitMix64 rng(5);
  for (const auto& ring : matrix_test_rings()) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng.next() % 3;
      const RingMatrix m = random_matrix(rng, ring, n, n);
      if (!ring->is_unit(det(m))) continue;
      const RingMatrix minv = inverse(m);
      CHECK(m.mul(minv) == RingMatrix::identity(ring, n));
      CHECK(minv.mul(m) == RingMatrix::identity(ring, n));
    }
  }
}

TEST_CASE("reversal matrix is an involution") {
  const auto z6 = Pir::from_modulus(6);
  CHECK(RingMatrix::reversal(z6, 2) == from_integers(z6, 2, 2, {0, 1, 1, 0}));
  CHECK(RingMatrix::reversal(z6, 1) == from_integers(z6, 1, 1, {1}));
  const RingMatrix j3 = RingMatrix::reversal(z6, 3);
  CHECK(j3.mul(j3) == RingMatrix::identity(z6, 3));
}

TEST_CASE("cput_check examples") {
  const auto z5 = Pir::from_modulus(5);
  const auto id_perm = cput_check(from_integers(z5, 2, 3, {1, 1, 1, 0, 1, 2}));
  REQUIRE(id_perm.has_value());
  CHECK(*id_perm == std::vector<std::size_t>{0, 1, 2});

  const auto z6 = Pir::from_modulus(6);
  const auto swapped = cput_check(from_integers(z6, 2, 2, {1, 1, 5, 0}));
  REQUIRE(swapped.has_value());
  CHECK(*swapped == std::vector<std::size_t>{1, 0});

  CHECK_FALSE(cput_check(from_integers(z6, 2, 2, {1, 1, 4, 5})).has_value());
}

TEST_CASE("cput_check is sound and complete") {
  SplitMix64 rng(123);
  for (const auto& ring : matrix_test_rings()) {
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t m = 1 + rng.next() % 3;
      const std::size_t l = m + rng.next() % 3;
      if (l > 5) continue;
      // sparse matrices so triangular shapes actually occur
      std::vector<Elem> entries(m * l);
      for (Elem& x : entries) {
        x = (rng.next() % 3 == 0) ? 0 : rng.next() % ring->size();
      }
      const RingMatrix a(ring, m, l, entries);
      const auto perm = cput_check(a);
      CHECK(perm.has_value() == cput_brute_force(a));
      if (perm) {
        const RingMatrix b = a.permute_columns(*perm);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < i; ++j) {
            CHECK(b.at(i, j) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("build_nsc") {
  const auto z6 = Pir::from_modulus(6);
  CHECK(build_nsc(z6, 2, 2) == from_integers(z6, 2, 2, {1, 1, 0, 1}));
  CHECK(error_of([&] { build_nsc(z6, 2, 3); }) == Errc::InfeasibleShape);

  const auto z5 = Pir::from_modulus(5);
  const RingMatrix v = build_nsc(z5, 3, 3);
  CHECK(v == from_integers(z5, 3, 3, {1, 1, 1, 0, 1, 2, 0, 1, 4}));
  CHECK(is_nsc(v).ok);

  // all-ones row is NSC for any width
  const RingMatrix ones = build_nsc(z6, 1, 5);
  CHECK(is_nsc(ones).ok);

  for (const auto& ring : matrix_test_rings()) {
    const std::size_t minq = static_cast<std::size_t>(ring->min_q());
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t l = m; l <= minq + 2; ++l) {
        const bool feasible = (m == 1) || l <= minq;
        if (feasible) {
          CHECK(is_nsc(build_nsc(ring, m, l)).ok);
        } else {
          CHECK(error_of([&] { build_nsc(ring, m, l); }) ==
                Errc::InfeasibleShape);
        }
      }
    }
  }
}

TEST_CASE("NSC is preserved by column permutations") {
  SplitMix64 rng(9);
  for (const auto& ring : matrix_test_rings()) {
    const std::size_t minq = static_cast<std::size_t>(ring->min_q());
    const std::size_t m = std::min<std::size_t>(2, minq);
    const std::size_t l = minq;
    const RingMatrix a = build_nsc(ring, m, l);
    std::vector<std::size_t> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
      for (std::size_t i = l; i-- > 1;) {
        std::swap(perm[i], perm[rng.next() % (i + 1)]);
      }
      CHECK(is_nsc(a.permute_columns(perm)).ok);
    }
  }
}

TEST_CASE("J (A^-1)^T of a square NSC matrix is NSC") {
  SplitMix64 rng(31);
  for (const auto& ring : matrix_test_rings()) {
    const std::size_t minq = static_cast<std::size_t>(ring->min_q());
    for (std::size_t m = 1; m <= std::min<std::size_t>(3, minq); ++m) {
      for (int trial = 0; trial < 25; ++trial) {
        const RingMatrix a = random_matrix(rng, ring, m, m);
        if (!is_nsc(a).ok) continue;
        const RingMatrix jat =
            RingMatrix::reversal(ring, m).mul(inverse(a).transpose());
        CHECK(is_nsc(jat).ok);
      }
    }
  }
}

TEST_CASE("upper_triangularize keeps NSC and yields a C1 witness") {
  const auto z5 = Pir::from_modulus(5);
  const RingMatrix a = from_integers(z5, 3, 3, {1, 1, 1, 1, 2, 3, 1, 4, 4});
  REQUIRE(is_nsc(a).ok);
  const RingMatrix u = upper_triangularize(a);
  CHECK(is_nsc(u).ok);
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) CHECK(u.at(i, j) == 0);
  }
  CHECK(cput_check(u).has_value());
}
