// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <functional>

#include "mpchom/campaign.hpp"
#include "mpchom/errors.hpp"
#include "mpchom/parse.hpp"

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

}  // namespace

TEST_CASE("ring grammar") {
  CHECK(parse_ring("Z6")->describe() == "Z6");
  CHECK(parse_ring("z6")->signature() == "Z2 x Z3");
  CHECK(parse_ring("Z4 x Z9")->signature() == "Z4 x Z9");
  CHECK_FALSE(parse_ring("Z4 x Z9")->modulus().has_value());
  CHECK(parse_ring("F4")->component(0).describe() == "F4");
  CHECK(parse_ring("Z2 x F4 x Z3")->signature() == "Z2 x Z3 x F4");
  CHECK(parse_ring("  z4X f25 ")->signature() == "Z4 x F25");

  CHECK(error_of([] { parse_ring(""); }) == Errc::Parse);
  CHECK(error_of([] { parse_ring("Q7"); }) == Errc::Parse);
  CHECK(error_of([] { parse_ring("Zx"); }) == Errc::Parse);
  CHECK(error_of([] { parse_ring("Z1"); }) == Errc::ModulusTooSmall);
  // composite moduli are CRT rings only when they stand alone
  CHECK(error_of([] { parse_ring("Z12 x Z5"); }) == Errc::Parse);
  CHECK(error_of([] { parse_ring("F6"); }) == Errc::Parse);
  CHECK(error_of([] { parse_ring("F49"); }) == Errc::MissingPolynomial);
}

TEST_CASE("element serialization follows provenance") {
  const auto z6 = parse_ring("Z6");
  CHECK(element_from_json(*z6, Json(4)) == z6->from_integer(4));
  CHECK(element_to_json(*z6, z6->from_integer(4)) == Json(4));
  CHECK(error_of([&] { element_from_json(*z6, Json(6)); }) == Errc::OutOfRange);
  CHECK(error_of([&] { element_from_json(*z6, Json(-1)); }) ==
        Errc::OutOfRange);

  // explicit products keep the user's factor order in element arrays
  const auto ring = parse_ring("Z9 x Z4");
  const Json j = Json::array({5, 3});  // 5 in Z9, 3 in Z4
  const Elem x = element_from_json(*ring, j);
  CHECK(ring->part(x, 0) == 3);  // canonical slot 0 is Z4
  CHECK(ring->part(x, 1) == 5);
  CHECK(element_to_json(*ring, x) == j);

  // field factors use coefficient arrays
  const auto mixed = parse_ring("Z2 x F4");
  const Json jm = Json::array({1, Json::array({1, 1})});  // (1, a + 1)
  const Elem y = element_from_json(*mixed, jm);
  CHECK(mixed->part(y, 0) == 1);
  CHECK(mixed->part(y, 1) == 3);
  CHECK(element_to_json(*mixed, y) == jm);

  CHECK(error_of([&] { element_from_json(*mixed, Json(3)); }) == Errc::Parse);
}

TEST_CASE("matrix and code round trips") {
  const auto z6 = parse_ring("Z6");
  const Json mj = parse_json_text("[[1,1],[4,5]]");
  const RingMatrix a = matrix_from_json(z6, mj);
  CHECK(a.rows() == 2);
  CHECK(matrix_to_json(a) == mj);
  CHECK(error_of([&] { matrix_from_json(z6, parse_json_text("[[1],[2,3]]")); }) ==
        Errc::Parse);

  const Json cj = parse_json_text(
      R"({"length": 1, "kind": "linear", "generators": [[3]]})");
  const Code c = code_from_json(z6, cj);
  CHECK(c.linear());
  CHECK(c.size() == 2);
  const Json back = code_to_json(c);
  CHECK(back["length"] == 1);
  CHECK(back["kind"] == "linear");
  CHECK(back["generators"] == Json::array({Json::array({3})}));

  const Json ce = parse_json_text(
      R"({"length": 2, "kind": "explicit", "words": [[0,0],[1,5]]})");
  CHECK_FALSE(code_from_json(z6, ce).linear());
  CHECK(error_of([&] {
          code_from_json(z6, parse_json_text(R"({"length": 1})"));
        }) == Errc::Parse);
  CHECK(error_of([&] {
          code_from_json(
              z6, parse_json_text(
                      R"({"length": 2, "kind": "linear", "generators": [[1]]})"));
        }) == Errc::LengthMismatch);
}

TEST_CASE("random elements survive a serialization round trip") {
  SplitMix64 rng(2024);
  for (const char* spec : {"Z6", "Z12", "Z4 x Z9", "Z2 x F4", "F9", "Z9 x Z4"}) {
    const auto ring = parse_ring(spec);
    for (int trial = 0; trial < 50; ++trial) {
      const Elem x = rng.next() % ring->size();
      CHECK(element_from_json(*ring, element_to_json(*ring, x)) == x);
    }
  }
}

TEST_CASE("json parse errors carry Errc::Parse") {
  CHECK(error_of([] { parse_json_text("[1, 2"); }) == Errc::Parse);
  CHECK(error_of([] { parse_json_text("not json"); }) == Errc::Parse);
}

TEST_CASE("rational strings") {
  CHECK(rat_to_string(Rat(3, 2)) == "3/2");
  CHECK(rat_to_string(Rat(4, 2)) == "2");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_from_string("3/2") == Rat(3, 2));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(error_of([] { rat_from_string("a/b"); }) == Errc::Parse);
  CHECK(error_of([] { rat_from_string("1/0"); }) == Errc::Parse);
}

TEST_CASE("report serialization carries the contract fields") {
  const auto z6 = parse_ring("Z6");
  const Counterexample ce = build_counterexample(z6);
  const Json j = counterexample_to_json(ce);
  CHECK(j["d_h"] == "1");
  CHECK(j["bound"] == "3/2");
  CHECK(j["witness"] == Json::array({1, 5}));
  CHECK(j["violated"] == true);
  const Json& rep = j["report"];
  for (const char* key : {"d_h", "bound", "hypothesis_ok", "bound_holds", "c1",
                          "c2", "equality", "witness"}) {
    CHECK(rep.contains(key));
  }
}
