// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_PARSE_HPP
#define MPCHOM_PARSE_HPP

#include <string>

#include <json.hpp>

#include "mpchom/codes.hpp"
#include "mpchom/mpc.hpp"
#include "mpchom/ring_matrix.hpp"

namespace mpchom {

/// Key order is part of the report contract (byte-identical reruns).
using Json = nlohmann::ordered_json;

/// Ring grammar, case-insensitive:
///   "Z<N>"              Z_N, CRT-decomposed into chain rings
///   "F<q>"              the Galois field GF(q)
///   "Z4 x Z9 x F4"      explicit product; each factor must be a chain ring
/// Elements of a "Z<N>" ring serialize as integers in [0, N); elements of
/// any other ring serialize as arrays with one entry per factor in the
/// order the user wrote them (integers for Z_{p^e}, coefficient arrays for
/// fields).
PirPtr parse_ring(const std::string& text);

Elem element_from_json(const Pir& ring, const Json& j);
Json element_to_json(const Pir& ring, Elem x);

Word word_from_json(const Pir& ring, const Json& j);
Json word_to_json(const Pir& ring, const Word& w);

RingMatrix matrix_from_json(PirPtr ring, const Json& j);
Json matrix_to_json(const RingMatrix& a);

/// {"length": n, "kind": "linear"|"explicit", "generators"|"words": [...]}
Code code_from_json(PirPtr ring, const Json& j);
std::vector<Code> codes_from_json(PirPtr ring, const Json& j);
Json code_to_json(const Code& code);

Json rat_to_json(const Rat& value);  // exact string, e.g. "3/2"

Json mpc_report_to_json(const Pir& ring, const MpcReport& report);
Json dual_report_to_json(const DualReport& report);
Json counterexample_to_json(const Counterexample& ce);
Json weight_table_to_json(const Pir& ring);
Json nsc_result_to_json(const Pir& ring, const NscResult& result);

/// Parse a JSON document with parse errors surfaced as
/// RingError(Errc::Parse) carrying the byte position.
Json parse_json_text(const std::string& text);

}  // namespace mpchom

#endif
