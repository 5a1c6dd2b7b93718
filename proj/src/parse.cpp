// SPDX-License-Identifier: Apache-2.0
#include "mpchom/parse.hpp"

#include <algorithm>
#include <cctype>

#include "mpchom/errors.hpp"

namespace mpchom {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::uint64_t parse_number(const std::string& token, std::size_t from) {
  if (from >= token.size()) {
    fail(Errc::Parse, "ring token '" + token + "' is missing its size");
  }
  std::uint64_t value = 0;
  for (std::size_t i = from; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
      fail(Errc::Parse, "ring token '" + token + "' is not of the form Z<N> or F<q>");
    }
    if (value > 2'000'000'000'000ULL) {
      fail(Errc::ModulusTooLarge, "ring size in '" + token + "' is too large");
    }
    value = value * 10 + static_cast<std::uint64_t>(token[i] - '0');
  }
  return value;
}

// N = p^e for a single prime p, or nothing.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (n != 1) return std::nullopt;
      return std::make_pair(d, e);
    }
  }
  return std::make_pair(n, 1u);  // prime
}

ChainRing chain_ring_from_token(const std::string& token) {
  const char head = static_cast<char>(
      std::tolower(static_cast<unsigned char>(token[0])));
  const std::uint64_t value = parse_number(token, 1);
  if (head == 'z') {
    const auto pe = prime_power(value);
    if (!pe) {
      fail(Errc::Parse, "'" + token +
                            "' is not a chain ring (not a prime power); "
                            "a composite Z<N> is only valid on its own");
    }
    return ChainRing::integers_mod(pe->first, pe->second);
  }
  if (head == 'f') {
    const auto pr = prime_power(value);
    if (!pr) {
      fail(Errc::Parse, "'" + token + "' is not a prime-power field size");
    }
    if (pr->second == 1) return ChainRing::integers_mod(pr->first, 1);
    return ChainRing::galois_field(pr->first,
                                   static_cast<unsigned>(pr->second));
  }
  fail(Errc::Parse, "ring token '" + token + "' must start with Z or F");
}

const ChainRing& component_for_input_slot(const Pir& ring, std::size_t slot) {
  return ring.component(ring.sort_permutation()[slot]);
}

std::int64_t get_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    fail(Errc::Parse, std::string(what) + " must be an integer");
  }
  return j.get<std::int64_t>();
}

}  // namespace

PirPtr parse_ring(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char ch : text) {
    if (ch == 'x' || ch == 'X' || ch == '*') {
      tokens.push_back(trim(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  tokens.push_back(trim(current));
  for (const std::string& t : tokens) {
    if (t.empty()) fail(Errc::Parse, "empty factor in ring spec '" + text + "'");
  }

  if (tokens.size() == 1) {
    const std::string& token = tokens[0];
    const char head = static_cast<char>(
        std::tolower(static_cast<unsigned char>(token[0])));
    if (head == 'z') {
      return Pir::from_modulus(parse_number(token, 1));
    }
    return Pir::product({chain_ring_from_token(token)});
  }
  std::vector<ChainRing> components;
  components.reserve(tokens.size());
  for (const std::string& t : tokens) {
    components.push_back(chain_ring_from_token(t));
  }
  return Pir::product(std::move(components));
}

Elem element_from_json(const Pir& ring, const Json& j) {
  if (ring.modulus()) {
    const std::int64_t v = get_integer(j, "element of a Z_N ring");
    if (v < 0) fail(Errc::OutOfRange, "element value must be non-negative");
    return ring.from_integer(static_cast<std::uint64_t>(v));
  }
  if (!j.is_array() || j.size() != ring.component_count()) {
    fail(Errc::Parse, "element must be an array with one entry per factor");
  }
  std::vector<ChainVal> parts(ring.component_count(), 0);
  for (std::size_t slot = 0; slot < j.size(); ++slot) {
    const std::size_t canonical = ring.sort_permutation()[slot];
    const ChainRing& comp = ring.component(canonical);
    const Json& entry = j[slot];
    if (comp.r() == 1) {
      const std::int64_t v = get_integer(entry, "chain-ring entry");
      if (v < 0 || static_cast<std::uint64_t>(v) >= comp.size()) {
        fail(Errc::OutOfRange, "entry outside [0, " +
                                   std::to_string(comp.size()) + ")");
      }
      parts[canonical] = static_cast<ChainVal>(v);
    } else {
      if (!entry.is_array() || entry.size() != comp.r()) {
        fail(Errc::Parse, "field entry must be a coefficient array of length " +
                              std::to_string(comp.r()));
      }
      ChainVal packed = 0, scale = 1;
      for (std::size_t i = 0; i < entry.size(); ++i) {
        const std::int64_t c = get_integer(entry[i], "field coefficient");
        if (c < 0 || static_cast<std::uint64_t>(c) >= comp.p()) {
          fail(Errc::OutOfRange, "coefficient outside [0, p)");
        }
        packed += static_cast<ChainVal>(c) * scale;
        scale *= comp.p();
      }
      parts[canonical] = packed;
    }
  }
  return ring.from_parts(parts);
}

Json element_to_json(const Pir& ring, Elem x) {
  if (ring.modulus()) return Json(ring.to_integer(x));
  Json out = Json::array();
  for (std::size_t slot = 0; slot < ring.component_count(); ++slot) {
    const std::size_t canonical = ring.sort_permutation()[slot];
    const ChainRing& comp = ring.component(canonical);
    const ChainVal part = ring.part(x, canonical);
    if (comp.r() == 1) {
      out.push_back(part);
    } else {
      Json coeffs = Json::array();
      ChainVal rest = part;
      for (unsigned i = 0; i < comp.r(); ++i) {
        coeffs.push_back(rest % comp.p());
        rest /= comp.p();
      }
      out.push_back(std::move(coeffs));
    }
  }
  return out;
}

Word word_from_json(const Pir& ring, const Json& j) {
  if (!j.is_array() || j.empty()) {
    fail(Errc::Parse, "word must be a nonempty array");
  }
  Word w;
  w.reserve(j.size());
  for (const Json& entry : j) w.push_back(element_from_json(ring, entry));
  return w;
}

Json word_to_json(const Pir& ring, const Word& w) {
  Json out = Json::array();
  for (const Elem x : w) out.push_back(element_to_json(ring, x));
  return out;
}

RingMatrix matrix_from_json(PirPtr ring, const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    fail(Errc::Parse, "matrix must be a nonempty array of nonempty rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != cols) {
      fail(Errc::Parse, "matrix rows must all have the same length");
    }
    for (const Json& entry : row) {
      entries.push_back(element_from_json(*ring, entry));
    }
  }
  return RingMatrix(std::move(ring), rows, cols, std::move(entries));
}

Json matrix_to_json(const RingMatrix& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < a.cols(); ++jj) {
      row.push_back(element_to_json(*a.ring(), a.at(i, jj)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Code code_from_json(PirPtr ring, const Json& j) {
  if (!j.is_object()) fail(Errc::Parse, "code must be a JSON object");
  if (!j.contains("length") || !j.contains("kind")) {
    fail(Errc::Parse, "code object needs 'length' and 'kind'");
  }
  const std::int64_t length = get_integer(j["length"], "code length");
  if (length < 1) fail(Errc::Parse, "code length must be >= 1");
  const std::string kind = j["kind"].is_string()
                               ? j["kind"].get<std::string>()
                               : std::string();
  const auto words_of = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
      fail(Errc::Parse, std::string("code object needs a '") + key +
                            "' array for kind '" + kind + "'");
    }
    std::vector<Word> out;
    for (const Json& wj : j[key]) {
      Word w = word_from_json(*ring, wj);
      if (w.size() != static_cast<std::size_t>(length)) {
        fail(Errc::LengthMismatch, "word length does not match 'length'");
      }
      out.push_back(std::move(w));
    }
    return out;
  };
  if (kind == "linear") {
    return Code::linear_code(ring, static_cast<std::size_t>(length),
                             words_of("generators"));
  }
  if (kind == "explicit") {
    return Code::explicit_code(ring, static_cast<std::size_t>(length),
                               words_of("words"));
  }
  fail(Errc::Parse, "code kind must be 'linear' or 'explicit'");
}

std::vector<Code> codes_from_json(PirPtr ring, const Json& j) {
  if (!j.is_array() || j.empty()) {
    fail(Errc::Parse, "codes file must be a nonempty JSON array");
  }
  std::vector<Code> out;
  out.reserve(j.size());
  for (const Json& cj : j) out.push_back(code_from_json(ring, cj));
  return out;
}

Json code_to_json(const Code& code) {
  Json out = Json::object();
  out["length"] = code.length();
  out["kind"] = code.linear() ? "linear" : "explicit";
  const char* key = code.linear() ? "generators" : "words";
  const auto& list =
      code.linear() && !code.generators().empty() ? code.generators()
                                                  : code.words();
  Json words = Json::array();
  for (const Word& w : list) words.push_back(word_to_json(*code.ring(), w));
  out[key] = std::move(words);
  return out;
}

Json rat_to_json(const Rat& value) { return Json(rat_to_string(value)); }

Json mpc_report_to_json(const Pir& ring, const MpcReport& report) {
  Json out = Json::object();
  out["d_h"] = rat_to_string(report.d_h);
  out["d_h_decimal"] = rat_to_double(report.d_h);
  out["bound"] = rat_to_string(report.bound);
  out["bound_decimal"] = rat_to_double(report.bound);
  out["hypothesis_ok"] = report.hypothesis_ok;
  out["hypothesis_reason"] = report.hypothesis_reason;
  out["bound_holds"] = report.bound_holds;
  out["c1"] = report.c1;
  out["c2"] = report.c2;
  out["equality"] = report.equality;
  out["witness"] = Json::array(
      {word_to_json(ring, report.witness_a), word_to_json(ring, report.witness_b)});
  out["cardinality"] = report.cardinality;
  out["expected_cardinality"] = report.expected_cardinality;
  out["cardinality_ok"] = report.cardinality_ok;
  out["m"] = report.m;
  out["l"] = report.l;
  out["n"] = report.n;
  return out;
}

Json dual_report_to_json(const DualReport& report) {
  Json out = Json::object();
  out["bound_defined"] = report.bound_defined;
  out["dual_d_h"] = rat_to_string(report.dual_d_h);
  out["dual_d_h_decimal"] = rat_to_double(report.dual_d_h);
  out["dual_bound"] = rat_to_string(report.dual_bound);
  out["dual_bound_decimal"] = rat_to_double(report.dual_bound);
  out["set_equal"] = report.set_equal;
  out["reversed_inverse_nsc"] = report.reversed_inverse_nsc;
  out["hypothesis_ok"] = report.hypothesis_ok;
  out["c1"] = report.c1;
  out["c2"] = report.c2;
  out["bound_holds"] = report.bound_holds;
  out["equality"] = report.equality;
  out["dual_cardinality"] = report.dual_cardinality;
  out["cardinality_ok"] = report.cardinality_ok;
  return out;
}

Json counterexample_to_json(const Counterexample& ce) {
  const Pir& ring = *ce.a.ring();
  Json out = Json::object();
  out["ring"] = ring.describe();
  out["matrix"] = matrix_to_json(ce.a);
  Json codes = Json::array();
  for (const Code& c : ce.codes) codes.push_back(code_to_json(c));
  out["codes"] = std::move(codes);
  out["d_h"] = rat_to_string(ce.report.d_h);
  out["d_h_decimal"] = rat_to_double(ce.report.d_h);
  out["bound"] = rat_to_string(ce.report.bound);
  out["bound_decimal"] = rat_to_double(ce.report.bound);
  out["witness"] = word_to_json(ring, ce.witness);
  out["witness_weight"] = rat_to_string(ce.witness_weight);
  out["violated"] = !ce.report.bound_holds;
  out["report"] = mpc_report_to_json(ring, ce.report);
  return out;
}

Json weight_table_to_json(const Pir& ring) {
  const std::vector<Rat> table = weight_table(ring);
  Json out = Json::object();
  out["ring"] = ring.describe();
  out["size"] = ring.size();
  Json rows = Json::array();
  Rat sum(0);
  for (std::uint64_t k = 0; k < ring.size(); ++k) {
    // rows follow the serialized order: 0..N-1 for Z_N rings
    const Elem x = ring.modulus() ? ring.from_integer(k) : static_cast<Elem>(k);
    const Rat& w = table[static_cast<std::size_t>(x)];
    Json row = Json::object();
    row["element"] = element_to_json(ring, x);
    row["w_h"] = rat_to_string(w);
    row["decimal"] = rat_to_double(w);
    rows.push_back(std::move(row));
    sum += w;
  }
  out["weights"] = std::move(rows);
  out["sum"] = rat_to_string(sum);
  const WeightBounds b = weight_bounds(ring);
  out["bounds"] =
      Json::object({{"lower", rat_to_string(b.lower)},
                    {"upper", rat_to_string(b.upper)}});
  return out;
}

Json nsc_result_to_json(const Pir& ring, const NscResult& result) {
  (void)ring;
  Json out = Json::object();
  out["nsc"] = result.ok;
  if (result.failure) {
    out["failure"] = Json::object(
        {{"k", result.failure->k}, {"cols", result.failure->cols}});
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::Parse, e.what());
  }
}

}  // namespace mpchom
