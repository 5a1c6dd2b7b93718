// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_CODES_HPP
#define MPCHOM_CODES_HPP

#include <vector>

#include "mpchom/homweight.hpp"
#include "mpchom/pir.hpp"

namespace mpchom {

using Word = std::vector<Elem>;

/// A nonempty code over R^n: either an explicit word set or the span of a
/// generator list. Codes are materialized eagerly (word lists sorted and
/// deduplicated), with span enumeration guarded at 10^6 coefficient tuples.
class Code {
 public:
  static Code explicit_code(PirPtr ring, std::size_t length,
                            std::vector<Word> words);
  static Code linear_code(PirPtr ring, std::size_t length,
                          std::vector<Word> generators);

  const PirPtr& ring() const { return ring_; }
  std::size_t length() const { return n_; }
  bool linear() const { return linear_; }
  std::size_t size() const { return words_.size(); }

  /// Sorted, deduplicated word set.
  const std::vector<Word>& words() const { return words_; }
  /// Generator list for span-built codes; empty for explicit codes and for
  /// codes whose word set is authoritative (e.g. duals).
  const std::vector<Word>& generators() const { return generators_; }
  /// Generators when available, else the full word set (still a valid
  /// generating set for a linear code).
  const std::vector<Word>& spanning_set() const {
    return generators_.empty() ? words_ : generators_;
  }

  bool contains(const Word& w) const;

  /// Internal constructor for codes whose words are known closed already
  /// (duals, matrix products of linear codes).
  static Code from_materialized(PirPtr ring, std::size_t length, bool linear,
                                std::vector<Word> sorted_words,
                                std::vector<Word> generators);

 private:
  Code() = default;

  PirPtr ring_;
  std::size_t n_ = 0;
  bool linear_ = false;
  std::vector<Word> generators_;
  std::vector<Word> words_;
};

enum class DistanceKind { Homogeneous, Hamming };

struct DistanceResult {
  Rat value;
  Word witness_a;  // a minimizing pair: d(witness_a, witness_b) == value
  Word witness_b;
};

/// Minimum distance over distinct pairs; for linear codes computed as the
/// minimum weight over nonzero words (the difference set of a linear code
/// is the code itself). Requires at least two words.
DistanceResult min_distance(DistanceKind kind, const Code& code);

/// Brute-force dual over R^n: all words orthogonal to every codeword under
/// the standard bilinear form. Linear codes only; |R|^n guarded at 10^6.
Code dual(const Code& code);

/// True iff each code contains the next (materialized set inclusion).
bool is_nested(const std::vector<Code>& chain);

}  // namespace mpchom

#endif
