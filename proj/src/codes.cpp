// SPDX-License-Identifier: Apache-2.0
#include "mpchom/codes.hpp"

#include <algorithm>

#include "mpchom/errors.hpp"

namespace mpchom {

namespace {

constexpr std::uint64_t kEnumerationGuard = 1'000'000ULL;
// pairwise scans are quadratic; nonlinear codes are kept desk-sized
constexpr std::size_t kPairwiseGuard = 4096;

void validate_words(const Pir& ring, std::size_t n,
                    const std::vector<Word>& words) {
  for (const Word& w : words) {
    if (w.size() != n) {
      fail(Errc::LengthMismatch, "word length does not match the code length");
    }
    for (const Elem x : w) {
      if (x >= ring.size()) fail(Errc::OutOfRange, "word entry out of range");
    }
  }
}

}  // namespace

Code Code::explicit_code(PirPtr ring, std::size_t length,
                         std::vector<Word> words) {
  if (length < 1) fail(Errc::InvalidArgument, "code length must be >= 1");
  if (words.empty()) {
    fail(Errc::InvalidArgument, "a code must contain at least one word");
  }
  validate_words(*ring, length, words);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  Code c;
  c.ring_ = std::move(ring);
  c.n_ = length;
  c.linear_ = false;
  c.words_ = std::move(words);
  return c;
}

Code Code::linear_code(PirPtr ring, std::size_t length,
                       std::vector<Word> generators) {
  if (length < 1) fail(Errc::InvalidArgument, "code length must be >= 1");
  validate_words(*ring, length, generators);
  const Pir& R = *ring;

  // span enumeration over all coefficient tuples
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (tuples > kEnumerationGuard / R.size()) {
      fail(Errc::EnumerationTooLarge,
           "span enumeration exceeds the 10^6 guard");
    }
    tuples *= R.size();
  }

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(tuples));
  std::vector<Elem> coeff(generators.size(), 0);
  while (true) {
    Word w(length, R.zero());
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (coeff[g] == 0) continue;
      for (std::size_t i = 0; i < length; ++i) {
        w[i] = R.add(w[i], R.mul(coeff[g], generators[g][i]));
      }
    }
    words.push_back(std::move(w));
    // mixed-radix increment
    std::size_t g = 0;
    while (g < coeff.size()) {
      if (++coeff[g] < R.size()) break;
      coeff[g] = 0;
      ++g;
    }
    if (g == coeff.size()) break;
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  Code c;
  c.ring_ = std::move(ring);
  c.n_ = length;
  c.linear_ = true;
  c.generators_ = std::move(generators);
  c.words_ = std::move(words);
  return c;
}

Code Code::from_materialized(PirPtr ring, std::size_t length, bool linear,
                             std::vector<Word> sorted_words,
                             std::vector<Word> generators) {
  if (sorted_words.empty()) {
    fail(Errc::InvalidArgument, "a code must contain at least one word");
  }
  Code c;
  c.ring_ = std::move(ring);
  c.n_ = length;
  c.linear_ = linear;
  c.words_ = std::move(sorted_words);
  c.generators_ = std::move(generators);
  return c;
}

bool Code::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

DistanceResult min_distance(DistanceKind kind, const Code& code) {
  const Pir& R = *code.ring();
  const WeightKind wk = (kind == DistanceKind::Homogeneous)
                            ? WeightKind::Homogeneous
                            : WeightKind::Hamming;
  const auto& words = code.words();
  const auto scaled = scaled_weight_table(R, wk);
  if (code.linear()) {
    const Word zero(code.length(), R.zero());
    const Word* best_word = nullptr;
    Rat best_value;
    if (scaled) {
      long long best = -1;
      for (const Word& w : words) {
        if (w == zero) continue;
        long long sum = 0;
        for (const Elem x : w) sum += scaled->values[x];
        if (best < 0 || sum < best) {
          best = sum;
          best_word = &w;
        }
      }
      if (best_word) best_value = scaled->unscale(best);
    } else {
      for (const Word& w : words) {
        if (w == zero) continue;
        const Rat value = word_weight(wk, R, w);
        if (!best_word || value < best_value) {
          best_value = value;
          best_word = &w;
        }
      }
    }
    if (!best_word) {
      fail(Errc::DegenerateCode, "linear code has no nonzero word");
    }
    return {best_value, *best_word, zero};
  }
  if (words.size() < 2) {
    fail(Errc::DegenerateCode, "minimum distance needs at least two words");
  }
  if (words.size() > kPairwiseGuard) {
    fail(Errc::EnumerationTooLarge,
         "pairwise distance scan over " + std::to_string(words.size()) +
             " words exceeds the guard");
  }
  DistanceResult best;
  bool found = false;
  if (scaled) {
    long long best_sum = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        long long sum = 0;
        for (std::size_t k = 0; k < words[i].size(); ++k) {
          sum += scaled->values[R.sub(words[i][k], words[j][k])];
        }
        if (best_sum < 0 || sum < best_sum) {
          best_sum = sum;
          bi = i;
          bj = j;
        }
      }
    }
    return {scaled->unscale(best_sum), words[bi], words[bj]};
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const Rat value = word_distance(wk, R, words[i], words[j]);
      if (!found || value < best.value) {
        best = {value, words[i], words[j]};
        found = true;
      }
    }
  }
  return best;
}

Code dual(const Code& code) {
  if (!code.linear()) {
    fail(Errc::NonlinearCode, "duals are defined here for linear codes only");
  }
  const Pir& R = *code.ring();
  const std::size_t n = code.length();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > kEnumerationGuard / R.size()) {
      fail(Errc::EnumerationTooLarge,
           "dual enumeration over |R|^n exceeds the 10^6 guard");
    }
    space *= R.size();
  }
  const auto& spanning = code.spanning_set();
  std::vector<Word> out;
  Word x(n, R.zero());
  std::uint64_t counter = 0;
  while (true) {
    bool orthogonal = true;
    for (const Word& g : spanning) {
      Elem dot = R.zero();
      for (std::size_t i = 0; i < n; ++i) {
        dot = R.add(dot, R.mul(x[i], g[i]));
      }
      if (dot != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) out.push_back(x);
    if (++counter == space) break;
    std::size_t i = 0;
    while (true) {
      if (++x[i] < R.size()) break;
      x[i] = 0;
      ++i;
    }
  }
  std::sort(out.begin(), out.end());
  return Code::from_materialized(code.ring(), n, true, std::move(out), {});
}

bool is_nested(const std::vector<Code>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    require_same_spec(*chain[i].ring(), *chain[i + 1].ring(), "nesting check");
    if (chain[i].length() != chain[i + 1].length()) {
      fail(Errc::LengthMismatch, "nesting check on codes of different length");
    }
    if (!std::includes(chain[i].words().begin(), chain[i].words().end(),
                       chain[i + 1].words().begin(),
                       chain[i + 1].words().end())) {
      return false;
    }
  }
  return true;
}

}  // namespace mpchom
