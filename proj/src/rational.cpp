// SPDX-License-Identifier: Apache-2.0
#include "mpchom/rational.hpp"

#include <charconv>

#include "mpchom/errors.hpp"

namespace mpchom {

std::string rat_to_string(const Rat& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

double rat_to_double(const Rat& value) {
  return static_cast<double>(value.numerator()) /
         static_cast<double>(value.denominator());
}

Rat rat_from_string(const std::string& text) {
  const auto parse_ll = [&](std::string_view sv) -> long long {
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), out);
    if (ec != std::errc() || ptr != sv.data() + sv.size()) {
      fail(Errc::Parse, "malformed rational '" + text + "'");
    }
    return out;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_ll(text));
  const long long num = parse_ll(std::string_view(text).substr(0, slash));
  const long long den = parse_ll(std::string_view(text).substr(slash + 1));
  if (den == 0) fail(Errc::Parse, "zero denominator in '" + text + "'");
  return Rat(num, den);
}

}  // namespace mpchom
