// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_RATIONAL_HPP
#define MPCHOM_RATIONAL_HPP

#include <boost/rational.hpp>
#include <string>

namespace mpchom {

// All weights and distances are exact; no floating point in the core.
using Rat = boost::rational<long long>;

/// Render as "a/b", or just "a" when the denominator is 1.
std::string rat_to_string(const Rat& value);

/// Decimal convenience rendering (reports carry both).
double rat_to_double(const Rat& value);

/// Parse "a/b" or "a". Throws RingError(Errc::Parse) on malformed input.
Rat rat_from_string(const std::string& text);

}  // namespace mpchom

#endif
