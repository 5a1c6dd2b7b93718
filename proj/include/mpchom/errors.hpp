// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_ERRORS_HPP
#define MPCHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpchom {

/// Error categories surfaced by the library. The numeric values are stable
/// and mirrored one-to-one by the C API status codes.
enum class Errc : int {
  Ok = 0,
  Parse = 1,
  InvalidArgument = 2,
  CompositeCharacteristic = 3,
  ReduciblePolynomial = 4,
  UnsupportedGaloisRing = 5,
  MissingPolynomial = 6,
  SpecMismatch = 7,
  EmptyProduct = 8,
  ModulusTooSmall = 9,
  ModulusTooLarge = 10,
  NotAZnRing = 11,
  OutOfRange = 12,
  LengthMismatch = 13,
  NotSquare = 14,
  TooLarge = 15,
  WideMatrix = 16,
  BadIndex = 17,
  SingularMatrix = 18,
  InfeasibleShape = 19,
  EnumerationTooLarge = 20,
  NonlinearCode = 21,
  DegenerateCode = 22,
  ShapeMismatch = 23,
  NotNsc = 24,
  HypothesisSatisfied = 25,
  ConditionNotMet = 26,
  Internal = 27,
};

const char* errc_name(Errc code);

class RingError : public std::runtime_error {
 public:
  RingError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw RingError(code, message);
}

}  // namespace mpchom

#endif
