// SPDX-License-Identifier: Apache-2.0
#include "mpchom/errors.hpp"

namespace mpchom {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::Ok: return "Ok";
    case Errc::Parse: return "Parse";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::UnsupportedGaloisRing: return "UnsupportedGaloisRing";
    case Errc::MissingPolynomial: return "MissingPolynomial";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::EmptyProduct: return "EmptyProduct";
    case Errc::ModulusTooSmall: return "ModulusTooSmall";
    case Errc::ModulusTooLarge: return "ModulusTooLarge";
    case Errc::NotAZnRing: return "NotAZnRing";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::TooLarge: return "TooLarge";
    case Errc::WideMatrix: return "WideMatrix";
    case Errc::BadIndex: return "BadIndex";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::InfeasibleShape: return "InfeasibleShape";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::NonlinearCode: return "NonlinearCode";
    case Errc::DegenerateCode: return "DegenerateCode";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotNsc: return "NotNsc";
    case Errc::HypothesisSatisfied: return "HypothesisSatisfied";
    case Errc::ConditionNotMet: return "ConditionNotMet";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace mpchom
