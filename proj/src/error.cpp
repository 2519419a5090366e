#include "mathbook/error.hpp"

namespace mathbook {

std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::UnsupportedCriterion: return "UnsupportedCriterion";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidSelection: return "InvalidSelection";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::InvalidCount: return "InvalidCount";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidIncidence: return "InvalidIncidence";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::SingularNormalEquations: return "SingularNormalEquations";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::CharOutOfRange: return "CharOutOfRange";
    case ErrorKind::NonAlphabetic: return "NonAlphabetic";
    case ErrorKind::NonInvertibleA: return "NonInvertibleA";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NonInvertibleKey: return "NonInvertibleKey";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::InvalidCircuit: return "InvalidCircuit";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::WindExceedsTas: return "WindExceedsTas";
    case ErrorKind::NotAConic: return "NotAConic";
    case ErrorKind::NonBinary: return "NonBinary";
    case ErrorKind::BadRectangle: return "BadRectangle";
    case ErrorKind::BadT: return "BadT";
    case ErrorKind::MalformedPgm: return "MalformedPgm";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::Uncorrectable: return "Uncorrectable";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(name(kind))
                                        : std::string(name(kind)) + ": " + detail),
      kind_(kind) {}

void raise(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace mathbook
