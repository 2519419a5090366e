#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mathbook {

/// Domain failures. The CLI prints name(kind) on stderr, so the enumerator
/// spelling is part of the external interface.
enum class ErrorKind {
  InvalidModulus,
  InvalidInput,
  EmptyRange,
  UnsupportedCriterion,
  ParseError,
  InvalidSelection,
  InvalidProbability,
  InvalidCount,
  InvalidDistribution,
  DimensionMismatch,
  NonSquare,
  IndexOutOfRange,
  InvalidIncidence,
  InsufficientPoints,
  SingularNormalEquations,
  NonPositive,
  DivisionByZeroPolynomial,
  BothZero,
  NotQuadratic,
  DuplicateAbscissa,
  LengthMismatch,
  NotPrime,
  BadExponent,
  CharOutOfRange,
  NonAlphabetic,
  NonInvertibleA,
  Degenerate,
  NonInvertibleKey,
  DivisionByZero,
  ZeroInput,
  EmptyList,
  InvalidCircuit,
  OutOfRange,
  WindExceedsTas,
  NotAConic,
  NonBinary,
  BadRectangle,
  BadT,
  MalformedPgm,
  // Reported by the CLI when a library call returns an absent result.
  NotInvertible,
  Singular,
  Inconsistent,
  Underdetermined,
  Uncorrectable,
};

std::string_view name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& detail = {});

}  // namespace mathbook
