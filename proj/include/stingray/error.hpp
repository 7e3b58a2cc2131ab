#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stingray {

/// Failure categories raised by the library. Each public operation documents
/// which of these it can produce.
enum class ErrorCode {
  InvalidArgument,
  // ffield
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldMismatch,
  DivisionByZero,
  NoEmbedding,
  FieldTooLarge,
  // fpoly
  ZeroPolynomial,
  CharacteristicDividesR,
  // fmatrix
  DimensionMismatch,
  Singular,
  NotSquare,
  NotInvariant,
  // ppd
  NotCoprime,
  TooLarge,
  CompositeQ,
  // cyclo
  MismatchedR,
  NonUnit,
  NoSolution,
  UnsupportedR,
  NotRational,
  // classify
  NoPpdPrime,
  NoUnimodularFactor,
  OrderMismatch,
  CharacteristicOrder,
  // groups
  DegreeTooSmall,
  BadTwist,
  CharTooSmallForSymcube,
  OddDimensionSymplectic,
  ActionTooLarge,
  ZeroVector,
  // harness
  ParseError,
  SingularGenerator,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace stingray
