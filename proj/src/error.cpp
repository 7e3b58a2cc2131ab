#include "stingray/error.hpp"

namespace stingray {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::CharacteristicDividesR: return "CharacteristicDividesR";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CompositeQ: return "CompositeQ";
    case ErrorCode::MismatchedR: return "MismatchedR";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::UnsupportedR: return "UnsupportedR";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::NoPpdPrime: return "NoPpdPrime";
    case ErrorCode::NoUnimodularFactor: return "NoUnimodularFactor";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::CharacteristicOrder: return "CharacteristicOrder";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BadTwist: return "BadTwist";
    case ErrorCode::CharTooSmallForSymcube: return "CharTooSmallForSymcube";
    case ErrorCode::OddDimensionSymplectic: return "OddDimensionSymplectic";
    case ErrorCode::ActionTooLarge: return "ActionTooLarge";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
  }
  return "Unknown";
}

}  // namespace stingray
