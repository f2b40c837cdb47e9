#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace areps {

enum class Errc {
  InvalidInput,
  ParseError,
  NotAssociative,
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  OrderLimitExceeded,
  NotAnAutomorphism,
  NotAnAction,
  NotIndexTwo,
  NotASubgroup,
  NotEven,
  HypothesisFailed,
  DivisionByZero,
  NotCoprime,
  NotRational,
  InternalVerificationFailed,
  GroupMismatch,
  NotAnInteger,
  ImpossiblePair,
  BlockInconsistency,
  SquareTheoremViolation,
  ConsistencyFailure,
  TheoremViolation,
  OracleMismatch,
  NotApplicable,
  OddPermutation,
  CriteriaMismatch,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ParseError: return "ParseError";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::OrderLimitExceeded: return "OrderLimitExceeded";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::NotIndexTwo: return "NotIndexTwo";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotEven: return "NotEven";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotRational: return "NotRational";
    case Errc::InternalVerificationFailed: return "InternalVerificationFailed";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotAnInteger: return "NotAnInteger";
    case Errc::ImpossiblePair: return "ImpossiblePair";
    case Errc::BlockInconsistency: return "BlockInconsistency";
    case Errc::SquareTheoremViolation: return "SquareTheoremViolation";
    case Errc::ConsistencyFailure: return "ConsistencyFailure";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::OddPermutation: return "OddPermutation";
    case Errc::CriteriaMismatch: return "CriteriaMismatch";
  }
  return "Unknown";
}

/// Every failure in the library surfaces as an Error carrying a code and a
/// message naming the witness (element, row, triple, class) where one exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string const &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace areps
