#pragma once

#include <stdexcept>
#include <string>

namespace dworkgal {

// Every failure mode raised by the library. Codes in the "invalid input /
// bad reduction" group map to CLI exit code 2, everything else to 1.
enum class ErrorCode {
  ZeroInput,
  DependentClasses,
  LambdaSingular,
  DivisionByZero,
  NotEliminable,
  EvenOrCompositeModulus,
  DenominatorDivisible,
  BadReduction,
  EvenCharacteristic,
  LambdaZero,
  RamifiedPrime,
  PrimeExcluded,
  IdentityViolated,
  RepresentativeAmbiguous,
  SignedInput,
  NonIntegralMultiplicity,
  RelationViolated,
  IsometryViolated,
  IncompleteDecomposition,
  ImageNotFound,
  RootVerificationFailed,
  SquareCompletionFailed,
  SameLine,
  UnsupportedInput,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // True for errors caused by the input (rejected lambda, bad prime, ...)
  // as opposed to internal invariant violations.
  bool is_input_error() const {
    switch (code_) {
      case ErrorCode::ZeroInput:
      case ErrorCode::DependentClasses:
      case ErrorCode::LambdaSingular:
      case ErrorCode::DivisionByZero:
      case ErrorCode::NotEliminable:
      case ErrorCode::EvenOrCompositeModulus:
      case ErrorCode::DenominatorDivisible:
      case ErrorCode::BadReduction:
      case ErrorCode::EvenCharacteristic:
      case ErrorCode::LambdaZero:
      case ErrorCode::RamifiedPrime:
      case ErrorCode::PrimeExcluded:
      case ErrorCode::SignedInput:
      case ErrorCode::SameLine:
      case ErrorCode::UnsupportedInput:
      case ErrorCode::ParseError:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DependentClasses: return "DependentClasses";
    case ErrorCode::LambdaSingular: return "LambdaSingular";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotEliminable: return "NotEliminable";
    case ErrorCode::EvenOrCompositeModulus: return "EvenOrCompositeModulus";
    case ErrorCode::DenominatorDivisible: return "DenominatorDivisible";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::LambdaZero: return "LambdaZero";
    case ErrorCode::RamifiedPrime: return "RamifiedPrime";
    case ErrorCode::PrimeExcluded: return "PrimeExcluded";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::RepresentativeAmbiguous: return "RepresentativeAmbiguous";
    case ErrorCode::SignedInput: return "SignedInput";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::IsometryViolated: return "IsometryViolated";
    case ErrorCode::IncompleteDecomposition: return "IncompleteDecomposition";
    case ErrorCode::ImageNotFound: return "ImageNotFound";
    case ErrorCode::RootVerificationFailed: return "RootVerificationFailed";
    case ErrorCode::SquareCompletionFailed: return "SquareCompletionFailed";
    case ErrorCode::SameLine: return "SameLine";
    case ErrorCode::UnsupportedInput: return "UnsupportedInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace dworkgal
