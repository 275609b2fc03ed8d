#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftcat {

enum class ErrorCode {
  InvalidInput,
  NonSquare,
  NegativeEntry,
  EigenspaceDimensionNotOne,
  NotAnEigenvalue,
  GeneratorMismatch,
  DivisionByZero,
  DegreeTooLarge,
  LengthMismatch,
  NotTransitive,
  IndexOutOfRange,
  InconsistentData,
  Ambiguous,
  CharacteristicMismatch,
  ImageCartanUnavailable,
  NotSurjective,
  NotASubring,
  FieldEmbeddingFailed,
  RankTooLarge,
  BadParameter,
  NotPrime,
  UnsupportedGroup,
  DimensionOverflow,
  InconsistentRelations,
  NotASubgroup,
  CocycleInvalid,
  CharacteristicTwo,
  AsymmetricForm,
  BadDivisor,
  CharacteristicTooSmall,
};

std::string_view error_name(ErrorCode code);

// Resource caps map to a distinct CLI exit status.
bool is_resource_cap(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::EigenspaceDimensionNotOne: return "EigenspaceDimensionNotOne";
    case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorCode::GeneratorMismatch: return "GeneratorMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InconsistentData: return "InconsistentData";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::ImageCartanUnavailable: return "ImageCartanUnavailable";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotASubring: return "NotASubring";
    case ErrorCode::FieldEmbeddingFailed: return "FieldEmbeddingFailed";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::InconsistentRelations: return "InconsistentRelations";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::CocycleInvalid: return "CocycleInvalid";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::AsymmetricForm: return "AsymmetricForm";
    case ErrorCode::BadDivisor: return "BadDivisor";
    case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
  }
  return "Unknown";
}

inline bool is_resource_cap(ErrorCode code) {
  return code == ErrorCode::DegreeTooLarge || code == ErrorCode::DimensionOverflow ||
         code == ErrorCode::RankTooLarge;
}

}  // namespace ftcat
