#include "polyadica/error.hpp"

namespace polyadica {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotInCarrier: return "NotInCarrier";
    case ErrorCode::kNoMultiplicativeArity: return "NoMultiplicativeArity";
    case ErrorCode::kNoMatchingClass: return "NoMatchingClass";
    case ErrorCode::kTrivialSolution: return "TrivialSolution";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace polyadica
