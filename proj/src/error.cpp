#include "monocurve/error.hpp"

namespace monocurve {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NonPositiveGenerator: return "NonPositiveGenerator";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NotInSemigroup: return "NotInSemigroup";
    case Errc::TypeUndefinedForN: return "TypeUndefinedForN";
    case Errc::ElementNotInSemigroup: return "ElementNotInSemigroup";
    case Errc::NotMinimalArithmetic: return "NotMinimalArithmetic";
    case Errc::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case Errc::TooShort: return "TooShort";
    case Errc::InputTooLarge: return "InputTooLarge";
    case Errc::NegativeCoordinate: return "NegativeCoordinate";
    case Errc::CmNotAssumed: return "CmNotAssumed";
    case Errc::SearchCapExceeded: return "SearchCapExceeded";
    case Errc::InvalidPair: return "InvalidPair";
    case Errc::PTooSmall: return "PTooSmall";
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BoxOverflow: return "BoxOverflow";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_limit_error(Errc code) noexcept {
  return code == Errc::SearchCapExceeded || code == Errc::BoxOverflow ||
         code == Errc::ResourceLimit || code == Errc::Overflow;
}

}  // namespace monocurve
