#include "arens/error.hpp"

namespace arens {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownCharacter: return "UnknownCharacter";
    case ErrorCode::EmptyName: return "EmptyName";
    case ErrorCode::FlipArityMismatch: return "FlipArityMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidCayleyTable: return "InvalidCayleyTable";
    case ErrorCode::AlgebraLawViolated: return "AlgebraLawViolated";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::InvalidFormat: return "InvalidFormat";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace arens
