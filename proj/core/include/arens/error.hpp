#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arens {

enum class ErrorCode {
  UnknownCharacter,
  EmptyName,
  FlipArityMismatch,
  DimensionMismatch,
  ShapeMismatch,
  InvalidCayleyTable,
  AlgebraLawViolated,
  ConstraintViolated,
  InvalidFormat,
  InvalidConfig,
  UnknownFixture,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arens
