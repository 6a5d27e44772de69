#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lac {

enum class ErrorCode {
  Syntax,
  UnknownVariable,
  NegativeExponent,
  MissingCoordinate,
  Overflow,
  InvalidChart,
  DimensionMismatch,
  EmptyChart,
  JacobiViolation,
  AnchorNotMorphism,
  ChartMismatch,
  KindMismatch,
  NotPoisson,
  NotInvertible,
  WrongProvenance,
  Parse,
  Validation,
  UnknownName,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. Validation failures carry a witness:
// the basis indices involved (1-based, as printed) and the pretty-printed
// nonzero residual.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<int> witness = {}, std::string residual = {})
      : std::runtime_error(message),
        code_(code),
        witness_(std::move(witness)),
        residual_(std::move(residual)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }
  const std::string& residual() const noexcept { return residual_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
  std::string residual_;
};

}  // namespace lac
