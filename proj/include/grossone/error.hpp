#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grossone {

enum class ErrorKind {
  DivisionByZero,
  NonIntegralPower,
  NotDivisible,
  NonPositiveBase,
  BaseTooLarge,
  ExponentTooLarge,
  MixedScaleAddition,
  Unrepresentable,
  NotGrossLinear,
  InvalidStart,
  InvalidSubstitution,
  NonPositiveCount,
  NonPositiveLength,
  LengthExceedsCap,
  RangeViolation,
  RangeViolationAtSubstitution,
  FractalMismatch,
  TypeMismatch,
  UnknownFunction,
  ArityMismatch,
};

const char* to_string(ErrorKind kind);

/// Half-open byte range [begin, end) into the source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ArithmeticError : public std::runtime_error {
 public:
  ArithmeticError(ErrorKind kind, const std::string& message,
                  std::optional<SourceSpan> span = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }
  const std::string& detail() const noexcept { return detail_; }

  ArithmeticError with_span(SourceSpan span) const;

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<SourceSpan> span_;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

}  // namespace grossone
