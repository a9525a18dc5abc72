#include "grossone/error.hpp"

#include <sstream>

namespace grossone {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonIntegralPower: return "NonIntegralPower";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NonPositiveBase: return "NonPositiveBase";
    case ErrorKind::BaseTooLarge: return "BaseTooLarge";
    case ErrorKind::ExponentTooLarge: return "ExponentTooLarge";
    case ErrorKind::MixedScaleAddition: return "MixedScaleAddition";
    case ErrorKind::Unrepresentable: return "Unrepresentable";
    case ErrorKind::NotGrossLinear: return "NotGrossLinear";
    case ErrorKind::InvalidStart: return "InvalidStart";
    case ErrorKind::InvalidSubstitution: return "InvalidSubstitution";
    case ErrorKind::NonPositiveCount: return "NonPositiveCount";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::LengthExceedsCap: return "LengthExceedsCap";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::RangeViolationAtSubstitution: return "RangeViolationAtSubstitution";
    case ErrorKind::FractalMismatch: return "FractalMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorKind kind, const std::string& message,
                     const std::optional<SourceSpan>& span) {
  std::ostringstream out;
  out << to_string(kind) << ": " << message;
  if (span) out << " (at bytes " << span->begin << ".." << span->end << ")";
  return out.str();
}

std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::ostringstream out;
  out << "SyntaxError at byte " << offset << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out << (i + 1 == expected.size() ? " or " : ", ");
    out << expected[i];
  }
  out << ", found " << found;
  return out.str();
}

}  // namespace

ArithmeticError::ArithmeticError(ErrorKind kind, const std::string& message,
                                 std::optional<SourceSpan> span)
    : std::runtime_error(describe(kind, message, span)),
      kind_(kind),
      detail_(message),
      span_(span) {}

ArithmeticError ArithmeticError::with_span(SourceSpan span) const {
  return ArithmeticError(kind_, detail_, span);
}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : std::runtime_error(describe(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)),
      found_(found) {}

}  // namespace grossone
