#pragma once

#include "grossone/exp_measure.hpp"
#include "grossone/gross_poly.hpp"

#include <compare>
#include <string>
#include <variant>

namespace grossone {

/// A gross-polynomial or an exponential measure under a single total order.
///
/// An ExpMeasure without any ① dependence is stored as the rational it
/// equals, so the Exp alternative always has some nonzero gross exponent.
class GrossValue {
 public:
  GrossValue() = default;
  GrossValue(GrossPolynomial p) : repr_(std::move(p)) {}  // NOLINT
  GrossValue(const Rational& r) : repr_(GrossPolynomial(r)) {}  // NOLINT
  GrossValue(int r) : repr_(GrossPolynomial(r)) {}  // NOLINT
  GrossValue(const ExpMeasure& e);  // NOLINT: normalizes finite measures

  bool is_poly() const { return std::holds_alternative<GrossPolynomial>(repr_); }
  bool is_exp() const { return std::holds_alternative<ExpMeasure>(repr_); }
  const GrossPolynomial& poly() const { return std::get<GrossPolynomial>(repr_); }
  const ExpMeasure& exp() const { return std::get<ExpMeasure>(repr_); }

  int sign() const;
  bool is_finite() const { return is_poly() && poly().is_finite(); }

  std::string to_string(const FormatOptions& opts = {}) const;

  friend bool operator==(const GrossValue&, const GrossValue&) = default;

 private:
  std::variant<GrossPolynomial, ExpMeasure> repr_;
};

std::strong_ordering value_compare(const GrossValue& a, const GrossValue& b);

/// Throws MixedScaleAddition unless both are polynomials or both are
/// measures whose ratio is a finite rational.
GrossValue value_add(const GrossValue& a, const GrossValue& b);
/// As value_add; additionally Unrepresentable when a measure difference
/// would be negative.
GrossValue value_sub(const GrossValue& a, const GrossValue& b);
GrossValue value_neg(const GrossValue& a);
/// Measures absorb positive finite rationals; other mixed products throw
/// Unrepresentable.
GrossValue value_mul(const GrossValue& a, const GrossValue& b);
GrossValue value_div(const GrossValue& a, const GrossValue& b);
/// base^exponent. Routes a positive rational to a gross-linear power into
/// exp_make; integer powers of polynomials and measures stay in kind.
GrossValue value_pow(const GrossValue& base, const GrossValue& exponent);

/// Exact value with ① := m (m >= 1 for measures).
Rational value_eval_at(const GrossValue& a, const BigInt& m);

/// Gross-linear view of a value, or NotGrossLinear.
GrossLinear require_linear(const GrossValue& v, const char* what);

const char* to_string(std::strong_ordering ord);

}  // namespace grossone
