#pragma once

#include "grossone/gross_linear.hpp"
#include "grossone/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace grossone {

/// One term coeff·①^exponent.
struct GrossTerm {
  Rational coeff;
  Rational exponent;

  friend bool operator==(const GrossTerm&, const GrossTerm&) = default;
};

/// Finite sum of rational-coefficient powers of ①.
///
/// Canonical form: no zero coefficients, exponents strictly decreasing.
/// The empty term list is zero; a finite rational r is the single term
/// r·①^0. Every constructor canonicalizes, so equal values always have
/// identical term lists.
class GrossPolynomial {
 public:
  GrossPolynomial() = default;
  GrossPolynomial(const Rational& r);  // NOLINT: finite rationals embed implicitly
  GrossPolynomial(int r) : GrossPolynomial(Rational(r)) {}  // NOLINT
  explicit GrossPolynomial(std::vector<GrossTerm> terms);
  explicit GrossPolynomial(const GrossLinear& l);

  static GrossPolynomial grossone() { return monomial(1, 1); }
  static GrossPolynomial monomial(const Rational& coeff, const Rational& exponent);

  const std::vector<GrossTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// -1, 0, or +1; decided by the leading term.
  int sign() const;
  /// True when the value has no ① dependence (including zero).
  bool is_finite() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// The finite value; only meaningful when is_finite().
  Rational finite_value() const;
  /// Degree-at-most-one polynomial with integer coefficients, if it is one.
  std::optional<GrossLinear> as_linear() const;

  std::string to_string(const FormatOptions& opts = {}) const;

  friend bool operator==(const GrossPolynomial&, const GrossPolynomial&) = default;

 private:
  std::vector<GrossTerm> terms_;
};

GrossPolynomial poly_add(const GrossPolynomial& a, const GrossPolynomial& b);
GrossPolynomial poly_neg(const GrossPolynomial& a);
GrossPolynomial poly_sub(const GrossPolynomial& a, const GrossPolynomial& b);
GrossPolynomial poly_mul(const GrossPolynomial& a, const GrossPolynomial& b);
/// Exact division; the divisor must be a single nonzero term.
/// Throws NotDivisible otherwise, DivisionByZero for 0.
GrossPolynomial poly_div(const GrossPolynomial& a, const GrossPolynomial& b);
/// Integer power. Negative powers need a monomial base; large powers of
/// multi-term polynomials are refused with ExponentTooLarge.
GrossPolynomial poly_pow(const GrossPolynomial& a, long k);
/// Rational power of a monomial whose coefficient is a perfect power.
GrossPolynomial poly_pow(const GrossPolynomial& a, const Rational& q);

std::strong_ordering poly_compare(const GrossPolynomial& a, const GrossPolynomial& b);

/// Exact value with ① := m. Throws NonIntegralPower when some m^p is
/// irrational, DivisionByZero for m = 0 with a negative exponent.
Rational poly_eval_at(const GrossPolynomial& a, const Rational& m);

inline GrossPolynomial operator+(const GrossPolynomial& a, const GrossPolynomial& b) {
  return poly_add(a, b);
}
inline GrossPolynomial operator-(const GrossPolynomial& a, const GrossPolynomial& b) {
  return poly_sub(a, b);
}
inline GrossPolynomial operator-(const GrossPolynomial& a) { return poly_neg(a); }
inline GrossPolynomial operator*(const GrossPolynomial& a, const GrossPolynomial& b) {
  return poly_mul(a, b);
}

}  // namespace grossone
