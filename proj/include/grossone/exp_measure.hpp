#pragma once

#include "grossone/gross_linear.hpp"
#include "grossone/rational.hpp"

#include <map>
#include <string>

namespace grossone {

/// Largest trial divisor used when factoring a base.
inline constexpr unsigned long kMaxPrimeFactor = 1'000'000;
/// Bound on |gross| and |const| of every stored exponent. Keeps exact
/// rendering and substitution tractable.
inline constexpr long kMaxExponent = 100'000;
/// Bound on a substituted exponent g_p(m) during evaluation.
inline constexpr long kMaxEvalExponent = 10'000'000;

struct BigIntLess {
  bool operator()(const BigInt& a, const BigInt& b) const { return cmp(a, b) < 0; }
};

/// Positive quantity prod p^(g_p(①)) over primes p with gross-linear
/// exponents. The empty factor map is 1. Zero exponents are never stored.
class ExpMeasure {
 public:
  using FactorMap = std::map<BigInt, GrossLinear, BigIntLess>;

  ExpMeasure() = default;
  /// Validates that keys are primes and drops zero exponents.
  explicit ExpMeasure(FactorMap factors);

  const FactorMap& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  /// True when no exponent depends on ①: the value is a plain rational.
  bool is_finite() const;

  /// prod p^(gross coefficient of g_p): the scale per unit of ①.
  Rational infinite_scale() const;
  /// prod p^(const part of g_p).
  Rational const_scale() const;

  /// Canonical text, e.g. "(8/9)^(①-1)", "8^(①-1)", "(8/9)^①*2".
  std::string to_string(const FormatOptions& opts = {}) const;

  friend bool operator==(const ExpMeasure&, const ExpMeasure&) = default;

 private:
  FactorMap factors_;
};

/// base^exponent with base factored into primes. Throws NonPositiveBase,
/// BaseTooLarge (a prime factor above kMaxPrimeFactor) or ExponentTooLarge.
ExpMeasure exp_make(const Rational& base, const GrossLinear& exponent);
ExpMeasure exp_mul(const ExpMeasure& a, const ExpMeasure& b);
ExpMeasure exp_pow(const ExpMeasure& a, const BigInt& k);
ExpMeasure exp_inverse(const ExpMeasure& a);
ExpMeasure exp_div(const ExpMeasure& a, const ExpMeasure& b);
/// Exact prod p^(g_p(m)) for integer m >= 1.
Rational exp_eval_at(const ExpMeasure& a, const BigInt& m);

}  // namespace grossone
