#include "grossone/exp_measure.hpp"

#include "grossone/error.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace grossone {

namespace {

using Multiplicities = std::vector<std::pair<BigInt, long>>;

void check_bound(const BigInt& z) {
  if (!z.fits_slong_p() || std::labs(z.get_si()) > kMaxExponent) {
    throw ArithmeticError(ErrorKind::ExponentTooLarge,
                          "exponent component " + z.get_str() + " exceeds the supported bound");
  }
}

/// Trial division of a positive integer, recording multiplicity * sign.
void factor_into(BigInt n, long sign, Multiplicities& out) {
  auto push = [&](const BigInt& p, long mult) { out.emplace_back(p, sign * mult); };
  unsigned long p = 2;
  while (!n.fits_ulong_p()) {
    if (p > kMaxPrimeFactor) {
      throw ArithmeticError(ErrorKind::BaseTooLarge,
                            "base has a prime factor above " + std::to_string(kMaxPrimeFactor));
    }
    long mult = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++mult;
    }
    if (mult > 0) push(p, mult);
    p += (p == 2) ? 1 : 2;
  }
  std::uint64_t m = n.get_ui();
  for (; p <= kMaxPrimeFactor && p * p <= m; p += (p == 2) ? 1 : 2) {
    long mult = 0;
    while (m % p == 0) {
      m /= p;
      ++mult;
    }
    if (mult > 0) push(BigInt(p), mult);
  }
  if (m > 1) {
    if (m > kMaxPrimeFactor) {
      throw ArithmeticError(ErrorKind::BaseTooLarge,
                            "base has a prime factor above " + std::to_string(kMaxPrimeFactor));
    }
    push(BigInt(static_cast<unsigned long>(m)), 1);
  }
}

std::string parenthesize(const Rational& r) {
  return is_integer(r) && sgn(r) > 0 ? to_string(r) : "(" + to_string(r) + ")";
}

/// Integer b with const_p = b * gross_p for every prime, if one exists.
std::optional<BigInt> folding_offset(const ExpMeasure::FactorMap& factors) {
  std::optional<BigInt> offset;
  for (const auto& [p, g] : factors) {
    if (sgn(g.gross_coeff()) == 0) return std::nullopt;
    if (!mpz_divisible_p(g.const_part().get_mpz_t(), g.gross_coeff().get_mpz_t()))
      return std::nullopt;
    BigInt b = g.const_part() / g.gross_coeff();
    if (offset && *offset != b) return std::nullopt;
    offset = b;
  }
  return offset;
}

}  // namespace

ExpMeasure::ExpMeasure(FactorMap factors) {
  for (auto& [p, g] : factors) {
    if (cmp(p, 1) <= 0 || mpz_probab_prime_p(p.get_mpz_t(), 25) == 0) {
      throw std::invalid_argument("ExpMeasure factor key " + p.get_str() + " is not prime");
    }
    if (g.is_zero()) continue;
    check_bound(g.gross_coeff());
    check_bound(g.const_part());
    factors_.emplace(p, std::move(g));
  }
}

bool ExpMeasure::is_finite() const {
  for (const auto& [p, g] : factors_) {
    if (!g.is_finite()) return false;
  }
  return true;
}

namespace {

Rational scale(const ExpMeasure::FactorMap& factors, bool gross) {
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& [p, g] : factors) {
    const BigInt& e = gross ? g.gross_coeff() : g.const_part();
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), BigInt(abs(e)).get_ui());
    if (sgn(e) > 0) num *= power;
    if (sgn(e) < 0) den *= power;
  }
  return Rational(num, den);
}

}  // namespace

Rational ExpMeasure::infinite_scale() const { return scale(factors_, true); }
Rational ExpMeasure::const_scale() const { return scale(factors_, false); }

std::string ExpMeasure::to_string(const FormatOptions& opts) const {
  if (is_finite()) return grossone::to_string(const_scale());
  const std::string base = parenthesize(infinite_scale());
  const std::string sym = grossone_symbol(opts);
  if (auto offset = folding_offset(factors_)) {
    if (sgn(*offset) == 0) return base + "^" + sym;
    return base + "^(" + GrossLinear(1, *offset).to_string(opts) + ")";
  }
  return base + "^" + sym + "*" + parenthesize(const_scale());
}

ExpMeasure exp_make(const Rational& base, const GrossLinear& exponent) {
  if (sgn(base) <= 0) {
    throw ArithmeticError(ErrorKind::NonPositiveBase,
                          "base " + to_string(base) + " is not positive");
  }
  if (exponent.is_zero() || base == 1) return {};
  Multiplicities mult;
  factor_into(base.get_num(), 1, mult);
  factor_into(base.get_den(), -1, mult);
  ExpMeasure::FactorMap factors;
  for (const auto& [p, k] : mult) {
    factors.emplace(p, BigInt(k) * exponent);
  }
  return ExpMeasure(std::move(factors));
}

ExpMeasure exp_mul(const ExpMeasure& a, const ExpMeasure& b) {
  ExpMeasure::FactorMap factors = a.factors();
  for (const auto& [p, g] : b.factors()) {
    auto [it, inserted] = factors.emplace(p, g);
    if (!inserted) it->second = it->second + g;
  }
  return ExpMeasure(std::move(factors));
}

ExpMeasure exp_pow(const ExpMeasure& a, const BigInt& k) {
  ExpMeasure::FactorMap factors;
  if (sgn(k) == 0) return {};
  for (const auto& [p, g] : a.factors()) factors.emplace(p, k * g);
  return ExpMeasure(std::move(factors));
}

ExpMeasure exp_inverse(const ExpMeasure& a) { return exp_pow(a, -1); }

ExpMeasure exp_div(const ExpMeasure& a, const ExpMeasure& b) {
  return exp_mul(a, exp_inverse(b));
}

Rational exp_eval_at(const ExpMeasure& a, const BigInt& m) {
  if (cmp(m, 1) < 0) {
    throw ArithmeticError(ErrorKind::InvalidSubstitution,
                          "measures are evaluated at m >= 1, got " + m.get_str());
  }
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& [p, g] : a.factors()) {
    BigInt e = g.at(m);
    if (!e.fits_slong_p() || std::labs(e.get_si()) > kMaxEvalExponent) {
      throw ArithmeticError(ErrorKind::ExponentTooLarge,
                            "exponent " + e.get_str() + " at substitution is too large");
    }
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), std::labs(e.get_si()));
    if (sgn(e) > 0) num *= power;
    if (sgn(e) < 0) den *= power;
  }
  return Rational(num, den);
}

}  // namespace grossone
