#include "grossone/gross_poly.hpp"

#include "grossone/error.hpp"
#include "grossone/exp_measure.hpp"

#include <algorithm>
#include <cstdlib>

namespace grossone {

namespace {

/// Multi-term polynomials are only raised to small powers.
constexpr long kMaxPolyPower = 64;

bool exponent_greater(const GrossTerm& a, const GrossTerm& b) {
  return cmp(a.exponent, b.exponent) > 0;
}

/// Sorts by decreasing exponent, merges equal exponents, drops zeros.
std::vector<GrossTerm> canonicalize(std::vector<GrossTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(), exponent_greater);
  std::vector<GrossTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const GrossTerm& t) { return sgn(t.coeff) == 0; });
  return out;
}

long checked_exponent(const Rational& r, long bound) {
  // Callers pass integral r.
  const BigInt& z = r.get_num();
  if (!z.fits_slong_p() || std::labs(z.get_si()) > bound) {
    throw ArithmeticError(ErrorKind::ExponentTooLarge,
                          "power " + z.get_str() + " exceeds the supported bound");
  }
  return z.get_si();
}

std::string format_exponent(const Rational& e) {
  if (is_integer(e) && sgn(e) > 0) return "^" + to_string(e);
  return "^(" + to_string(e) + ")";
}

}  // namespace

GrossPolynomial::GrossPolynomial(const Rational& r) {
  if (sgn(r) != 0) terms_.push_back({r, 0});
}

GrossPolynomial::GrossPolynomial(std::vector<GrossTerm> terms)
    : terms_(canonicalize(std::move(terms))) {}

GrossPolynomial::GrossPolynomial(const GrossLinear& l)
    : GrossPolynomial(std::vector<GrossTerm>{{Rational(l.gross_coeff()), 1},
                                             {Rational(l.const_part()), 0}}) {}

GrossPolynomial GrossPolynomial::monomial(const Rational& coeff, const Rational& exponent) {
  return GrossPolynomial(std::vector<GrossTerm>{{coeff, exponent}});
}

int GrossPolynomial::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }

bool GrossPolynomial::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && sgn(terms_.front().exponent) == 0);
}

Rational GrossPolynomial::finite_value() const {
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

std::optional<GrossLinear> GrossPolynomial::as_linear() const {
  BigInt gross = 0;
  BigInt constant = 0;
  for (const auto& t : terms_) {
    if (!is_integer(t.coeff)) return std::nullopt;
    if (t.exponent == 1) {
      gross = t.coeff.get_num();
    } else if (sgn(t.exponent) == 0) {
      constant = t.coeff.get_num();
    } else {
      return std::nullopt;
    }
  }
  return GrossLinear(gross, constant);
}

std::string GrossPolynomial::to_string(const FormatOptions& opts) const {
  if (terms_.empty()) return "0";
  const std::string sym = grossone_symbol(opts);
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    Rational magnitude = abs(t.coeff);
    if (sgn(t.exponent) == 0) {
      out += grossone::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += grossone::to_string(magnitude) + "*";
    out += sym;
    if (t.exponent != 1) out += format_exponent(t.exponent);
  }
  return out;
}

GrossPolynomial poly_add(const GrossPolynomial& a, const GrossPolynomial& b) {
  std::vector<GrossTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return GrossPolynomial(std::move(terms));
}

GrossPolynomial poly_neg(const GrossPolynomial& a) {
  std::vector<GrossTerm> terms = a.terms();
  for (auto& t : terms) t.coeff = -t.coeff;
  return GrossPolynomial(std::move(terms));
}

GrossPolynomial poly_sub(const GrossPolynomial& a, const GrossPolynomial& b) {
  return poly_add(a, poly_neg(b));
}

GrossPolynomial poly_mul(const GrossPolynomial& a, const GrossPolynomial& b) {
  std::vector<GrossTerm> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      terms.push_back({x.coeff * y.coeff, x.exponent + y.exponent});
    }
  }
  return GrossPolynomial(std::move(terms));
}

GrossPolynomial poly_div(const GrossPolynomial& a, const GrossPolynomial& b) {
  if (b.is_zero()) throw ArithmeticError(ErrorKind::DivisionByZero, "division by zero");
  if (!b.is_monomial()) {
    throw ArithmeticError(ErrorKind::NotDivisible,
                          "divisor " + b.to_string() + " is not a single term");
  }
  const GrossTerm& d = b.terms().front();
  std::vector<GrossTerm> terms = a.terms();
  for (auto& t : terms) {
    t.coeff /= d.coeff;
    t.exponent -= d.exponent;
  }
  return GrossPolynomial(std::move(terms));
}

GrossPolynomial poly_pow(const GrossPolynomial& a, long k) {
  if (k == 0) return GrossPolynomial(1);
  if (a.is_zero()) {
    if (k < 0) throw ArithmeticError(ErrorKind::DivisionByZero, "0 to a negative power");
    return a;
  }
  if (a.is_monomial()) {
    const GrossTerm& t = a.terms().front();
    checked_exponent(Rational(k), kMaxExponent);
    return GrossPolynomial::monomial(rational_pow(t.coeff, k), t.exponent * k);
  }
  if (k < 0) {
    throw ArithmeticError(ErrorKind::NotDivisible,
                          "negative power of the multi-term " + a.to_string());
  }
  if (k > kMaxPolyPower) {
    throw ArithmeticError(ErrorKind::ExponentTooLarge,
                          "power " + std::to_string(k) + " of a multi-term polynomial");
  }
  GrossPolynomial result(1);
  GrossPolynomial square = a;
  for (long e = k; e > 0; e >>= 1) {
    if (e & 1) result = poly_mul(result, square);
    if (e > 1) square = poly_mul(square, square);
  }
  return result;
}

GrossPolynomial poly_pow(const GrossPolynomial& a, const Rational& q) {
  if (is_integer(q)) return poly_pow(a, checked_exponent(q, kMaxExponent));
  if (a.is_zero()) {
    if (sgn(q) < 0) throw ArithmeticError(ErrorKind::DivisionByZero, "0 to a negative power");
    return a;
  }
  if (!a.is_monomial()) {
    throw ArithmeticError(ErrorKind::NonIntegralPower,
                          "fractional power of the multi-term " + a.to_string());
  }
  const GrossTerm& t = a.terms().front();
  const BigInt& den = q.get_den();
  Rational root;
  if (!den.fits_ulong_p() || !exact_root(t.coeff, den.get_ui(), root)) {
    throw ArithmeticError(ErrorKind::NonIntegralPower,
                          to_string(t.coeff) + "^(" + to_string(q) + ") is not rational");
  }
  long num = checked_exponent(Rational(q.get_num()), kMaxExponent);
  return GrossPolynomial::monomial(rational_pow(root, num), t.exponent * q);
}

std::strong_ordering poly_compare(const GrossPolynomial& a, const GrossPolynomial& b) {
  return poly_sub(a, b).sign() <=> 0;
}

Rational poly_eval_at(const GrossPolynomial& a, const Rational& m) {
  Rational sum = 0;
  for (const auto& t : a.terms()) {
    if (sgn(t.exponent) == 0) {
      sum += t.coeff;
      continue;
    }
    if (sgn(m) == 0) {
      if (sgn(t.exponent) < 0) {
        throw ArithmeticError(ErrorKind::DivisionByZero, "0 to a negative power");
      }
      continue;
    }
    Rational base = m;
    const BigInt& den = t.exponent.get_den();
    if (den != 1) {
      if (!den.fits_ulong_p() || !exact_root(m, den.get_ui(), base)) {
        throw ArithmeticError(ErrorKind::NonIntegralPower,
                              to_string(m) + "^(" + to_string(t.exponent) +
                                  ") is not rational");
      }
    }
    long power = checked_exponent(Rational(t.exponent.get_num()), kMaxExponent);
    sum += t.coeff * rational_pow(base, power);
  }
  return sum;
}

}  // namespace grossone
