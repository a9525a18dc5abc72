#include "grossone/gross_value.hpp"

#include "grossone/error.hpp"

namespace grossone {

namespace {

[[noreturn]] void mixed_scale(const GrossValue& a, const GrossValue& b, const char* op) {
  throw ArithmeticError(ErrorKind::MixedScaleAddition,
                        std::string("cannot ") + op + " " + a.to_string() + " and " +
                            b.to_string() + ": their ratio is not a finite rational");
}

[[noreturn]] void unrepresentable(const std::string& what) {
  throw ArithmeticError(ErrorKind::Unrepresentable, what);
}

std::strong_ordering compare_to_one(const Rational& r) { return cmp(r, 1) <=> 0; }

/// a / b when it is a finite rational.
std::optional<Rational> finite_ratio(const ExpMeasure& a, const ExpMeasure& b) {
  ExpMeasure ratio = exp_div(a, b);
  if (!ratio.is_finite()) return std::nullopt;
  return ratio.const_scale();
}

/// e * r for a finite rational r, as a value.
GrossValue scale_measure(const ExpMeasure& e, const Rational& r) {
  if (sgn(r) == 0) return GrossValue(0);
  if (sgn(r) < 0) unrepresentable("measures are positive; cannot scale by " + to_string(r));
  return GrossValue(exp_mul(e, exp_make(r, GrossLinear::finite(1))));
}

}  // namespace

GrossValue::GrossValue(const ExpMeasure& e) {
  if (e.is_finite()) {
    repr_ = GrossPolynomial(e.const_scale());
  } else {
    repr_ = e;
  }
}

int GrossValue::sign() const { return is_poly() ? poly().sign() : 1; }

std::string GrossValue::to_string(const FormatOptions& opts) const {
  return is_poly() ? poly().to_string(opts) : exp().to_string(opts);
}

std::strong_ordering value_compare(const GrossValue& a, const GrossValue& b) {
  if (a.is_poly() && b.is_poly()) return poly_compare(a.poly(), b.poly());
  if (a.is_exp() && b.is_exp()) {
    ExpMeasure ratio = exp_div(a.exp(), b.exp());
    if (auto c = compare_to_one(ratio.infinite_scale()); c != 0) return c;
    return compare_to_one(ratio.const_scale());
  }
  if (a.is_exp()) {
    if (b.poly().sign() <= 0) return std::strong_ordering::greater;
    return compare_to_one(a.exp().infinite_scale());
  }
  return 0 <=> value_compare(b, a);
}

GrossValue value_add(const GrossValue& a, const GrossValue& b) {
  if (a.is_poly() && b.is_poly()) return poly_add(a.poly(), b.poly());
  if (a.is_poly() && a.poly().is_zero()) return b;
  if (b.is_poly() && b.poly().is_zero()) return a;
  if (a.is_exp() && b.is_exp()) {
    if (auto r = finite_ratio(a.exp(), b.exp())) return scale_measure(b.exp(), *r + 1);
  }
  mixed_scale(a, b, "add");
}

GrossValue value_sub(const GrossValue& a, const GrossValue& b) {
  if (a.is_poly() && b.is_poly()) return poly_sub(a.poly(), b.poly());
  if (b.is_poly() && b.poly().is_zero()) return a;
  if (a.is_exp() && b.is_exp()) {
    if (auto r = finite_ratio(a.exp(), b.exp())) return scale_measure(b.exp(), *r - 1);
  }
  if (a.is_poly() && a.poly().is_zero()) return value_neg(b);
  mixed_scale(a, b, "subtract");
}

GrossValue value_neg(const GrossValue& a) {
  if (a.is_exp()) unrepresentable("measures are positive; cannot negate " + a.to_string());
  return poly_neg(a.poly());
}

GrossValue value_mul(const GrossValue& a, const GrossValue& b) {
  if (a.is_poly() && b.is_poly()) return poly_mul(a.poly(), b.poly());
  if (a.is_exp() && b.is_exp()) return GrossValue(exp_mul(a.exp(), b.exp()));
  const ExpMeasure& e = a.is_exp() ? a.exp() : b.exp();
  const GrossPolynomial& p = a.is_exp() ? b.poly() : a.poly();
  if (!p.is_finite()) {
    unrepresentable("product of the measure " + e.to_string() + " and the polynomial " +
                    p.to_string());
  }
  return scale_measure(e, p.finite_value());
}

GrossValue value_div(const GrossValue& a, const GrossValue& b) {
  if (a.is_poly() && b.is_poly()) return poly_div(a.poly(), b.poly());
  if (a.is_exp() && b.is_exp()) return GrossValue(exp_div(a.exp(), b.exp()));
  if (a.is_exp()) {
    const GrossPolynomial& p = b.poly();
    if (p.is_zero()) throw ArithmeticError(ErrorKind::DivisionByZero, "division by zero");
    if (!p.is_finite()) {
      unrepresentable("quotient of the measure " + a.to_string() + " by " + p.to_string());
    }
    return scale_measure(a.exp(), 1 / p.finite_value());
  }
  const GrossPolynomial& p = a.poly();
  if (!p.is_finite()) {
    unrepresentable("quotient of " + p.to_string() + " by the measure " + b.to_string());
  }
  return scale_measure(exp_inverse(b.exp()), p.finite_value());
}

GrossValue value_pow(const GrossValue& base, const GrossValue& exponent) {
  if (exponent.is_exp()) {
    unrepresentable("exponent " + exponent.to_string() + " is not a polynomial in ①");
  }
  const GrossPolynomial& ep = exponent.poly();
  if (ep.is_finite()) {
    Rational q = ep.finite_value();
    if (base.is_poly()) return poly_pow(base.poly(), q);
    if (!is_integer(q)) {
      // Fractional powers of a measure exist when every exponent stays integral.
      ExpMeasure::FactorMap factors;
      for (const auto& [p, g] : base.exp().factors()) {
        Rational gross = q * g.gross_coeff();
        Rational constant = q * g.const_part();
        if (!is_integer(gross) || !is_integer(constant)) {
          throw ArithmeticError(ErrorKind::NonIntegralPower,
                                base.to_string() + "^(" + to_string(q) + ") is not exact");
        }
        factors.emplace(p, GrossLinear(gross.get_num(), constant.get_num()));
      }
      return GrossValue(ExpMeasure(std::move(factors)));
    }
    return GrossValue(exp_pow(base.exp(), q.get_num()));
  }
  auto linear = ep.as_linear();
  if (!linear) {
    unrepresentable("exponent " + ep.to_string() +
                    " is not an integer affine form a*①+b");
  }
  if (base.is_exp() || !base.poly().is_finite()) {
    unrepresentable("infinite power of the non-finite base " + base.to_string());
  }
  return GrossValue(exp_make(base.poly().finite_value(), *linear));
}

Rational value_eval_at(const GrossValue& a, const BigInt& m) {
  if (a.is_poly()) return poly_eval_at(a.poly(), Rational(m));
  return exp_eval_at(a.exp(), m);
}

GrossLinear require_linear(const GrossValue& v, const char* what) {
  if (v.is_poly()) {
    if (auto l = v.poly().as_linear()) return *l;
  }
  throw ArithmeticError(ErrorKind::NotGrossLinear,
                        std::string(what) + " must have the form a*①+b with integers a, b; got " +
                            v.to_string());
}

const char* to_string(std::strong_ordering ord) {
  if (ord < 0) return "less";
  if (ord > 0) return "greater";
  return "equal";
}

}  // namespace grossone
