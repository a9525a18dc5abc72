#include "grossone/rational.hpp"

#include "grossone/error.hpp"

#include <cctype>

namespace grossone {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw ArithmeticError(ErrorKind::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw ArithmeticError(ErrorKind::DivisionByZero, "0 to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  BigInt num, den;
  auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime.
  return Rational(num, den);
}

bool exact_root(const Rational& r, unsigned long q, Rational& out) {
  if (q == 0) return false;
  if (sgn(r) < 0 && q % 2 == 0) return false;
  BigInt num, den;
  if (mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), q) == 0) return false;
  if (mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), q) == 0) return false;
  out = Rational(num, den);
  return true;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;
    BigInt d(std::string(den), 10);
    if (sgn(d) == 0) return false;
    value = make_rational(BigInt(std::string(num), 10), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return false;
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      return false;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = make_rational(digits, scale);
  } else {
    if (!all_digits(text)) return false;
    value = Rational(BigInt(std::string(text), 10));
  }
  out = negative ? Rational(-value) : value;
  return true;
}

}  // namespace grossone
