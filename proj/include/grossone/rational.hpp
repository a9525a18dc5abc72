#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grossone {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced n/d. Throws ArithmeticError(DivisionByZero) when d == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Exact r^e for any integer e; 0^negative is a division by zero.
Rational rational_pow(const Rational& base, long exponent);

/// Exact root: the q-th root of r if r is a perfect q-th power (q > 0).
bool exact_root(const Rational& r, unsigned long q, Rational& out);

bool is_integer(const Rational& r);

/// "p" or "p/q".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Parses "123", "-7/3" or "12.375" exactly. Returns false on malformed input.
bool parse_rational(std::string_view text, Rational& out);

}  // namespace grossone
