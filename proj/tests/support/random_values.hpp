#pragma once

// Seeded generators for property tests.

#include "grossone/gross_value.hpp"

#include <random>

namespace gen {

using namespace grossone;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long lo = -9, long hi = 9) {
    long den = coin() ? 1 : integer(1, 6);
    return make_rational(integer(lo, hi), den);
  }

  Rational nonzero_rational() {
    Rational r;
    do r = rational(); while (sgn(r) == 0);
    return r;
  }

  /// Up to four terms; integer exponents in [-3, 3] with occasional halves.
  GrossPolynomial polynomial(bool integer_exponents = false) {
    std::vector<GrossTerm> terms;
    const long n = integer(0, 4);
    for (long i = 0; i < n; ++i) {
      Rational e = integer(-3, 3);
      if (!integer_exponents && integer(0, 5) == 0) e = make_rational(integer(-5, 5), 2);
      terms.push_back({rational(), e});
    }
    return GrossPolynomial(std::move(terms));
  }

  GrossLinear linear(long gross_lo = -3, long gross_hi = 3) {
    return {integer(gross_lo, gross_hi), integer(-6, 6)};
  }

  /// A measure over primes {2, 3, 5, 7}; not necessarily infinite.
  ExpMeasure measure() {
    ExpMeasure::FactorMap f;
    for (long p : {2L, 3L, 5L, 7L}) {
      if (coin()) f.emplace(BigInt(p), linear());
    }
    return ExpMeasure(std::move(f));
  }

  /// A measure with some nonzero gross exponent.
  ExpMeasure infinite_measure() {
    ExpMeasure m;
    do m = measure(); while (m.is_finite());
    return m;
  }

  GrossValue value() {
    return coin() ? GrossValue(polynomial()) : GrossValue(infinite_measure());
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
