#include "grossone/fractal.hpp"

#include "grossone/error.hpp"

namespace grossone {

namespace {

struct Rule {
  long kept;        // pieces kept per piece and step
  long divisions;   // each side is cut into this many parts
  long offset;      // exponent is n + k - offset
};

Rule rule(Fractal f) {
  switch (f) {
    case Fractal::Cantor: return {2, 3, 1};
    case Fractal::Carpet: return {8, 3, 2};
    case Fractal::Sponge: return {20, 3, 2};
  }
  return {};
}

bool less(const GrossLinear& a, const GrossLinear& b) {
  return poly_compare(GrossPolynomial(a), GrossPolynomial(b)) < 0;
}

/// Checks 1 <= k <= n <= ① + k - 1, naming the first violated inequality.
void check_range(const GrossLinear& k, const GrossLinear& n) {
  const GrossLinear one = GrossLinear::finite(1);
  const GrossLinear cap = k + GrossLinear(1, -1);
  auto fail = [&](const std::string& which) {
    throw ArithmeticError(ErrorKind::RangeViolation,
                          "1 <= k <= n <= ①+k-1 violated: " + which + " (k = " + k.to_string() +
                              ", n = " + n.to_string() + ")");
  };
  if (less(k, one)) fail("1 <= k");
  if (less(n, k)) fail("k <= n");
  if (less(cap, n)) fail("n <= ①+k-1");
}

}  // namespace

const char* to_string(Fractal f) {
  switch (f) {
    case Fractal::Cantor: return "cantor";
    case Fractal::Carpet: return "carpet";
    case Fractal::Sponge: return "sponge";
  }
  return "unknown";
}

int dimension(Fractal f) {
  switch (f) {
    case Fractal::Cantor: return 1;
    case Fractal::Carpet: return 2;
    case Fractal::Sponge: return 3;
  }
  return 0;
}

FractalSnapshot snapshot(Fractal f, const GrossLinear& k, const GrossLinear& n) {
  check_range(k, n);
  const Rule r = rule(f);
  const GrossLinear steps = n + k - GrossLinear::finite(r.offset);
  Rational cell_volume = rational_pow(make_rational(1, r.divisions), dimension(f));
  return FractalSnapshot{
      .fractal = f,
      .offset_k = k,
      .step_n = n,
      .piece_count = GrossValue(exp_make(r.kept, steps)),
      .piece_size = GrossValue(exp_make(make_rational(1, r.divisions), steps)),
      .total_measure = GrossValue(exp_make(r.kept * cell_volume, steps)),
  };
}

FractalSnapshot carpet_snapshot(const GrossLinear& k, const GrossLinear& n) {
  return snapshot(Fractal::Carpet, k, n);
}

FractalSnapshot sponge_snapshot(const GrossLinear& k, const GrossLinear& n) {
  return snapshot(Fractal::Sponge, k, n);
}

FractalSnapshot cantor_snapshot(const GrossLinear& k, const GrossLinear& n) {
  return snapshot(Fractal::Cantor, k, n);
}

Distinction distinguish(const FractalSnapshot& a, const FractalSnapshot& b) {
  if (a.fractal != b.fractal) {
    throw ArithmeticError(ErrorKind::FractalMismatch,
                          std::string("cannot compare a ") + to_string(a.fractal) + " with a " +
                              to_string(b.fractal));
  }
  return {value_compare(a.total_measure, b.total_measure),
          value_div(a.total_measure, b.total_measure)};
}

FiniteApproximation finite_approximation(const FractalSnapshot& s, const BigInt& m) {
  const BigInt k = s.offset_k.at(m);
  const BigInt n = s.step_n.at(m);
  if (!(cmp(k, 1) >= 0 && cmp(k, n) <= 0 && cmp(n, m + k - 1) <= 0)) {
    throw ArithmeticError(ErrorKind::RangeViolationAtSubstitution,
                          "with ① := " + m.get_str() + ", k = " + k.get_str() + " and n = " +
                              n.get_str() + " violate 1 <= k <= n <= m+k-1");
  }
  return {value_eval_at(s.piece_count, m), value_eval_at(s.piece_size, m),
          value_eval_at(s.total_measure, m)};
}

}  // namespace grossone
