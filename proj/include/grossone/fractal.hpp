#pragma once

#include "grossone/gross_linear.hpp"
#include "grossone/gross_value.hpp"

#include <compare>
#include <string_view>

namespace grossone {

enum class Fractal { Cantor, Carpet, Sponge };

const char* to_string(Fractal f);
int dimension(Fractal f);

/// State of a fractal construction started at stage k and observed at
/// step n, where 1 <= k <= n <= ① + k - 1.
struct FractalSnapshot {
  Fractal fractal;
  GrossLinear offset_k;
  GrossLinear step_n;
  GrossValue piece_count;
  GrossValue piece_size;
  GrossValue total_measure;
};

/// 8^(n+k-2) squares of side 3^-(n+k-2); area (8/9)^(n+k-2).
FractalSnapshot carpet_snapshot(const GrossLinear& k, const GrossLinear& n);
/// 20^(n+k-2) cubes of side 3^-(n+k-2); volume (20/27)^(n+k-2).
FractalSnapshot sponge_snapshot(const GrossLinear& k, const GrossLinear& n);
/// 2^(n+k-1) intervals of length 3^-(n+k-1); total length (2/3)^(n+k-1).
FractalSnapshot cantor_snapshot(const GrossLinear& k, const GrossLinear& n);
FractalSnapshot snapshot(Fractal f, const GrossLinear& k, const GrossLinear& n);

struct Distinction {
  std::strong_ordering ordering;
  GrossValue ratio;  // a.total_measure / b.total_measure
};

/// Throws FractalMismatch for snapshots of different fractals.
Distinction distinguish(const FractalSnapshot& a, const FractalSnapshot& b);

struct FiniteApproximation {
  Rational count;
  Rational size;
  Rational measure;

  friend bool operator==(const FiniteApproximation&, const FiniteApproximation&) = default;
};

/// Snapshot values with ① := m. Throws RangeViolationAtSubstitution when
/// 1 <= k <= n <= m + k - 1 fails for the substituted integers.
FiniteApproximation finite_approximation(const FractalSnapshot& s, const BigInt& m);

}  // namespace grossone
