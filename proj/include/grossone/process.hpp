#pragma once

#include "grossone/gross_linear.hpp"
#include "grossone/gross_value.hpp"

namespace grossone {

/// A sequential process: `length` consecutive steps beginning at `start`.
/// Lengths above ① cannot be constructed.
class ProcessSpan {
 public:
  /// Throws NonPositiveLength or LengthExceedsCap.
  ProcessSpan(GrossLinear start, GrossValue length);

  const GrossLinear& start() const { return start_; }
  const GrossValue& length() const { return length_; }

 private:
  GrossLinear start_;
  GrossValue length_;
};

/// The cap on the number of steps of any sequential process: ①.
GrossValue max_sequence_length();

/// start + ① - 1. Throws InvalidStart when start < 1.
GrossLinear sequential_reach(const GrossLinear& start);

/// count <= ①. Throws NonPositiveCount when count <= 0.
bool is_sequentially_countable(const GrossValue& count);

GrossValue set_measure_nat();
/// ① - j; j >= 1.
GrossValue set_measure_remove(long j);
/// ① + j; j >= 1.
GrossValue set_measure_add(long j);
/// ①^d; the number of d-tuples of naturals; d >= 1.
GrossValue set_measure_tuples(long d);

}  // namespace grossone
