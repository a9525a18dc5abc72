#include "grossone/process.hpp"

#include "grossone/error.hpp"

namespace grossone {

ProcessSpan::ProcessSpan(GrossLinear start, GrossValue length)
    : start_(std::move(start)), length_(std::move(length)) {
  if (length_.sign() <= 0) {
    throw ArithmeticError(ErrorKind::NonPositiveLength,
                          "process length " + length_.to_string() + " is not positive");
  }
  if (value_compare(length_, max_sequence_length()) > 0) {
    throw ArithmeticError(ErrorKind::LengthExceedsCap,
                          "process length " + length_.to_string() + " exceeds ①");
  }
}

GrossValue max_sequence_length() { return GrossPolynomial::grossone(); }

GrossLinear sequential_reach(const GrossLinear& start) {
  if (start < GrossLinear::finite(1)) {
    throw ArithmeticError(ErrorKind::InvalidStart,
                          "start " + start.to_string() + " is below 1");
  }
  // A process of exactly ① steps covers start, start+1, ..., start+①-1.
  ProcessSpan span(start, max_sequence_length());
  return span.start() + GrossLinear(1, -1);
}

bool is_sequentially_countable(const GrossValue& count) {
  if (count.sign() <= 0) {
    throw ArithmeticError(ErrorKind::NonPositiveCount,
                          "count " + count.to_string() + " is not positive");
  }
  return value_compare(count, max_sequence_length()) <= 0;
}

GrossValue set_measure_nat() { return max_sequence_length(); }

namespace {

void require_positive(long v, const char* what) {
  if (v < 1) {
    throw ArithmeticError(ErrorKind::InvalidStart,
                          std::string(what) + " must be >= 1, got " + std::to_string(v));
  }
}

}  // namespace

GrossValue set_measure_remove(long j) {
  require_positive(j, "removed element count");
  return GrossPolynomial(GrossLinear(1, -j));
}

GrossValue set_measure_add(long j) {
  require_positive(j, "added element count");
  return GrossPolynomial(GrossLinear(1, j));
}

GrossValue set_measure_tuples(long d) {
  require_positive(d, "tuple dimension");
  return GrossPolynomial::monomial(1, d);
}

}  // namespace grossone
