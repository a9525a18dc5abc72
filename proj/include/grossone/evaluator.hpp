#pragma once

#include "grossone/expr.hpp"
#include "grossone/fractal.hpp"
#include "grossone/gross_value.hpp"

#include <compare>
#include <string_view>
#include <variant>

namespace grossone {

/// Arithmetic with errors tagged by the span of the failing node.
///
/// Named calls usable inside arithmetic:
///   carpet(k, n), sponge(k, n), cantor(k, n)  total measure of the snapshot
///   reach(s)                                  sequential_reach
///   approx(e, m)                              value_eval_at
/// Calls yielding non-numbers are only valid at the top level:
///   countable(e)    boolean
///   compare(a, b)   ordering
GrossValue evaluate(const Expr& e);

struct Ordering {
  std::strong_ordering value;
};

using EvalResult = std::variant<GrossValue, bool, Ordering>;

EvalResult evaluate_top(const Expr& e);

/// parse + evaluate.
GrossValue evaluate(std::string_view input);

}  // namespace grossone
