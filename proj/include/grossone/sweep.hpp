#pragma once

#include "grossone/fractal.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace grossone {

/// finite_approximation(s, m) for m = first..last, in order.
///
/// The parallel kernels split the index range across OpenMP threads; the
/// serial versions are the reference they are tested against.
std::vector<FiniteApproximation> approximation_sweep_serial(const FractalSnapshot& s,
                                                            std::int64_t first,
                                                            std::int64_t last);
std::vector<FiniteApproximation> approximation_sweep(const FractalSnapshot& s,
                                                     std::int64_t first,
                                                     std::int64_t last);

/// value_eval_at(v, m) for m = first..last, in order.
std::vector<Rational> eval_sweep_serial(const GrossValue& v, std::int64_t first,
                                        std::int64_t last);
std::vector<Rational> eval_sweep(const GrossValue& v, std::int64_t first, std::int64_t last);

/// Calls body(i) for every i in [0, count). Iterations must be independent.
/// The first exception thrown by any iteration is rethrown afterwards.
void for_each_index_serial(std::size_t count, const std::function<void(std::size_t)>& body);
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace grossone
