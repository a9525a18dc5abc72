#include "grossone/sweep.hpp"

#include "grossone/error.hpp"

#include <exception>
#include <stdexcept>

namespace grossone {

namespace {

std::size_t range_size(std::int64_t first, std::int64_t last) {
  if (last < first) throw std::invalid_argument("sweep range is empty");
  return static_cast<std::size_t>(last - first + 1);
}

/// Runs body(i) for i in [0, count) across threads. The first exception
/// thrown by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(grossone_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<FiniteApproximation> approximation_sweep_serial(const FractalSnapshot& s,
                                                            std::int64_t first,
                                                            std::int64_t last) {
  std::vector<FiniteApproximation> out;
  out.reserve(range_size(first, last));
  for (std::int64_t m = first; m <= last; ++m) {
    out.push_back(finite_approximation(s, BigInt(static_cast<long>(m))));
  }
  return out;
}

std::vector<FiniteApproximation> approximation_sweep(const FractalSnapshot& s,
                                                     std::int64_t first, std::int64_t last) {
  std::vector<FiniteApproximation> out(range_size(first, last));
  parallel_for(out.size(), [&](std::size_t i) {
    out[i] = finite_approximation(s, BigInt(static_cast<long>(first + static_cast<std::int64_t>(i))));
  });
  return out;
}

std::vector<Rational> eval_sweep_serial(const GrossValue& v, std::int64_t first,
                                        std::int64_t last) {
  std::vector<Rational> out;
  out.reserve(range_size(first, last));
  for (std::int64_t m = first; m <= last; ++m) {
    out.push_back(value_eval_at(v, BigInt(static_cast<long>(m))));
  }
  return out;
}

std::vector<Rational> eval_sweep(const GrossValue& v, std::int64_t first, std::int64_t last) {
  std::vector<Rational> out(range_size(first, last));
  parallel_for(out.size(), [&](std::size_t i) {
    out[i] = value_eval_at(v, BigInt(static_cast<long>(first + static_cast<std::int64_t>(i))));
  });
  return out;
}

void for_each_index_serial(std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  parallel_for(count, body);
}

}  // namespace grossone
