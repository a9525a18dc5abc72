#include "grossone/error.hpp"
#include "grossone/sweep.hpp"

#include <doctest.h>

#include <atomic>

using namespace grossone;

TEST_CASE("parallel sweeps match the serial reference") {
  auto carpet = carpet_snapshot(GrossLinear::finite(2), GrossLinear(1, -3));
  auto serial = approximation_sweep_serial(carpet, 5, 120);
  auto parallel = approximation_sweep(carpet, 5, 120);
  CHECK(serial.size() == 116);
  CHECK(serial == parallel);

  GrossValue v = GrossValue(exp_make(make_rational(20, 27), GrossLinear(1, -1)));
  CHECK(eval_sweep_serial(v, 1, 150) == eval_sweep(v, 1, 150));
  GrossValue p = GrossPolynomial(std::vector<GrossTerm>{{3, 2}, {-1, 0}});
  CHECK(eval_sweep_serial(p, 1, 50) == eval_sweep(p, 1, 50));
}

TEST_CASE("errors inside a parallel sweep propagate") {
  auto s = carpet_snapshot(GrossLinear::finite(1), GrossLinear(1, -9));
  CHECK_THROWS_AS(approximation_sweep(s, 1, 30), ArithmeticError);
  CHECK_THROWS_AS(approximation_sweep_serial(s, 1, 30), ArithmeticError);
  CHECK_THROWS(approximation_sweep(s, 30, 1));
}

TEST_CASE("for_each_index visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  for_each_index(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) CHECK(h == 1);
  std::vector<int> order;
  for_each_index_serial(5, [&](std::size_t i) { order.push_back(static_cast<int>(i)); });
  CHECK(order == std::vector<int>{0, 1, 2, 3, 4});
}
