#include "grossone/error.hpp"
#include "grossone/exp_measure.hpp"

#include "support/oracles.hpp"
#include "support/random_values.hpp"

#include <doctest.h>

using namespace grossone;

namespace {

const GrossLinear G_MINUS_1{1, -1};

ExpMeasure::FactorMap factors(std::initializer_list<std::pair<long, GrossLinear>> list) {
  ExpMeasure::FactorMap out;
  for (const auto& [p, g] : list) out.emplace(BigInt(p), g);
  return out;
}

}  // namespace

TEST_CASE("exp_make factors the base") {
  CHECK(exp_make(make_rational(8, 9), G_MINUS_1).factors() ==
        factors({{2, {3, -3}}, {3, {-2, 2}}}));
  CHECK(exp_make(make_rational(20, 27), G_MINUS_1).factors() ==
        factors({{2, {2, -2}}, {3, {-3, 3}}, {5, {1, -1}}}));
  CHECK(exp_make(1, GrossLinear(5, 7)).is_one());
  CHECK(exp_make(7, GrossLinear()).is_one());
}

TEST_CASE("exp_make rejects bad bases") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const ArithmeticError& e) {
      return e.kind();
    }
    return ErrorKind::TypeMismatch;
  };
  CHECK(kind_of([] { exp_make(0, G_MINUS_1); }) == ErrorKind::NonPositiveBase);
  CHECK(kind_of([] { exp_make(-2, G_MINUS_1); }) == ErrorKind::NonPositiveBase);
  CHECK(kind_of([] { exp_make(1000003, G_MINUS_1); }) == ErrorKind::BaseTooLarge);
  CHECK(kind_of([] { exp_make(make_rational(1, 2 * 1000003L), G_MINUS_1); }) ==
        ErrorKind::BaseTooLarge);
  // 999983 is the largest prime below 10^6.
  CHECK(exp_make(999983, G_MINUS_1).factors().size() == 1);
  CHECK(kind_of([] { exp_make(2, GrossLinear(200000, 0)); }) == ErrorKind::ExponentTooLarge);
}

TEST_CASE("exp_mul composes side lengths and piece counts") {
  // L^2 * N for the carpet, L^3 * N for the sponge.
  auto side_sq = exp_make(3, BigInt(-2) * G_MINUS_1);
  CHECK(exp_mul(side_sq, exp_make(8, G_MINUS_1)) == exp_make(make_rational(8, 9), G_MINUS_1));
  auto side_cube = exp_make(3, BigInt(-3) * G_MINUS_1);
  CHECK(exp_mul(side_cube, exp_make(20, G_MINUS_1)) ==
        exp_make(make_rational(20, 27), G_MINUS_1));
  auto a = exp_make(make_rational(8, 9), G_MINUS_1);
  CHECK(exp_mul(a, ExpMeasure()) == a);
}

TEST_CASE("exp_pow") {
  auto third = exp_make(make_rational(1, 3), G_MINUS_1);
  CHECK(exp_pow(third, 2) == exp_make(make_rational(1, 9), G_MINUS_1));
  CHECK(exp_pow(third, 3) == exp_make(make_rational(1, 27), G_MINUS_1));
  CHECK(exp_pow(third, 0).is_one());
}

TEST_CASE("exp_eval_at") {
  auto area = exp_make(make_rational(8, 9), G_MINUS_1);
  CHECK(exp_eval_at(area, 4) == make_rational(512, 729));
  CHECK(exp_eval_at(area, 1) == 1);
  auto volume = exp_make(make_rational(20, 27), G_MINUS_1);
  CHECK(exp_eval_at(volume, 3) == oracle::power(make_rational(20, 27), 2));
  CHECK(exp_eval_at(volume, 3) == make_rational(400, 729));
  CHECK_THROWS_AS(exp_eval_at(volume, 0), ArithmeticError);
}

TEST_CASE("scales and formatting") {
  auto area = exp_make(make_rational(8, 9), G_MINUS_1);
  CHECK(area.infinite_scale() == make_rational(8, 9));
  CHECK(area.const_scale() == make_rational(9, 8));
  CHECK(area.to_string() == "(8/9)^(①-1)");
  CHECK(exp_make(8, G_MINUS_1).to_string() == "8^(①-1)");
  CHECK(exp_make(make_rational(20, 27), GrossLinear(1, -2)).to_string() == "(20/27)^(①-2)");
  CHECK(exp_make(2, GrossLinear(1, 0)).to_string({.ascii = true}) == "2^g1");
  // 2 * (8/9)^① does not fold into one power.
  auto scaled = exp_mul(exp_make(make_rational(8, 9), GrossLinear(1, 0)), exp_make(2, {0, 1}));
  CHECK(scaled.to_string() == "(8/9)^①*2");
  // Infinite k doubles the gross coefficient: (8/9)^(2①-2) = (64/81)^(①-1).
  CHECK(exp_make(make_rational(8, 9), GrossLinear(2, -2)).to_string() == "(64/81)^(①-1)");
}

TEST_CASE("multiplicative group laws") {
  gen::Source src(99);
  for (int i = 0; i < 300; ++i) {
    auto a = src.measure();
    auto b = src.measure();
    auto c = src.measure();
    CHECK(exp_mul(a, b) == exp_mul(b, a));
    CHECK(exp_mul(exp_mul(a, b), c) == exp_mul(a, exp_mul(b, c)));
    CHECK(exp_mul(a, ExpMeasure()) == a);
    CHECK(exp_mul(a, exp_pow(a, -1)).is_one());
  }
}

TEST_CASE("substitution is multiplicative") {
  gen::Source src(1234);
  for (int i = 0; i < 300; ++i) {
    auto a = src.measure();
    auto b = src.measure();
    BigInt m = src.integer(1, 30);
    CHECK(exp_eval_at(exp_mul(a, b), m) == exp_eval_at(a, m) * exp_eval_at(b, m));
  }
}

TEST_CASE("constructor validates keys") {
  CHECK_THROWS(ExpMeasure(factors({{4, {1, 0}}})));
  CHECK_THROWS(ExpMeasure(factors({{1, {1, 0}}})));
  CHECK(ExpMeasure(factors({{5, {0, 0}}})).is_one());
}
