#include "grossone/json.hpp"

namespace grossone {

namespace {

nlohmann::json integer(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

}  // namespace

nlohmann::json to_json(const Rational& r) {
  if (is_integer(r)) return integer(r.get_num());
  return to_string(r);
}

nlohmann::json to_json(const GrossLinear& l, const FormatOptions& opts) {
  return {{"gross", integer(l.gross_coeff())},
          {"const", integer(l.const_part())},
          {"text", l.to_string(opts)}};
}

nlohmann::json to_json(const GrossValue& v, const FormatOptions& opts) {
  nlohmann::json out;
  if (v.is_exp()) {
    auto factors = nlohmann::json::array();
    for (const auto& [p, g] : v.exp().factors()) {
      factors.push_back({{"prime", integer(p)},
                         {"gross", integer(g.gross_coeff())},
                         {"const", integer(g.const_part())}});
    }
    out["factors"] = std::move(factors);
  } else {
    auto terms = nlohmann::json::array();
    for (const auto& t : v.poly().terms()) {
      terms.push_back({{"coeff", to_string(t.coeff)}, {"exponent", to_string(t.exponent)}});
    }
    out["terms"] = std::move(terms);
  }
  out["text"] = v.to_string(opts);
  return out;
}

}  // namespace grossone
