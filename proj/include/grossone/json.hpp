#pragma once

#include "grossone/gross_value.hpp"

#include <json.hpp>

namespace grossone {

/// Measures: {"factors": [{"prime": p, "gross": a, "const": b}, ...], "text": ...}.
/// Polynomials: {"terms": [{"coeff": "p/q", "exponent": "p/q"}, ...], "text": ...}.
/// Integers that overflow int64 are emitted as decimal strings.
nlohmann::json to_json(const GrossValue& v, const FormatOptions& opts = {});
nlohmann::json to_json(const GrossLinear& l, const FormatOptions& opts = {});
nlohmann::json to_json(const Rational& r);

}  // namespace grossone
