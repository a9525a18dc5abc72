#include "grossone/gross_linear.hpp"

namespace grossone {

const char* grossone_symbol(const FormatOptions& opts) { return opts.ascii ? "g1" : "①"; }

std::string GrossLinear::to_string(const FormatOptions& opts) const {
  const std::string sym = grossone_symbol(opts);
  std::string out;
  if (sgn(gross_) != 0) {
    if (gross_ == 1) {
      out = sym;
    } else if (gross_ == -1) {
      out = "-" + sym;
    } else {
      out = gross_.get_str() + "*" + sym;
    }
    if (sgn(const_) > 0) out += "+" + const_.get_str();
    if (sgn(const_) < 0) out += const_.get_str();
    return out;
  }
  return const_.get_str();
}

}  // namespace grossone
