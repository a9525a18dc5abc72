#pragma once

#include "grossone/rational.hpp"

#include <compare>
#include <string>

namespace grossone {

struct FormatOptions {
  bool ascii = false;  // "g1" instead of "①"
};

const char* grossone_symbol(const FormatOptions& opts);

/// Affine gross-integer gross·① + constant. Canonical by construction.
class GrossLinear {
 public:
  GrossLinear() = default;
  GrossLinear(BigInt gross, BigInt constant)
      : gross_(std::move(gross)), const_(std::move(constant)) {}

  static GrossLinear finite(BigInt c) { return {0, std::move(c)}; }
  static GrossLinear grossone() { return {1, 0}; }

  const BigInt& gross_coeff() const { return gross_; }
  const BigInt& const_part() const { return const_; }

  bool is_zero() const { return sgn(gross_) == 0 && sgn(const_) == 0; }
  bool is_finite() const { return sgn(gross_) == 0; }

  /// Value with ① replaced by m.
  BigInt at(const BigInt& m) const { return gross_ * m + const_; }

  friend GrossLinear operator+(const GrossLinear& a, const GrossLinear& b) {
    return {a.gross_ + b.gross_, a.const_ + b.const_};
  }
  friend GrossLinear operator-(const GrossLinear& a, const GrossLinear& b) {
    return {a.gross_ - b.gross_, a.const_ - b.const_};
  }
  friend GrossLinear operator-(const GrossLinear& a) { return {-a.gross_, -a.const_}; }
  friend GrossLinear operator*(const BigInt& k, const GrossLinear& a) {
    return {k * a.gross_, k * a.const_};
  }

  friend bool operator==(const GrossLinear& a, const GrossLinear& b) {
    return a.gross_ == b.gross_ && a.const_ == b.const_;
  }

  /// Order in the numeral system: the ① coefficient dominates.
  friend std::strong_ordering operator<=>(const GrossLinear& a, const GrossLinear& b) {
    if (int c = cmp(a.gross_, b.gross_); c != 0) return c <=> 0;
    return cmp(a.const_, b.const_) <=> 0;
  }

  /// "①-1", "2*①+3", "-①", "5".
  std::string to_string(const FormatOptions& opts = {}) const;

 private:
  BigInt gross_{0};
  BigInt const_{0};
};

}  // namespace grossone
