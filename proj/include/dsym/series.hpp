#pragma once

#include <string>
#include <vector>

#include "dsym/kcode.hpp"

namespace dsym {

/// Truncated formal power series with exact integer coefficients c_0..c_N.
class PowerSeries {
 public:
  PowerSeries() : coeffs_(1, Int(0)) {}
  explicit PowerSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, Int(0)) {}
  explicit PowerSeries(std::vector<Int> coeffs);

  static PowerSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
  Int& operator[](int i) { return coeffs_[static_cast<size_t>(i)]; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Int> coeffs_;
};

/// Truncated arithmetic at the smaller of the two orders.
PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// Multiplicative inverse; requires constant term 1 so the result stays
/// integral. Throws otherwise.
PowerSeries series_inverse(const PowerSeries& a);

/// "1 + t + 2*t^2 + ..." form.
std::string to_string(const PowerSeries& s, char var = 't');

}  // namespace dsym
