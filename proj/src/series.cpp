#include "dsym/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsym {

PowerSeries::PowerSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s[0] = 1;
  return s;
}

namespace {
int common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
  const int n = common_order(a, b);
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) out[i] = a[i] + b[i];
  return out;
}

PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
  const int n = common_order(a, b);
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) out[i] = a[i] - b[i];
  return out;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  const int n = common_order(a, b);
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

PowerSeries series_inverse(const PowerSeries& a) {
  if (a[0] != 1) throw std::invalid_argument("series inverse requires constant term 1");
  const int n = a.order();
  PowerSeries out(n);
  out[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Int acc = 0;
    for (int j = 1; j <= i; ++j) acc += a[j] * out[i - j];
    out[i] = -acc;
  }
  return out;
}

std::string to_string(const PowerSeries& s, char var) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= s.order(); ++i) {
    Int c = s[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace dsym
