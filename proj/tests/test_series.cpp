#include <doctest.h>

#include "dsym/dsym.hpp"
#include "dsym/fixtures.hpp"
#include "dsym/series.hpp"

using namespace dsym;

TEST_CASE("series arithmetic basics") {
  PowerSeries one_minus_t(8);
  one_minus_t[0] = 1;
  one_minus_t[1] = -1;
  PowerSeries geo = series_inverse(one_minus_t);
  for (int i = 0; i <= 8; ++i) CHECK(geo[i] == 1);
  CHECK(series_mul(one_minus_t, geo) == PowerSeries::one(8));

  PowerSeries a(4);
  a[0] = 1;
  a[1] = 2;
  a[3] = -1;
  CHECK(series_mul(a, series_inverse(a)) == PowerSeries::one(4));
  CHECK(series_add(a, series_sub(PowerSeries(4), a)) == PowerSeries(4));

  PowerSeries bad(3);
  bad[0] = 2;
  CHECK_THROWS_AS(series_inverse(bad), std::invalid_argument);
  PowerSeries zero(3);
  CHECK_THROWS_AS(series_inverse(zero), std::invalid_argument);
}

TEST_CASE("Hilbert series") {
  PowerSeries h = hilbert_series(3, 6);
  std::vector<long long> expected{1, 1, 2, 6, 18, 54, 162};
  for (int i = 0; i <= 6; ++i) CHECK(h[i] == expected[static_cast<size_t>(i)]);
  for (int k : {1, 2, 3, 4, 5})
    for (int n = 0; n <= 9; ++n) CHECK(hilbert_series(k, 9)[n] == count_codes(k, n));
}

TEST_CASE("generator series against the known sequences") {
  PowerSeries g3 = generator_series(3, 13);
  CHECK(g3[0] == 0);
  for (int n = 1; n <= 13; ++n)
    CHECK(g3[n] == fixtures::kGenerators3[static_cast<size_t>(n - 1)]);
  PowerSeries g4 = generator_series(4, 13);
  for (int n = 1; n <= 13; ++n)
    CHECK(g4[n] == fixtures::kGenerators4[static_cast<size_t>(n - 1)]);
  // 1/(1 - G_k) = H_k.
  for (int k : {2, 3, 4, 5}) {
    PowerSeries g = generator_series(k, 10);
    PowerSeries one_minus_g = series_sub(PowerSeries::one(10), g);
    CHECK(series_mul(hilbert_series(k, 10), one_minus_g) == PowerSeries::one(10));
  }
}

TEST_CASE("series rendering") {
  PowerSeries s(3);
  s[0] = 1;
  s[1] = 1;
  s[2] = 2;
  CHECK(to_string(s) == "1 + t + 2*t^2");
  CHECK(to_string(PowerSeries(2)) == "0");
}
