#pragma once

#include <random>
#include <vector>

#include "frobq/qseries.hpp"

// Small independent reference computations used to pin expected values in
// tests. Everything here is deliberately naive and self-contained.
namespace frobq::testing {

// p(0..nmax) via Euler's pentagonal-number recurrence.
inline std::vector<Int> partition_numbers(int nmax) {
  std::vector<Int> p(static_cast<size_t>(nmax) + 1);
  p[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    Int acc = 0;
    for (int j = 1;; ++j) {
      long long g1 = static_cast<long long>(j) * (3 * j - 1) / 2;
      long long g2 = static_cast<long long>(j) * (3 * j + 1) / 2;
      if (g1 > n && g2 > n) break;
      int sign = (j % 2 == 1) ? 1 : -1;
      if (g1 <= n) acc += sign * p[n - g1];
      if (g2 <= n) acc += sign * p[n - g2];
    }
    p[n] = acc;
  }
  return p;
}

// Number of integer pairs (x, y) with x^2 + y^2 = n.
inline long long two_squares_count(long long n) {
  long long count = 0;
  for (long long x = 0; x * x <= n; ++x) {
    long long rem = n - x * x;
    long long y = 0;
    while (y * y < rem) ++y;
    if (y * y != rem) continue;
    count += (x == 0 ? 1 : 2) * (y == 0 ? 1 : 2);
  }
  return count;
}

// Series with the given integer coefficients at q^0, q^1, ... and integer
// precision prec.
inline QSeries int_series(const std::vector<long long>& coeffs, long long prec) {
  std::vector<std::pair<long long, Rat>> terms;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.emplace_back(static_cast<long long>(i), make_rat(coeffs[i]));
  return QSeries::from_terms(1, terms, make_rat(prec));
}

// Random series on the q^(1/denom) grid with coefficients in [-5, 5].
inline QSeries random_series(std::mt19937& rng, long long denom, Rat prec,
                             bool unit = false) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  long long limit = rat_ceil(prec * make_int(denom)) - 1;
  std::vector<std::pair<long long, Rat>> terms;
  for (long long e = 0; e <= limit; ++e) {
    int c = coeff(rng);
    if (c != 0) terms.emplace_back(e, Rat(c));
  }
  if (unit) {
    if (terms.empty() || terms.front().first != 0)
      terms.emplace_back(0, Rat(1));
    else if (terms.front().second == 0)
      terms.front().second = 1;
  }
  return QSeries::from_terms(denom, terms, prec);
}

}  // namespace frobq::testing
