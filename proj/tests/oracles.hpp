#pragma once

#include <cmath>
#include <numbers>

namespace oracle {

/// h_k(x) from the explicit sum for the physicists' polynomial, in long double.
inline double hermite_explicit(int k, double xd) {
  const long double x = xd;
  long double sum = 0.0L;
  for (int m = 0; m <= k / 2; ++m) {
    const long double term = std::pow(2.0L * x, k - 2 * m) / (std::tgamma(m + 1.0L) * std::tgamma(k - 2 * m + 1.0L));
    sum += (m % 2 ? -term : term);
  }
  const long double hk = std::tgamma(k + 1.0L) * sum;
  const long double norm = std::sqrt(std::pow(2.0L, k) * std::tgamma(k + 1.0L) * std::sqrt(std::numbers::pi_v<long double>));
  return static_cast<double>(hk * std::exp(-x * x / 2.0L) / norm);
}

/// int x^k exp(-x^2) dx over R.
inline double gaussian_moment(int k) { return k % 2 ? 0.0 : std::tgamma((k + 1) / 2.0); }

}  // namespace oracle
