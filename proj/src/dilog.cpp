#include "alcove/dilog.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace alcove {

namespace {

// B_{2k}/(2k+1)! for k = 1..N, from the Bernoulli recurrence.
constexpr int kTerms = 22;

std::array<double, kTerms> bernoulli_coefficients() {
  std::array<long double, 2 * kTerms + 2> B{};
  B[0] = 1.0L;
  for (int m = 1; m < 2 * kTerms + 2; ++m) {
    long double s = 0.0L;
    long double binom = 1.0L;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += binom * B[static_cast<std::size_t>(k)];
      binom = binom * static_cast<long double>(m + 1 - k) / static_cast<long double>(k + 1);
    }
    B[static_cast<std::size_t>(m)] = -s / static_cast<long double>(m + 1);
  }
  std::array<double, kTerms> out{};
  long double fact = 1.0L;  // (2k+1)!
  int f = 1;
  for (int k = 1; k <= kTerms; ++k) {
    while (f < 2 * k + 1) fact *= static_cast<long double>(++f);
    out[static_cast<std::size_t>(k - 1)] = static_cast<double>(B[static_cast<std::size_t>(2 * k)] / fact);
  }
  return out;
}

const std::array<double, kTerms>& coefficients() {
  static const std::array<double, kTerms> c = bernoulli_coefficients();
  return c;
}

// Li₂ via the Bernoulli series in u = −log(1−z); valid for |z| ≤ 1, Re z ≤ 1/2.
std::complex<double> series(std::complex<double> z) {
  const std::complex<double> u = -std::log(1.0 - z);
  const std::complex<double> u2 = u * u;
  std::complex<double> sum = u - 0.25 * u2;
  std::complex<double> p = u;
  for (double b : coefficients()) {
    p *= u2;
    sum += b * p;
  }
  return sum;
}

}  // namespace

std::complex<double> dilog(std::complex<double> z) {
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  if (z == 0.0) return 0.0;
  if (z == 1.0) return pi2_6;
  if (std::abs(z) > 1.0) {
    const std::complex<double> l = std::log(-z);
    return -dilog(1.0 / z) - pi2_6 - 0.5 * l * l;
  }
  if (z.real() > 0.5) return -series(1.0 - z) + pi2_6 - std::log(z) * std::log(1.0 - z);
  return series(z);
}

}  // namespace alcove
