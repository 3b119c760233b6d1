#include "kprimes/hurwitz.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "kprimes/errors.hpp"

namespace kprimes {
namespace {

constexpr int kMaxCorrections = 30;
constexpr int kCorrections = 25;

// B_{2j}/(2j)! = (-1)^{j+1} 2 ζ(2j) / (2π)^{2j}
std::array<double, kMaxCorrections + 1> make_bernoulli_table() {
  std::array<double, kMaxCorrections + 1> table{};
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 1; j <= kMaxCorrections; ++j) {
    double zeta_2j = 0.0;
    if (j == 1) {
      zeta_2j = std::numbers::pi * std::numbers::pi / 6.0;
    } else if (j == 2) {
      zeta_2j = std::pow(std::numbers::pi, 4) / 90.0;
    } else {
      for (int n = 200; n >= 1; --n) zeta_2j += std::pow(static_cast<double>(n), -2.0 * j);
    }
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    table[j] = sign * 2.0 * zeta_2j / std::pow(two_pi, 2.0 * j);
  }
  return table;
}

const std::array<double, kMaxCorrections + 1>& bernoulli_table() {
  static const auto table = make_bernoulli_table();
  return table;
}

}  // namespace

double bernoulli_over_factorial(int j) {
  if (j < 1 || j > kMaxCorrections) throw RangeError("bernoulli_over_factorial: j out of range");
  return bernoulli_table()[j];
}

std::complex<double> hurwitz_zeta(std::complex<double> s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw ValidationError("hurwitz_zeta: a must lie in (0, 1]");
  if (std::abs(s - 1.0) < 1e-12) throw ValidationError("hurwitz_zeta: pole at s = 1");
  const auto& bern = bernoulli_table();

  // Successive corrections shrink roughly by (|s + 2j| / (2π(N + a)))^2 <= 1/4.
  const double reach = std::abs(s) + 2.0 * kCorrections;
  const int cutoff = std::max(8, static_cast<int>(std::ceil(reach / std::numbers::pi)));

  std::complex<double> head{0.0, 0.0};
  for (int n = cutoff - 1; n >= 0; --n) head += std::exp(-s * std::log(n + a));

  const double x = cutoff + a;
  const std::complex<double> x_pow = std::exp(-s * std::log(x));  // x^{-s}
  std::complex<double> tail = x * x_pow / (s - 1.0) + 0.5 * x_pow;

  std::complex<double> rising = s * x_pow / x;  // s(s+1)...(s+2j-2) x^{-s-2j+1}
  const double inv_x2 = 1.0 / (x * x);
  for (int j = 1; j <= kCorrections; ++j) {
    if (j > 1) {
      rising *= (s + (2.0 * j - 3.0)) * (s + (2.0 * j - 2.0)) * inv_x2;
    }
    const std::complex<double> term = bern[j] * rising;
    tail += term;
    if (std::abs(term) < 1e-18 * std::abs(head)) break;
  }
  return head + tail;
}

}  // namespace kprimes
