#include "kprimes/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace kprimes {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Valid for Re z >= 1/2.
std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  z -= 1.0;
  std::complex<double> series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const std::complex<double> t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  if (z.real() > -20.0) {
    // Recurrence upward keeps the continuous branch: log Γ(z) = log Γ(z+m) - Σ log(z+j).
    std::complex<double> shift{0.0, 0.0};
    while (z.real() < 0.5) {
      shift += std::log(z);
      z += 1.0;
    }
    return lanczos_log_gamma(z) - shift;
  }
  // Reflection for far-left arguments.
  const std::complex<double> pi{std::numbers::pi, 0.0};
  return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
}

std::complex<double> gamma(std::complex<double> z) { return std::exp(log_gamma(z)); }

}  // namespace kprimes
