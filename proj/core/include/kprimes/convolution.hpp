#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "kprimes/arithmetic.hpp"

namespace kprimes {

struct ConvolutionBudget {
  double max_operations = 5e9;  // multiply-adds allowed per call
};

/// c[n] = Σ_{m=0}^{n} a[m] b[n-m] for n < length, compensated summation.
std::vector<double> truncated_convolve(const std::vector<double>& a, const std::vector<double>& b,
                                       std::size_t length);
std::vector<std::complex<double>> truncated_convolve(const std::vector<std::complex<double>>& a,
                                                     const std::vector<std::complex<double>>& b,
                                                     std::size_t length);

/// R_k(n) for n = 0..n_max: k-1 successive convolutions of Λ with itself, run over
/// the prime powers only. Rounding is at most about k·n·2^-52 relative.
/// Throws RangeError when n_max exceeds the sieve or the work exceeds the budget.
std::vector<double> rk_table(std::int64_t n_max, int k, const SieveTables& tables,
                             const ConvolutionBudget& budget = {});

double rk_exact(std::int64_t n, int k, const SieveTables& tables, const ConvolutionBudget& budget = {});

}  // namespace kprimes
