#include "kprimes/convolution.hpp"

#include <string>

#include "kprimes/errors.hpp"
#include "summation.hpp"

namespace kprimes {
namespace {

template <class T, class Sum>
std::vector<T> convolve_dense(const std::vector<T>& a, const std::vector<T>& b, std::size_t length) {
  std::vector<T> out(length, T{});
  for (std::size_t n = 0; n < length; ++n) {
    Sum acc;
    const std::size_t hi = std::min(n, a.size() ? a.size() - 1 : 0);
    for (std::size_t m = 0; m <= hi && m < a.size(); ++m) {
      if (n - m < b.size()) acc.add(a[m] * b[n - m]);
    }
    out[n] = acc.value();
  }
  return out;
}

}  // namespace

std::vector<double> truncated_convolve(const std::vector<double>& a, const std::vector<double>& b,
                                       std::size_t length) {
  return convolve_dense<double, detail::CompensatedSum>(a, b, length);
}

std::vector<std::complex<double>> truncated_convolve(const std::vector<std::complex<double>>& a,
                                                     const std::vector<std::complex<double>>& b,
                                                     std::size_t length) {
  return convolve_dense<std::complex<double>, detail::CompensatedComplexSum>(a, b, length);
}

std::vector<double> rk_table(std::int64_t n_max, int k, const SieveTables& tables, const ConvolutionBudget& budget) {
  if (k < 1) throw ValidationError("rk_table: k must be >= 1");
  if (n_max < 0) throw ValidationError("rk_table: n must be >= 0");
  if (n_max > tables.limit()) {
    throw RangeError("n = " + std::to_string(n_max) + " exceeds the sieve limit " + std::to_string(tables.limit()));
  }
  std::vector<std::int64_t> powers;
  for (std::int64_t m = 2; m <= n_max; ++m) {
    if (tables.lambda(m) > 0.0) powers.push_back(m);
  }
  const double work = static_cast<double>(k - 1) * static_cast<double>(n_max + 1) *
                      static_cast<double>(powers.size()) / 2.0;
  if (work > budget.max_operations) {
    throw RangeError("R_k convolution needs about " + std::to_string(work) + " operations, budget is " +
                     std::to_string(budget.max_operations));
  }
  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<double> current(size, 0.0);
  for (const auto m : powers) current[static_cast<std::size_t>(m)] = tables.lambda(m);
  for (int step = 1; step < k; ++step) {
    std::vector<double> next(size, 0.0);
    for (std::size_t n = 0; n < size; ++n) {
      detail::CompensatedSum acc;
      for (const auto m : powers) {
        const auto um = static_cast<std::size_t>(m);
        if (um > n) break;
        const double c = current[n - um];
        if (c != 0.0) acc.add(tables.lambda(m) * c);
      }
      next[n] = acc.value();
    }
    current.swap(next);
  }
  return current;
}

double rk_exact(std::int64_t n, int k, const SieveTables& tables, const ConvolutionBudget& budget) {
  if (n < 0) throw ValidationError("rk_exact: n must be >= 0");
  return rk_table(n, k, tables, budget).back();
}

}  // namespace kprimes
