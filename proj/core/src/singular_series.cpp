#include "kprimes/singular_series.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "kprimes/errors.hpp"

namespace kprimes {
namespace {

// 1.25 × sup_m (m+1)^{k-1} Σ_{q>m} μ²(q)/φ(q)^k, the sup measured over m < 10^5
// with the sums taken to 10^6; k = 3..11.
constexpr std::array<double, 9> kTailConstants{7.5, 19.0, 53.0, 155.0, 470.0, 1710.0, 6300.0, 23400.0, 87000.0};

std::shared_ptr<const std::vector<std::int64_t>> primes_cached(std::int64_t limit) {
  static std::mutex mutex;
  static std::shared_ptr<const std::vector<std::int64_t>> cache;
  static std::int64_t cached_limit = 0;
  std::lock_guard lock(mutex);
  if (!cache || cached_limit < limit) {
    cache = std::make_shared<const std::vector<std::int64_t>>(primes_up_to(limit));
    cached_limit = limit;
  }
  return cache;
}

double power_of_neg_inverse(std::int64_t p, int e) {
  const double base = -1.0 / static_cast<double>(p - 1);
  return std::pow(base, e);
}

}  // namespace

EulerSingularSeries singular_series_euler(std::int64_t n, int k, std::int64_t p_max) {
  if (n < 1) throw ValidationError("singular series: n must be >= 1");
  if (k < 3) throw ValidationError("singular series: k must be >= 3");
  if (p_max < 2) throw ValidationError("singular series: p_max must be >= 2");
  const auto primes = primes_cached(p_max);
  EulerSingularSeries out;
  out.p_max = p_max;
  double value = 1.0;
  for (const auto p : *primes) {
    if (p > p_max) break;
    const int e = (n % p == 0) ? k - 1 : k;
    value *= 1.0 - power_of_neg_inverse(p, e);
    if (value == 0.0) break;
  }
  out.value = value;
  // Σ_{p>p_max} 2/(p-1)^k <= 2/((k-1)(p_max-1)^{k-1}); prime divisors of n beyond
  // p_max enter with exponent k-1 instead.
  const double pm = static_cast<double>(p_max - 1);
  out.log_tail_bound = 2.0 / ((k - 1) * std::pow(std::max(pm, 1.0), k - 1));
  for (const auto& pp : factorize_small(n)) {
    if (pp.prime > p_max) out.log_tail_bound += 2.0 * std::abs(power_of_neg_inverse(pp.prime, k - 1));
  }
  return out;
}

double ramanujan_tail_constant(int k) {
  if (k < 3 || k > 11) throw RangeError("Ramanujan-series tail constant is calibrated for 3 <= k <= 11, got k = " + std::to_string(k));
  return kTailConstants[static_cast<std::size_t>(k - 3)];
}

RamanujanSingularSeries singular_series_ramanujan(std::int64_t n, int k, std::int64_t Q, const SieveTables& tables) {
  if (n < 1) throw ValidationError("singular series: n must be >= 1");
  if (k < 3) throw ValidationError("singular series: k must be >= 3");
  if (Q < 1) throw ValidationError("singular series: Q must be >= 1");
  if (Q > tables.limit()) {
    throw RangeError("Q = " + std::to_string(Q) + " exceeds the sieve limit " + std::to_string(tables.limit()));
  }
  RamanujanSingularSeries out;
  out.Q = Q;
  double acc = 0.0;
  double comp = 0.0;
  for (std::int64_t q = 1; q <= Q; ++q) {
    const int mu = tables.mu(q);
    if (mu == 0) continue;
    // c_q(-n) = Π_{p|q} c_p(n) for squarefree q, with c_p(n) = p-1 or -1.
    double c = 1.0;
    for (const auto& pp : tables.factorize(q)) c *= (n % pp.prime == 0) ? static_cast<double>(pp.prime - 1) : -1.0;
    const double sign = (k % 2 == 1) ? mu : 1.0;
    const double term = sign * c / std::pow(static_cast<double>(tables.phi(q)), k);
    const double t = acc + term;
    comp += (std::abs(acc) >= std::abs(term)) ? (acc - t) + term : (term - t) + acc;
    acc = t;
  }
  out.value = acc + comp;

  out.tail_constant = ramanujan_tail_constant(k);
  // Squarefree divisors d of n: Π over chosen primes of (p/(p-1))^k.
  double divisor_sum = 1.0;
  for (const auto& pp : factorize_small(n)) {
    divisor_sum *= 1.0 + std::pow(static_cast<double>(pp.prime) / static_cast<double>(pp.prime - 1), k);
  }
  out.tail_bound = divisor_sum * out.tail_constant * std::pow(static_cast<double>(Q), 1 - k);
  return out;
}

}  // namespace kprimes
