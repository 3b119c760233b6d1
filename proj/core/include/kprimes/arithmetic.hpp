#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kprimes {

inline constexpr std::int64_t kDefaultSieveMax = 100'000'000;

/// A prime power p^e appearing in a factorization.
struct PrimePower {
  std::int64_t prime;
  int exponent;
};

/// Λ, μ, φ and least-prime-factor tables for 1..limit, built by one linear
/// sieve pass. Index 0 is unused. Immutable after construction.
class SieveTables {
 public:
  explicit SieveTables(std::int64_t limit, std::int64_t max_limit = kDefaultSieveMax);

  std::int64_t limit() const noexcept { return limit_; }

  double lambda(std::int64_t m) const { return lambda_[checked(m)]; }
  int mu(std::int64_t m) const { return mu_[checked(m)]; }
  std::int64_t phi(std::int64_t m) const { return phi_[checked(m)]; }
  /// Least prime factor; 0 for m = 1.
  std::int64_t lpf(std::int64_t m) const { return lpf_[checked(m)]; }

  std::span<const double> lambda_table() const noexcept { return lambda_; }
  std::span<const std::int64_t> primes() const noexcept { return primes_; }

  std::vector<PrimePower> factorize(std::int64_t m) const;

 private:
  std::size_t checked(std::int64_t m) const;

  std::int64_t limit_;
  std::vector<double> lambda_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int32_t> phi_;
  std::vector<std::int32_t> lpf_;
  std::vector<std::int64_t> primes_;
};

SieveTables build_sieve(std::int64_t limit, std::int64_t max_limit = kDefaultSieveMax);

/// c_q(m) by the divisor formula Σ_{d | gcd(q,|m|)} d μ(q/d), with gcd(q,0) = q.
std::int64_t ramanujan_sum(std::int64_t q, std::int64_t m);

/// Sorted divisors of m, m <= tables.limit().
std::vector<std::int64_t> divisors(std::int64_t m, const SieveTables& tables);

// Trial-division helpers for moduli that may exceed any sieve in scope.
std::vector<PrimePower> factorize_small(std::int64_t n);
int moebius_small(std::int64_t n);
std::int64_t totient_small(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Plain Eratosthenes prime list.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod);

}  // namespace kprimes
