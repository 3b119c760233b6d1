#include "kprimes/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "kprimes/errors.hpp"

namespace kprimes {

SieveTables::SieveTables(std::int64_t limit, std::int64_t max_limit) : limit_(limit) {
  if (limit < 2 || limit > max_limit) {
    throw RangeError("sieve limit " + std::to_string(limit) + " outside [2, " +
                     std::to_string(max_limit) + "]");
  }
  const auto size = static_cast<std::size_t>(limit) + 1;
  lambda_.assign(size, 0.0);
  mu_.assign(size, 0);
  phi_.assign(size, 0);
  lpf_.assign(size, 0);
  mu_[1] = 1;
  phi_[1] = 1;

  for (std::int64_t m = 2; m <= limit; ++m) {
    if (lpf_[m] == 0) {
      lpf_[m] = static_cast<std::int32_t>(m);
      mu_[m] = -1;
      phi_[m] = static_cast<std::int32_t>(m - 1);
      primes_.push_back(m);
    }
    const std::int64_t p_m = lpf_[m];
    for (const std::int64_t p : primes_) {
      if (p > p_m || p * m > limit) break;
      const std::int64_t pm = p * m;
      lpf_[pm] = static_cast<std::int32_t>(p);
      if (p == p_m) {
        mu_[pm] = 0;
        phi_[pm] = static_cast<std::int32_t>(phi_[m] * p);
      } else {
        mu_[pm] = static_cast<std::int8_t>(-mu_[m]);
        phi_[pm] = static_cast<std::int32_t>(phi_[m] * (p - 1));
      }
    }
    // m is a power of p exactly when m / p is 1 or itself a power of p.
    const std::int64_t rest = m / p_m;
    if (rest == 1 || (lpf_[rest] == p_m && lambda_[rest] > 0.0)) {
      lambda_[m] = std::log(static_cast<double>(p_m));
    }
  }
}

std::size_t SieveTables::checked(std::int64_t m) const {
  if (m < 1 || m > limit_) {
    throw RangeError("index " + std::to_string(m) + " outside sieve range [1, " +
                     std::to_string(limit_) + "]");
  }
  return static_cast<std::size_t>(m);
}

std::vector<PrimePower> SieveTables::factorize(std::int64_t m) const {
  checked(m);
  std::vector<PrimePower> out;
  while (m > 1) {
    const std::int64_t p = lpf_[m];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

SieveTables build_sieve(std::int64_t limit, std::int64_t max_limit) {
  return SieveTables(limit, max_limit);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(std::llabs(a), std::llabs(b));
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod == 1) return 0;
  __extension__ typedef __int128 i128;
  i128 result = 1;
  i128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::vector<PrimePower> factorize_small(std::int64_t n) {
  if (n < 1) throw ValidationError("factorize_small: n must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int moebius_small(std::int64_t n) {
  int mu = 1;
  for (const auto& pp : factorize_small(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t totient_small(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& pp : factorize_small(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

bool is_squarefree(std::int64_t n) { return moebius_small(n) != 0; }

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t m) {
  if (q < 1) throw ValidationError("ramanujan_sum: q must be >= 1");
  if (q > (std::int64_t{1} << 40)) throw RangeError("ramanujan_sum: q too large");
  const std::int64_t g = (m == 0) ? q : gcd64(q, m);
  // Divisors of g from its factorization.
  std::vector<std::int64_t> divs{1};
  for (const auto& pp : factorize_small(g)) {
    const std::size_t count = divs.size();
    std::int64_t pk = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::int64_t sum = 0;
  for (const std::int64_t d : divs) sum += d * moebius_small(q / d);
  return sum;
}

std::vector<std::int64_t> divisors(std::int64_t m, const SieveTables& tables) {
  if (m < 1 || m > tables.limit()) {
    throw RangeError("divisors: " + std::to_string(m) + " outside sieve range");
  }
  std::vector<std::int64_t> divs{1};
  for (const auto& pp : tables.factorize(m)) {
    const std::size_t count = divs.size();
    std::int64_t pk = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace kprimes
