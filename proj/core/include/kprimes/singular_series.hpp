#pragma once

#include <cstdint>

#include "kprimes/arithmetic.hpp"

namespace kprimes {

struct EulerSingularSeries {
  double value = 0.0;
  double log_tail_bound = 0.0;  // |log of the omitted factors p > p_max|
  std::int64_t p_max = 0;
};

/// Π_{p|n}(1 - (-1/(p-1))^{k-1}) · Π_{p∤n}(1 - (-1/(p-1))^k) over p <= p_max.
EulerSingularSeries singular_series_euler(std::int64_t n, int k, std::int64_t p_max);

struct RamanujanSingularSeries {
  double value = 0.0;
  double tail_bound = 0.0;     // Σ_{d|n} d^k μ²(d)/φ(d)^k · C_k · Q^{1-k}
  double tail_constant = 0.0;  // C_k
  std::int64_t Q = 0;
};

/// Σ_{q<=Q} μ(q)^k φ(q)^{-k} c_q(-n). Needs Q <= tables.limit(); the tail bound
/// is available for 3 <= k <= 11.
RamanujanSingularSeries singular_series_ramanujan(std::int64_t n, int k, std::int64_t Q, const SieveTables& tables);

/// C_k with Σ_{q>R} μ²(q)/φ(q)^k <= C_k R^{1-k} for all real R > 0 (3 <= k <= 11).
double ramanujan_tail_constant(int k);

}  // namespace kprimes
