#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kprimes/arithmetic.hpp"
#include "kprimes/characters.hpp"
#include "kprimes/farey.hpp"
#include "kprimes/lfunc.hpp"
#include "kprimes/quadrature.hpp"

namespace kprimes {

struct CircleConfig {
  std::int64_t N = 100;
  std::int64_t Q = 5;
  double epsilon = 1e-12;    // S̃ truncated where e^{-m/N} < ε
  int quadrature_order = 16; // Gauss–Legendre points per panel
  unsigned threads = 1;

  /// 1 <= Q <= N, ε in (0, 1e-8], order in [2, 128]; ValidationError otherwise.
  void validate() const;
  /// M = ⌈N ln(1/ε)⌉.
  std::int64_t truncation() const;
  /// ⌊√N / 2⌋, at least 1.
  static std::int64_t canonical_level(std::int64_t N);
};

/// z = 1/N - 2πiη.
std::complex<double> z_of_eta(double eta, std::int64_t N);
/// V(η) = 1/(e^z - 1).
std::complex<double> v_of_eta(double eta, std::int64_t N);

/// Σ_{m<=M} Λ(m) χ(m) e^{-m/N} e(mα) with the coefficients precomputed.
class SmoothedSum {
 public:
  SmoothedSum(const CircleConfig& cfg, const SieveTables& tables);
  SmoothedSum(const CircleConfig& cfg, const SieveTables& tables, const DirichletCharacter& chi);

  std::complex<double> operator()(double alpha) const;
  std::int64_t truncation() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Bound on the dropped tail Σ_{m>M} log(m) e^{-m/N}.
  double tail_bound() const noexcept { return tail_bound_; }
  /// Σ |coefficient|^2, the Parseval side.
  double sum_of_squares() const;

 private:
  void build(const CircleConfig& cfg, const SieveTables& tables, const DirichletCharacter* chi);

  std::int64_t N_ = 1;
  std::vector<std::complex<double>> coeffs_;  // index m = 0..M
  double tail_bound_ = 0.0;
};

/// S̃(α). Throws RangeError if the sieve does not reach the truncation point.
std::complex<double> s_tilde(double alpha, const CircleConfig& cfg, const SieveTables& tables);

enum class WVariant { V, z };

/// W(χ, η, V or z) = Σ Λ(ℓ)χ(ℓ)e^{-ℓ/N}e(ℓη) - δ(χ)·{V(η) or 1/z}.
std::complex<double> w_sum(const DirichletCharacter& chi, double eta, const CircleConfig& cfg,
                           const SieveTables& tables, WVariant variant);

/// Σ_ρ z^{-ρ} Γ(ρ) over ρ = 1/2 + iγ for the given signed ordinates.
std::complex<double> zero_gamma_sum(std::complex<double> z, const std::vector<double>& signed_ordinates);

struct BoundProbeReport {
  std::string probe;
  CircleConfig config;
  double measured = 0.0;
  double bound = 0.0;
  std::string bound_expression;
  double ratio = 0.0;
  std::string sample;
  std::vector<std::pair<std::string, double>> extras;
};

/// |W(χ,η,z) + Σ_{|γ|<=T} z^{-ρ}Γ(ρ)| against 1 + log²q plus an estimate of the
/// zero-truncation tail. `conjugate_zeros` supplies the negative ordinates
/// (pass `zeros` again for real χ).
BoundProbeReport linnik_probe(const DirichletCharacter& chi, double eta, const CircleConfig& cfg,
                              const ZeroList& zeros, const ZeroList& conjugate_zeros, double height,
                              const SieveTables& tables);

/// Empirical S*(Q): max over arcs and sampled η of |S̃(a/q+η) - μ(q)/(φ(q)z)|.
BoundProbeReport max_residual_probe(const CircleConfig& cfg, int samples_per_arc, const SieveTables& tables);

/// Three records: Σ∫|μ/(φz)|² (closed form) and Σ∫|S̃ - μ/(φz)|² (quadrature) against
/// N log N, and the largest per-q integral over [-1/(qQ), 1/(qQ)] against (N/Q) log² N.
std::vector<BoundProbeReport> mean_square_probe(const CircleConfig& cfg, const SieveTables& tables);

/// ∫_ξ e(-ℓη)/z^k dη against e^{-ℓ/N} ℓ^{k-1}/(k-1)!, error scaled by (qQ)^{k-1}.
BoundProbeReport main_term_arc_integral(std::int64_t ell, int k, const CircleConfig& cfg, const FareyArc& arc);

struct ParsevalCheck {
  double quadrature = 0.0;
  double exact = 0.0;  // Σ Λ(m)² e^{-2m/N}
  double relative_error = 0.0;
};

/// ∫|S̃|² over the Farey cover of level Q against the coefficient sum.
ParsevalCheck parseval_check(const CircleConfig& cfg, const SieveTables& tables);

struct DecompositionCheck {
  std::complex<double> integral;
  double expected = 0.0;  // e^{-n/N} R_k(n)
  double relative_error = 0.0;
};

/// ∫ over the Farey cover of S̃(α)^k e(-nα) dα against e^{-n/N} R_k(n).
DecompositionCheck decomposition_check(std::int64_t n, int k, const CircleConfig& cfg, const SieveTables& tables);

/// Random η in (-1/2, 1/2]: max |V - 1/z| and max |V| / min(N, 1/|η|).
std::vector<BoundProbeReport> v_bound_scan(std::int64_t N, int samples, std::uint64_t seed);

/// Breakpoints of (lo, hi] with the extra splits at ±1/N that fall inside.
std::vector<double> arc_breakpoints(double lo, double hi, std::int64_t N);

}  // namespace kprimes
