#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "kprimes/characters.hpp"

namespace kprimes {

struct LFunctionLimits {
  std::int64_t max_conductor = 100;
  double max_height = 1e4;
};

/// L(1/2 + it, χ) for primitive χ via L(s,χ) = q^{-s} Σ_a χ(a) ζ(s, a/q).
std::complex<double> l_value(const DirichletCharacter& chi, double t, const LFunctionLimits& limits = {});

/// L(s, χ) at a general point s != 1 (same decomposition, no primitivity requirement).
std::complex<double> l_value_at(const DirichletCharacter& chi, std::complex<double> s);

/// The real-valued rotation of L on the critical line, built from the completed
/// L-function: Z(t) = ε^{-1/2} (q/π)^{it/2} e^{i arg Γ((1/2+κ+it)/2)} L(1/2+it, χ).
/// For the principal character mod 1 this is Hardy's Z function.
class RotatedL {
 public:
  explicit RotatedL(const DirichletCharacter& chi, const LFunctionLimits& limits = {});

  const DirichletCharacter& character() const noexcept { return chi_; }
  std::complex<double> root_number() const noexcept { return root_number_; }

  /// Z(t); real up to rounding.
  double operator()(double t) const { return rotated(t).real(); }
  /// The rotated value before dropping its (vanishing) imaginary part.
  std::complex<double> rotated(double t) const;
  std::complex<double> l(double t) const { return l_value(chi_, t, limits_); }

  /// Smooth zero-counting term for 0 < γ <= T:
  /// (1/π)[(T/2) log(q/π) + Im log Γ((1/2+κ+iT)/2)] (+1 for ζ).
  double count_main(double height) const;

 private:
  DirichletCharacter chi_;
  LFunctionLimits limits_;
  int kappa_;
  std::complex<double> root_number_;
  std::complex<double> half_root_inverse_;
};

/// Identity of a zero list: ζ (conductor 1) or a primitive character mod q1.
struct ZeroKey {
  std::int64_t conductor = 1;
  std::vector<std::int64_t> exponents;

  bool is_zeta() const noexcept { return conductor == 1; }
  /// "zeta" or "q=<q1> chi=<e1,e2,...>".
  std::string describe() const;
  /// "zeta.zeros" or "q<q1>_chi<e1-e2-...>.zeros".
  std::string filename() const;
  DirichletCharacter character() const;

  static ZeroKey zeta() { return {}; }
  static ZeroKey of(const DirichletCharacter& primitive_chi);

  auto operator<=>(const ZeroKey&) const = default;
};

enum class ZeroSource { computed, imported };

struct ZeroList {
  ZeroKey key;
  std::vector<double> ordinates;  // strictly increasing, in (0, height]
  double height = 0.0;
  ZeroSource source = ZeroSource::computed;
  bool self_dual = true;  // ζ and real χ: zeros symmetric under γ -> -γ
};

struct ZeroSearchOptions {
  double step = 0.05;           // initial scan step
  int refinement_passes = 4;    // scan-step halvings before giving up
  double tolerance = 1e-9;      // bisection width
  double validation_tolerance = 1e-6;
  double count_slack = 2.0;
  LFunctionLimits limits{};
};

ZeroList zeta_zeros(double height, const ZeroSearchOptions& options = {});

/// Zeros on (0, T] of L(s, χ) for primitive χ; the rotated function's sign
/// changes are bisected and the count is cross-checked against the smooth
/// counting term.
ZeroList l_zeros(const DirichletCharacter& chi, double height, const ZeroSearchOptions& options = {});

/// Checks the zero-count contract: |#{γ <= t} - count_main(t)| <= slack at every
/// jump and at the height. On failure fills the suspect interval.
bool zero_count_consistent(const std::vector<double>& ordinates, double height, const RotatedL& z,
                           double slack, double* bad_lo = nullptr, double* bad_hi = nullptr);

struct ZeroValidation {
  bool ordered = true;
  bool bracketed = true;
  bool small_value = true;
  bool count_ok = true;
  double max_abs_l = 0.0;
  bool ok() const noexcept { return ordered && bracketed && small_value && count_ok; }
};

/// Re-checks a zero list against freshly evaluated L-values.
ZeroValidation validate_zero_list(const ZeroList& zeros, const ZeroSearchOptions& options = {});

/// Signed ordinates with |γ| <= T for the character whose positive zeros are
/// `positive`; the negative side comes from `conjugate` (the list of χ̄), which
/// for self-dual lists is the same list.
std::vector<double> signed_ordinates(const ZeroList& positive, const ZeroList& conjugate, double height);

}  // namespace kprimes
