#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kprimes/arithmetic.hpp"
#include "kprimes/characters.hpp"
#include "kprimes/convolution.hpp"
#include "kprimes/errors.hpp"
#include "kprimes/lfunc.hpp"
#include "kprimes/zero_store.hpp"

namespace kprimes {

/// ψ_j(x, χ) = (1/j!) Σ_{m<=x} (x-m)^j Λ(m) χ(m).
std::complex<double> psi_j(double x, int j, const DirichletCharacter& chi, const SieveTables& tables);

struct PsiExplicit {
  std::complex<double> value;     // main - zero_sum
  std::complex<double> main;      // δ(χ) x^{j+1}/(j+1)!
  std::complex<double> zero_sum;  // Σ_{|γ|<=T} x^{ρ+j}/(ρ(ρ+1)⋯(ρ+j))
  std::size_t zeros_used = 0;
  double tail_estimate = 0.0;     // x^{j+1/2} T^{-j} log(qT)
  double error_scale = 0.0;       // x^j E(q, x)
};

/// Truncated zero-sum form of ψ_j for j >= 1. `zeros` and `conjugate_zeros` are the
/// lists of the primitive character inducing χ and of its conjugate.
PsiExplicit psi_j_explicit(double x, int j, const DirichletCharacter& chi, const ZeroList& zeros,
                           const ZeroList& conjugate_zeros, double height);

/// Σ_{|γ|<=T} n^{ρ+j}/(ρ(ρ+1)⋯(ρ+j)) over the given signed ordinates.
std::complex<double> zero_power_sum(double x, int j, const std::vector<double>& signed_ordinates);

struct SecondaryTerm {
  std::complex<double> value;
  std::vector<std::pair<std::int64_t, std::complex<double>>> per_q;  // contribution of each squarefree q
  double q_tail = 0.0;     // Q^{1-k} n^{k-3/2}
  double zero_tail = 0.0;  // n^{k-3/2} T^{2-k} log(QT)
  std::size_t characters = 0;
  std::vector<std::string> warnings;
};

/// Characters of squarefree moduli <= Q with their Gauss sums and the signed
/// ordinates of their inducing primitive characters, for repeated evaluation.
class SecondaryTermContext {
 public:
  /// Throws DependencyError listing every missing (q1, χ) key.
  SecondaryTermContext(std::int64_t Q, double height, const ZeroStore& zeros);

  std::int64_t level() const noexcept { return Q_; }
  double height() const noexcept { return T_; }
  SecondaryTerm evaluate(std::int64_t n, int k) const;

 private:
  struct Entry {
    DirichletCharacter chi;
    std::complex<double> tau_conj;  // τ(χ̄)
    std::size_t zero_set;
  };
  struct Modulus {
    std::int64_t q;
    int mu;
    std::int64_t phi;
    std::vector<Entry> entries;
  };

  std::int64_t Q_;
  double T_;
  std::vector<Modulus> moduli_;
  std::vector<std::vector<double>> zero_sets_;  // signed ordinates per primitive key
  std::vector<std::string> warnings_;
};

/// -k Σ_{q<=Q} μ(q)^{k-1}/φ(q)^k Σ_χ c_χ(-n) τ(χ̄) Σ_{|γ|<=T} n^{ρ+k-2}/(ρ⋯(ρ+k-2)).
SecondaryTerm secondary_term(std::int64_t n, int k, std::int64_t Q, double height, const ZeroStore& zeros);

struct IntegralIdentityCheck {
  std::complex<double> composition_form;  // Fourier coefficient via k-1 convolutions
  std::complex<double> binomial_form;     // e^{-n/N} Σ (Λχ(m) - δ) C(n-1-m, k-2)
  double residual = 0.0;
  double scale = 0.0;                     // e^{-n/N} Σ |Λχ(m) - δ| C(n-1-m, k-2)
};

IntegralIdentityCheck w_integral_identity_check(std::int64_t n, int k, const DirichletCharacter& chi,
                                                std::int64_t N, const SieveTables& tables,
                                                const ConvolutionBudget& budget = {});

struct ExplicitFormulaReport {
  std::int64_t n = 0;
  int k = 0;
  std::int64_t Q = 0;
  double T = 0.0;
  double r_exact = 0.0;
  double main = 0.0;
  double singular_series = 0.0;
  double singular_series_log_tail = 0.0;
  std::complex<double> secondary;
  double residual = 0.0;
  double ratio_74 = 0.0;
  double ratio_2 = 0.0;
  double ratio_2log2 = 0.0;
  double q_tail = 0.0;
  double zero_tail = 0.0;
  double rounding_bound = 0.0;  // k·n·2^-52·R_k(n)
  bool parity = false;          // n ≢ k (mod 2): the main term vanishes
  bool imaginary_ok = true;     // |Im| <= 1e-6|Re| + 1e-6 n^{k-3/2}
  std::int64_t requested_Q = 0;
  bool level_capped = false;    // the default level was lowered to the available zero data
  std::vector<std::pair<std::int64_t, std::complex<double>>> per_q;
  std::vector<std::string> warnings;
};

struct FormulaOptions {
  std::int64_t p_max = 1'000'000;  // Euler product cutoff for the main term
  unsigned threads = 1;
  ConvolutionBudget budget{};
};

struct SweepRow {
  std::int64_t n = 0;
  std::optional<ExplicitFormulaReport> report;
  std::optional<ErrorKind> error_kind;
  std::string error;
};

/// Shares one sieve and one R_k table across reports for n <= n_max.
class ExplicitFormulaEngine {
 public:
  ExplicitFormulaEngine(int k, std::int64_t n_max, const ZeroStore& zeros, FormulaOptions options = {});

  int k() const noexcept { return k_; }
  std::int64_t n_max() const noexcept { return n_max_; }
  const SieveTables& tables() const noexcept { return *tables_; }
  double r_exact(std::int64_t n) const;

  /// ⌊√n/2⌋ lowered to the largest level whose zero lists are all present to height T.
  std::int64_t default_level(std::int64_t n, double height, bool* capped = nullptr) const;

  ExplicitFormulaReport report(std::int64_t n, std::int64_t Q, double height) const;
  ExplicitFormulaReport report(std::int64_t n, const SecondaryTermContext& context) const;

  /// Rows in the order of `ns`; failures are recorded per row.
  std::vector<SweepRow> sweep(const std::vector<std::int64_t>& ns, std::int64_t Q, double height) const;

 private:
  int k_;
  std::int64_t n_max_;
  const ZeroStore* zeros_;
  FormulaOptions options_;
  std::shared_ptr<const SieveTables> tables_;
  std::vector<double> rk_;
};

ExplicitFormulaReport explicit_formula_report(std::int64_t n, int k, std::int64_t Q, double height,
                                              const ZeroStore& zeros, const FormulaOptions& options = {});

}  // namespace kprimes
