#include "kprimes/formula.hpp"
#include "kprimes/zero_io.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "kprimes/singular_series.hpp"
#include "parallel.hpp"
#include "summation.hpp"

namespace kprimes {
namespace {

double factorial(int j) {
  double f = 1.0;
  for (int i = 2; i <= j; ++i) f *= i;
  return f;
}

double binomial(std::int64_t n, int r) {
  if (r < 0 || n < r) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= r; ++i) out = out * static_cast<double>(n - r + i) / i;
  return std::round(out);
}

void check_zero_list(const ZeroList& zeros, const ZeroKey& expected, double height) {
  if (zeros.key != expected) {
    throw ValidationError("zero list is for " + zeros.key.describe() + ", expected " + expected.describe());
  }
  if (zeros.height < height) {
    throw DependencyError("zeros for " + zeros.key.describe() + " only reach height " +
                          format_ordinate(zeros.height) + ", need " + format_ordinate(height));
  }
}

// ⌊√n/2⌋, at least 1.
std::int64_t canonical_level(std::int64_t n) {
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n)) / 2.0)));
}

}  // namespace

std::complex<double> psi_j(double x, int j, const DirichletCharacter& chi, const SieveTables& tables) {
  if (!(x >= 2.0)) throw ValidationError("psi_j: x must be >= 2");
  if (j < 0) throw ValidationError("psi_j: j must be >= 0");
  const auto top = static_cast<std::int64_t>(std::floor(x));
  if (top > tables.limit()) {
    throw RangeError("psi_j: x = " + std::to_string(x) + " exceeds the sieve limit " + std::to_string(tables.limit()));
  }
  detail::CompensatedComplexSum acc;
  for (std::int64_t m = 2; m <= top; ++m) {
    const double lam = tables.lambda(m);
    if (lam == 0.0) continue;
    const CharValue v = chi.value(m);
    if (v.zero) continue;
    acc.add(std::pow(x - static_cast<double>(m), j) * lam * v.value());
  }
  return acc.value() / factorial(j);
}

std::complex<double> zero_power_sum(double x, int j, const std::vector<double>& signed_ordinates) {
  const double log_x = std::log(x);
  const double scale = std::pow(x, j + 0.5);
  detail::CompensatedComplexSum acc;
  for (const double gamma : signed_ordinates) {
    const std::complex<double> rho{0.5, gamma};
    std::complex<double> denom = rho;
    for (int i = 1; i <= j; ++i) denom *= rho + static_cast<double>(i);
    acc.add(std::polar(scale, gamma * log_x) / denom);
  }
  return acc.value();
}

PsiExplicit psi_j_explicit(double x, int j, const DirichletCharacter& chi, const ZeroList& zeros,
                           const ZeroList& conjugate_zeros, double height) {
  if (j < 1) throw ValidationError("psi_j_explicit: j must be >= 1 (j = 0 needs symmetric summation)");
  if (!(x >= 2.0)) throw ValidationError("psi_j_explicit: x must be >= 2");
  const DirichletCharacter primitive = primitive_inducing(chi);
  check_zero_list(zeros, ZeroKey::of(primitive), height);
  check_zero_list(conjugate_zeros, ZeroKey::of(primitive.conjugate()), height);

  PsiExplicit out;
  const auto ordinates = signed_ordinates(zeros, conjugate_zeros, height);
  out.zeros_used = ordinates.size();
  out.main = chi.is_principal() ? std::pow(x, j + 1) / factorial(j + 1) : 0.0;
  out.zero_sum = zero_power_sum(x, j, ordinates);
  out.value = out.main - out.zero_sum;
  const double q = static_cast<double>(chi.modulus());
  out.tail_estimate = std::pow(x, j + 0.5) * std::pow(height, -j) * std::log(std::max(q * height, 2.0));
  const double e_q = chi.is_primitive() ? 1.0 + std::pow(std::log(q), 2)
                                        : std::log(x) * std::log(q) + std::pow(std::log(q), 2);
  out.error_scale = std::pow(x, j) * e_q;
  return out;
}

SecondaryTermContext::SecondaryTermContext(std::int64_t Q, double height, const ZeroStore& zeros)
    : Q_(Q), T_(height) {
  if (Q < 1) throw ValidationError("secondary term: Q must be >= 1");
  if (!(height >= 0.0)) throw ValidationError("secondary term: T must be >= 0");
  std::map<ZeroKey, std::size_t> index;
  std::vector<std::string> missing;
  auto zero_set_for = [&](const DirichletCharacter& chi) -> std::size_t {
    const DirichletCharacter primitive = primitive_inducing(chi);
    const ZeroKey key = ZeroKey::of(primitive);
    if (auto it = index.find(key); it != index.end()) return it->second;
    const ZeroKey conj_key = ZeroKey::of(primitive.conjugate());
    const ZeroList* pos = zeros.find(key, height);
    const ZeroList* neg = zeros.find(conj_key, height);
    if (!pos) missing.push_back(key.describe());
    if (!neg && conj_key != key) missing.push_back(conj_key.describe());
    std::vector<double> ordinates;
    if (pos && neg) {
      ordinates = signed_ordinates(*pos, *neg, height);
      if (ordinates.empty()) {
        warnings_.push_back("no zeros of " + key.describe() + " up to height " + format_ordinate(height) +
                            "; contribution is zero");
      }
    }
    zero_sets_.push_back(std::move(ordinates));
    index.emplace(key, zero_sets_.size() - 1);
    return zero_sets_.size() - 1;
  };

  for (std::int64_t q = 1; q <= Q; ++q) {
    const int mu = moebius_small(q);
    if (mu == 0) continue;
    Modulus mod{q, mu, totient_small(q), {}};
    for (const auto& chi : characters_mod(q)) {
      const std::size_t set = zero_set_for(chi);
      mod.entries.push_back(Entry{chi, gauss_sum(chi.conjugate()), set});
    }
    moduli_.push_back(std::move(mod));
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : "; ") + m;
    throw DependencyError("missing zero lists up to height " + format_ordinate(height) + " for: " + list);
  }
}

SecondaryTerm SecondaryTermContext::evaluate(std::int64_t n, int k) const {
  if (k < 2) throw ValidationError("secondary term: k must be >= 2");
  if (n < 1) throw ValidationError("secondary term: n must be >= 1");
  SecondaryTerm out;
  out.warnings = warnings_;
  const double x = static_cast<double>(n);
  std::vector<std::complex<double>> sums(zero_sets_.size());
  std::vector<bool> done(zero_sets_.size(), false);
  detail::CompensatedComplexSum total;
  for (const auto& mod : moduli_) {
    detail::CompensatedComplexSum inner;
    for (const auto& e : mod.entries) {
      if (!done[e.zero_set]) {
        sums[e.zero_set] = zero_power_sum(x, k - 2, zero_sets_[e.zero_set]);
        done[e.zero_set] = true;
      }
      inner.add(c_chi(e.chi, -n) * e.tau_conj * sums[e.zero_set]);
      ++out.characters;
    }
    const double weight = ((k - 1) % 2 == 1 ? mod.mu : 1.0) / std::pow(static_cast<double>(mod.phi), k);
    const std::complex<double> contribution = -static_cast<double>(k) * weight * inner.value();
    out.per_q.emplace_back(mod.q, contribution);
    total.add(contribution);
  }
  out.value = total.value();
  const double n_scale = std::pow(x, k - 1.5);
  out.q_tail = std::pow(static_cast<double>(Q_), 1 - k) * n_scale;
  out.zero_tail = T_ > 0.0 ? n_scale * std::pow(T_, 2 - k) * std::log(std::max(2.0, Q_ * T_)) : n_scale;
  return out;
}

SecondaryTerm secondary_term(std::int64_t n, int k, std::int64_t Q, double height, const ZeroStore& zeros) {
  if (k < 5) throw ValidationError("secondary term: the explicit formula needs k >= 5");
  return SecondaryTermContext(Q, height, zeros).evaluate(n, k);
}

IntegralIdentityCheck w_integral_identity_check(std::int64_t n, int k, const DirichletCharacter& chi,
                                                std::int64_t N, const SieveTables& tables,
                                                const ConvolutionBudget& budget) {
  if (k < 2) throw ValidationError("integral identity: k must be >= 2");
  if (n < 1 || N < 1) throw ValidationError("integral identity: n and N must be >= 1");
  if (n > tables.limit()) {
    throw RangeError("integral identity: n exceeds the sieve limit " + std::to_string(tables.limit()));
  }
  const double work = static_cast<double>(k - 1) * static_cast<double>(n) * static_cast<double>(n) / 2.0;
  if (work > budget.max_operations) throw RangeError("integral identity: convolution budget exceeded");

  const double delta = chi.is_principal() ? 1.0 : 0.0;
  const double inv_n = 1.0 / static_cast<double>(N);
  const auto len = static_cast<std::size_t>(n) + 1;
  std::vector<std::complex<double>> w(len, 0.0);
  std::vector<std::complex<double>> v(len, 0.0);
  for (std::int64_t m = 1; m <= n; ++m) {
    const double decay = std::exp(-static_cast<double>(m) * inv_n);
    w[static_cast<std::size_t>(m)] = (tables.lambda(m) * chi(m) - delta) * decay;
    v[static_cast<std::size_t>(m)] = decay;
  }
  std::vector<std::complex<double>> acc = w;
  for (int i = 1; i < k; ++i) acc = truncated_convolve(acc, v, len);

  IntegralIdentityCheck out;
  out.composition_form = acc.back();
  detail::CompensatedComplexSum closed;
  detail::CompensatedSum scale;
  for (std::int64_t m = 1; m <= n - 1; ++m) {
    const std::complex<double> a = tables.lambda(m) * chi(m) - delta;
    const double c = binomial(n - 1 - m, k - 2);
    closed.add(a * c);
    scale.add(std::abs(a) * c);
  }
  const double decay_n = std::exp(-static_cast<double>(n) * inv_n);
  out.binomial_form = decay_n * closed.value();
  out.scale = decay_n * scale.value();
  out.residual = std::abs(out.composition_form - out.binomial_form);
  return out;
}

ExplicitFormulaEngine::ExplicitFormulaEngine(int k, std::int64_t n_max, const ZeroStore& zeros,
                                             FormulaOptions options)
    : k_(k), n_max_(n_max), zeros_(&zeros), options_(options) {
  if (k < 5) throw ValidationError("explicit formula reports need k >= 5 (got k = " + std::to_string(k) + ")");
  if (n_max < 1) throw ValidationError("n must be >= 1");
  tables_ = std::make_shared<const SieveTables>(build_sieve(std::max<std::int64_t>(n_max, 2)));
  rk_ = rk_table(n_max, k, *tables_, options_.budget);
}

double ExplicitFormulaEngine::r_exact(std::int64_t n) const {
  if (n < 0 || n > n_max_) {
    throw RangeError("n = " + std::to_string(n) + " outside the prepared range [0, " + std::to_string(n_max_) + "]");
  }
  return rk_[static_cast<std::size_t>(n)];
}

std::int64_t ExplicitFormulaEngine::default_level(std::int64_t n, double height, bool* capped) const {
  std::int64_t Q = canonical_level(n);
  const std::int64_t requested = Q;
  while (Q > 1 && !zeros_->missing(Q, height).empty()) --Q;
  if (capped) *capped = Q < requested;
  return Q;
}

ExplicitFormulaReport ExplicitFormulaEngine::report(std::int64_t n, std::int64_t Q, double height) const {
  bool capped = false;
  const std::int64_t requested = Q > 0 ? Q : canonical_level(n);
  const std::int64_t level = Q > 0 ? Q : default_level(n, height, &capped);
  ExplicitFormulaReport out = report(n, SecondaryTermContext(level, height, *zeros_));
  out.requested_Q = requested;
  out.level_capped = capped;
  if (capped) {
    out.warnings.push_back("level lowered from " + std::to_string(requested) + " to " + std::to_string(level) +
                           " to match the available zero data");
  }
  return out;
}

ExplicitFormulaReport ExplicitFormulaEngine::report(std::int64_t n, const SecondaryTermContext& context) const {
  if (n < 1) throw ValidationError("n must be >= 1");
  ExplicitFormulaReport out;
  out.n = n;
  out.k = k_;
  out.Q = context.level();
  out.requested_Q = context.level();
  out.T = context.height();
  out.r_exact = r_exact(n);
  out.parity = ((n - k_) % 2) != 0;

  const auto euler = singular_series_euler(n, k_, options_.p_max);
  out.singular_series = euler.value;
  out.singular_series_log_tail = euler.log_tail_bound;
  const double x = static_cast<double>(n);
  out.main = std::pow(x, k_ - 1) / factorial(k_ - 1) * euler.value;

  SecondaryTerm sec = context.evaluate(n, k_);
  out.secondary = sec.value;
  out.per_q = std::move(sec.per_q);
  out.warnings = std::move(sec.warnings);
  out.q_tail = sec.q_tail;
  out.zero_tail = sec.zero_tail;

  out.residual = out.r_exact - out.main - out.secondary.real();
  const double log_n = std::log(x);
  out.ratio_74 = out.residual / (std::pow(x, k_ - 1.75) * std::pow(log_n, k_ - 1));
  out.ratio_2 = out.residual / (std::pow(x, k_ - 2.0) * std::pow(log_n, k_ - 1));
  out.ratio_2log2 = out.residual / (std::pow(x, k_ - 2.0) * log_n * log_n);
  out.rounding_bound = k_ * x * std::ldexp(1.0, -52) * out.r_exact;
  out.imaginary_ok = std::abs(out.secondary.imag()) <=
                     1e-6 * std::abs(out.secondary.real()) + 1e-6 * std::pow(x, k_ - 1.5);
  if (out.parity) out.warnings.push_back("parity: n and k have different parity, the main term vanishes");
  return out;
}

std::vector<SweepRow> ExplicitFormulaEngine::sweep(const std::vector<std::int64_t>& ns, std::int64_t Q,
                                                   double height) const {
  std::vector<SweepRow> rows(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) rows[i].n = ns[i];
  if (ns.empty()) return rows;

  std::optional<SecondaryTermContext> context;
  try {
    context.emplace(Q, height, *zeros_);
  } catch (const Error& e) {
    for (auto& row : rows) {
      row.error_kind = e.kind();
      row.error = e.what();
    }
    return rows;
  }
  detail::parallel_for(rows.size(), options_.threads, [&](std::size_t i) {
    try {
      rows[i].report = report(rows[i].n, *context);
    } catch (const Error& e) {
      rows[i].error_kind = e.kind();
      rows[i].error = e.what();
    }
  });
  return rows;
}

ExplicitFormulaReport explicit_formula_report(std::int64_t n, int k, std::int64_t Q, double height,
                                              const ZeroStore& zeros, const FormulaOptions& options) {
  if (n < 1) throw ValidationError("n must be >= 1");
  const ExplicitFormulaEngine engine(k, n, zeros, options);
  return engine.report(n, Q, height);
}

}  // namespace kprimes
