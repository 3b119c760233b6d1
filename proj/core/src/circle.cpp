#include "kprimes/circle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kprimes/errors.hpp"
#include "kprimes/gamma.hpp"

namespace kprimes {

void CircleConfig::validate() const {
  if (N < 1) throw ValidationError("N must be >= 1");
  if (Q < 1 || Q > N) throw ValidationError("level Q = " + std::to_string(Q) + " must satisfy 1 <= Q <= N");
  if (!(epsilon > 0.0 && epsilon <= 1e-8)) throw ValidationError("series cutoff epsilon must lie in (0, 1e-8]");
  if (quadrature_order < 2 || quadrature_order > 128) throw ValidationError("quadrature order must lie in [2, 128]");
}

std::int64_t CircleConfig::truncation() const {
  return static_cast<std::int64_t>(std::ceil(static_cast<double>(N) * std::log(1.0 / epsilon)));
}

std::int64_t CircleConfig::canonical_level(std::int64_t N) {
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(N)) / 2.0)));
}

std::complex<double> z_of_eta(double eta, std::int64_t N) {
  return {1.0 / static_cast<double>(N), -2.0 * std::numbers::pi * eta};
}

std::complex<double> v_of_eta(double eta, std::int64_t N) {
  const std::complex<double> z = z_of_eta(eta, N);
  // e^z - 1 without cancellation near z = 0.
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const std::complex<double> em1{std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
  return 1.0 / em1;
}

SmoothedSum::SmoothedSum(const CircleConfig& cfg, const SieveTables& tables) { build(cfg, tables, nullptr); }

SmoothedSum::SmoothedSum(const CircleConfig& cfg, const SieveTables& tables, const DirichletCharacter& chi) {
  build(cfg, tables, &chi);
}

void SmoothedSum::build(const CircleConfig& cfg, const SieveTables& tables, const DirichletCharacter* chi) {
  cfg.validate();
  const std::int64_t M = cfg.truncation();
  if (tables.limit() < M) {
    throw RangeError("sieve limit " + std::to_string(tables.limit()) + " below the S~ truncation point " +
                     std::to_string(M) + " (N = " + std::to_string(cfg.N) + ")");
  }
  N_ = cfg.N;
  const double inv_n = 1.0 / static_cast<double>(cfg.N);
  coeffs_.assign(static_cast<std::size_t>(M) + 1, {0.0, 0.0});
  for (std::int64_t m = 2; m <= M; ++m) {
    const double lam = tables.lambda(m);
    if (lam == 0.0) continue;
    std::complex<double> c = lam * std::exp(-static_cast<double>(m) * inv_n);
    if (chi) c *= (*chi)(m);
    coeffs_[static_cast<std::size_t>(m)] = c;
  }
  tail_bound_ = std::log(static_cast<double>(M + cfg.N)) * std::exp(-static_cast<double>(M) * inv_n) /
                (-std::expm1(-inv_n));
}

std::complex<double> SmoothedSum::operator()(double alpha) const {
  constexpr std::size_t kAnchor = 64;
  const double frac = alpha - std::floor(alpha);
  const double two_pi = 2.0 * std::numbers::pi;
  const std::complex<double> step = std::polar(1.0, two_pi * frac);
  std::complex<double> phase{1.0, 0.0};
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t m = 1; m < coeffs_.size(); ++m) {
    if (m % kAnchor == 0) {
      const double t = static_cast<double>(m) * frac;
      phase = std::polar(1.0, two_pi * (t - std::floor(t)));
    } else {
      phase *= step;
    }
    const auto& c = coeffs_[m];
    if (c.real() != 0.0 || c.imag() != 0.0) sum += c * phase;
  }
  return sum;
}

double SmoothedSum::sum_of_squares() const {
  double acc = 0.0;
  for (const auto& c : coeffs_) acc += std::norm(c);
  return acc;
}

std::complex<double> s_tilde(double alpha, const CircleConfig& cfg, const SieveTables& tables) {
  return SmoothedSum(cfg, tables)(alpha);
}

std::complex<double> w_sum(const DirichletCharacter& chi, double eta, const CircleConfig& cfg,
                           const SieveTables& tables, WVariant variant) {
  const std::complex<double> sum = SmoothedSum(cfg, tables, chi)(eta);
  if (!chi.is_principal()) return sum;
  return sum - (variant == WVariant::V ? v_of_eta(eta, cfg.N) : 1.0 / z_of_eta(eta, cfg.N));
}

std::complex<double> zero_gamma_sum(std::complex<double> z, const std::vector<double>& signed_ordinates) {
  const std::complex<double> log_z = std::log(z);
  std::complex<double> sum{0.0, 0.0};
  for (const double gamma : signed_ordinates) {
    const std::complex<double> rho{0.5, gamma};
    sum += std::exp(log_gamma(rho) - rho * log_z);
  }
  return sum;
}

std::vector<double> arc_breakpoints(double lo, double hi, std::int64_t N) {
  std::vector<double> out{lo};
  const double cut = 1.0 / static_cast<double>(N);
  if (-cut > lo && -cut < hi) out.push_back(-cut);
  if (cut > lo && cut < hi) out.push_back(cut);
  out.push_back(hi);
  return out;
}

}  // namespace kprimes
