#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "kprimes/circle.hpp"
#include "kprimes/convolution.hpp"
#include "kprimes/errors.hpp"
#include "kprimes/zero_io.hpp"
#include "parallel.hpp"
#include "summation.hpp"

namespace kprimes {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string describe(const CircleConfig& cfg) {
  return "N=" + std::to_string(cfg.N) + " Q=" + std::to_string(cfg.Q);
}

double ratio_of(double measured, double bound) { return bound > 0.0 ? measured / bound : 0.0; }

QuadratureOptions smooth_sum_options(const CircleConfig& cfg, double tolerance) {
  QuadratureOptions opt;
  opt.order = cfg.quadrature_order;
  opt.max_panel_width = 1.0 / static_cast<double>(cfg.N);
  opt.tolerance = tolerance;
  opt.max_doublings = 8;
  return opt;
}

/// Arcs in (q, a) order so reductions do not depend on scheduling.
std::vector<FareyArc> sorted_arcs(const CircleConfig& cfg) {
  auto arcs = farey_arcs(cfg.Q);
  std::sort(arcs.begin(), arcs.end(), [](const FareyArc& x, const FareyArc& y) {
    return x.q != y.q ? x.q < y.q : x.a < y.a;
  });
  return arcs;
}

struct ArcIntegral {
  std::complex<double> value;
  long panels = 0;
};

/// Σ over arcs of ∫_ξ f(arc, η) dη, computed per arc in parallel and summed in order.
template <class Integrand>
ArcIntegral integrate_over_arcs(const CircleConfig& cfg, const std::vector<FareyArc>& arcs,
                                const QuadratureOptions& opt, Integrand&& f) {
  std::vector<QuadratureResult> parts(arcs.size());
  detail::parallel_for(arcs.size(), cfg.threads, [&](std::size_t i) {
    const FareyArc& arc = arcs[i];
    const auto pieces = arc_breakpoints(arc.xi_left.to_double(), arc.xi_right.to_double(), cfg.N);
    parts[i] = integrate([&](double eta) { return f(arc, eta); }, pieces, opt);
  });
  ArcIntegral out;
  detail::CompensatedComplexSum acc;
  for (const auto& p : parts) {
    acc.add(p.value);
    out.panels += p.panels;
  }
  out.value = acc.value();
  return out;
}

double major_coefficient(std::int64_t q) {
  return static_cast<double>(moebius_small(q)) / static_cast<double>(totient_small(q));
}

}  // namespace

BoundProbeReport linnik_probe(const DirichletCharacter& chi, double eta, const CircleConfig& cfg,
                              const ZeroList& zeros, const ZeroList& conjugate_zeros, double height,
                              const SieveTables& tables) {
  if (!chi.is_primitive()) throw ValidationError("linnik_probe: the character must be primitive");
  const ZeroKey key = ZeroKey::of(chi);
  const ZeroKey conj_key = ZeroKey::of(chi.conjugate());
  if (zeros.key != key || conjugate_zeros.key != conj_key) {
    throw ValidationError("linnik_probe: zero lists do not match " + key.describe());
  }
  if (zeros.height < height || conjugate_zeros.height < height) {
    throw DependencyError("linnik_probe: zeros for " + key.describe() + " do not reach height " +
                          format_ordinate(height));
  }
  const std::complex<double> z = z_of_eta(eta, cfg.N);
  const std::complex<double> w = w_sum(chi, eta, cfg, tables, WVariant::z);
  const auto ordinates = signed_ordinates(zeros, conjugate_zeros, height);
  const std::complex<double> zsum = zero_gamma_sum(z, ordinates);

  const double q = static_cast<double>(chi.modulus());
  // |z^{-ρ}Γ(ρ)| ≈ √(2π)|z|^{-1/2} e^{-(π/2 - |arg z|)|γ|}; zero density ≈ log(qt/2π)/(2π) per side.
  const double decay = std::numbers::pi / 2.0 - std::abs(std::arg(z));
  const double density = (std::log(std::max(q * height / kTwoPi, 1.0)) + 1.0) / kTwoPi;
  const double tail = 2.0 * std::sqrt(kTwoPi) / std::sqrt(std::abs(z)) * density * std::exp(-decay * height) / decay;

  BoundProbeReport out;
  out.probe = "linnik";
  out.config = cfg;
  out.measured = std::abs(w + zsum);
  out.bound = 1.0 + std::pow(std::log(q), 2) + tail;
  out.bound_expression = "1 + log^2 q + zero tail";
  out.ratio = ratio_of(out.measured, out.bound);
  out.sample = describe(cfg) + " chi=" + key.describe() + " eta=" + std::to_string(eta) +
               " T=" + format_ordinate(height);
  out.extras = {{"abs_w", std::abs(w)},
                {"abs_zero_sum", std::abs(zsum)},
                {"zeros_used", static_cast<double>(ordinates.size())},
                {"tail_estimate", tail},
                {"series_tail", SmoothedSum(cfg, tables, chi).tail_bound()}};
  return out;
}

BoundProbeReport max_residual_probe(const CircleConfig& cfg, int samples_per_arc, const SieveTables& tables) {
  cfg.validate();
  if (samples_per_arc < 1) throw ValidationError("max_residual_probe: samples per arc must be >= 1");
  const SmoothedSum s(cfg, tables);
  const auto arcs = sorted_arcs(cfg);
  struct Best {
    double value = -1.0;
    double eta = 0.0;
  };
  std::vector<Best> best(arcs.size());
  detail::parallel_for(arcs.size(), cfg.threads, [&](std::size_t i) {
    const FareyArc& arc = arcs[i];
    const double lo = arc.xi_left.to_double();
    const double width = arc.xi_right.to_double() - lo;
    const double centre = arc.center().to_double();
    const double coeff = major_coefficient(arc.q);
    for (int j = 0; j < samples_per_arc; ++j) {
      const double eta = lo + width * (j + 1) / samples_per_arc;
      const double r = std::abs(s(centre + eta) - coeff / z_of_eta(eta, cfg.N));
      if (r > best[i].value) best[i] = {r, eta};
    }
  });
  std::size_t arg = 0;
  for (std::size_t i = 1; i < best.size(); ++i) {
    if (best[i].value > best[arg].value) arg = i;
  }
  const double N = static_cast<double>(cfg.N);
  const double Q = static_cast<double>(cfg.Q);
  BoundProbeReport out;
  out.probe = "max-residual";
  out.config = cfg;
  out.measured = best[arg].value;
  out.bound = (N / std::sqrt(Q) + std::sqrt(Q * N)) * std::log(Q * N);
  out.bound_expression = "(N/sqrt(Q) + sqrt(QN)) log(QN)";
  out.ratio = ratio_of(out.measured, out.bound);
  out.sample = describe(cfg) + " samples/arc=" + std::to_string(samples_per_arc) +
               " arcs=" + std::to_string(arcs.size());
  const double optimal = std::pow(N, 0.75) * std::log(N);
  out.extras = {{"ratio_optimal_q", ratio_of(out.measured, optimal)},
                {"optimal_q_bound", optimal},
                {"argmax_q", static_cast<double>(arcs[arg].q)},
                {"argmax_a", static_cast<double>(arcs[arg].a)},
                {"argmax_eta", best[arg].eta},
                {"series_tail", s.tail_bound()}};
  return out;
}

std::vector<BoundProbeReport> mean_square_probe(const CircleConfig& cfg, const SieveTables& tables) {
  cfg.validate();
  const SmoothedSum s(cfg, tables);
  const auto arcs = sorted_arcs(cfg);
  const double N = static_cast<double>(cfg.N);
  const double Q = static_cast<double>(cfg.Q);
  const double log_n = std::log(N);
  const QuadratureOptions opt = smooth_sum_options(cfg, 1e-9);

  // Σ μ²/φ² ∫_ξ |z|^{-2} dη with ∫ dη/|z|² = (N/2π) arctan(2πNη).
  detail::CompensatedSum closed;
  for (const auto& arc : arcs) {
    const double c = major_coefficient(arc.q);
    if (c == 0.0) continue;
    const double primitive = (N / kTwoPi) * (std::atan(kTwoPi * N * arc.xi_right.to_double()) -
                                              std::atan(kTwoPi * N * arc.xi_left.to_double()));
    closed.add(c * c * primitive);
  }

  auto residual_sq = [&](const FareyArc& arc, double eta) -> std::complex<double> {
    const std::complex<double> d = s(arc.center().to_double() + eta) - major_coefficient(arc.q) / z_of_eta(eta, cfg.N);
    return std::norm(d);
  };
  const ArcIntegral second = integrate_over_arcs(cfg, arcs, opt, residual_sq);

  // Per q: Σ*_a ∫_{-1/(qQ)}^{1/(qQ)} |S̃(a/q+η) - μ/(φz)|² dη.
  std::vector<std::pair<std::int64_t, std::int64_t>> fractions;
  for (std::int64_t q = 1; q <= cfg.Q; ++q) {
    for (std::int64_t a = 1; a <= q; ++a) {
      if (gcd64(a, q) == 1) fractions.emplace_back(q, a);
    }
  }
  std::vector<double> per_fraction(fractions.size());
  detail::parallel_for(fractions.size(), cfg.threads, [&](std::size_t i) {
    const auto [q, a] = fractions[i];
    const double half = 1.0 / (static_cast<double>(q) * Q);
    const double centre = static_cast<double>(a) / static_cast<double>(q);
    const double coeff = major_coefficient(q);
    per_fraction[i] = integrate(
                          [&](double eta) -> std::complex<double> {
                            return std::norm(s(centre + eta) - coeff / z_of_eta(eta, cfg.N));
                          },
                          arc_breakpoints(-half, half, cfg.N), opt)
                          .value.real();
  });
  double worst = 0.0;
  std::int64_t worst_q = 1;
  for (std::int64_t q = 1, i = 0; q <= cfg.Q; ++q) {
    double total = 0.0;
    for (; static_cast<std::size_t>(i) < fractions.size() && fractions[static_cast<std::size_t>(i)].first == q; ++i) {
      total += per_fraction[static_cast<std::size_t>(i)];
    }
    if (total > worst) {
      worst = total;
      worst_q = q;
    }
  }

  const double n_log_n = N * log_n;
  std::vector<BoundProbeReport> out(3);
  out[0].probe = "mean-square-major";
  out[0].measured = closed.value();
  out[0].bound = n_log_n;
  out[0].bound_expression = "N log N";
  out[0].extras = {{"arcs", static_cast<double>(arcs.size())}};

  out[1].probe = "mean-square-residual";
  out[1].measured = second.value.real();
  out[1].bound = n_log_n;
  out[1].bound_expression = "N log N";
  out[1].extras = {{"panels", static_cast<double>(second.panels)}, {"series_tail", s.tail_bound()}};

  out[2].probe = "mean-square-per-q";
  out[2].measured = worst;
  out[2].bound = N / Q * log_n * log_n;
  out[2].bound_expression = "(N/Q) log^2 N";
  out[2].extras = {{"argmax_q", static_cast<double>(worst_q)},
                   {"hypothesis_q_below_sqrt_n", Q < std::sqrt(N) ? 1.0 : 0.0}};
  for (auto& r : out) {
    r.config = cfg;
    r.ratio = ratio_of(r.measured, r.bound);
    r.sample = describe(cfg) + " order=" + std::to_string(cfg.quadrature_order);
  }
  return out;
}

BoundProbeReport main_term_arc_integral(std::int64_t ell, int k, const CircleConfig& cfg, const FareyArc& arc) {
  cfg.validate();
  if (k < 2) throw ValidationError("main_term_arc_integral: k must be >= 2");
  if (ell < 1 || ell > cfg.N) throw ValidationError("main_term_arc_integral: need 1 <= ell <= N");
  const double N = static_cast<double>(cfg.N);
  if (static_cast<double>(cfg.Q) > std::sqrt(N) / 2.0) {
    throw ValidationError("main_term_arc_integral: needs Q <= sqrt(N)/2");
  }
  QuadratureOptions opt;
  opt.order = cfg.quadrature_order;
  opt.max_panel_width = std::min(1.0 / N, 1.0 / static_cast<double>(4 * ell));
  opt.tolerance = 1e-13;
  const double l = static_cast<double>(ell);
  const auto result = integrate(
      [&](double eta) { return std::polar(1.0, -kTwoPi * l * eta) / std::pow(z_of_eta(eta, cfg.N), k); },
      arc_breakpoints(arc.xi_left.to_double(), arc.xi_right.to_double(), cfg.N), opt);
  double fact = 1.0;
  for (int i = 2; i < k; ++i) fact *= i;
  const double main = std::exp(-l / N) * std::pow(l, k - 1) / fact;

  BoundProbeReport out;
  out.probe = "main-term";
  out.config = cfg;
  out.measured = std::abs(result.value - main);
  out.bound = std::pow(static_cast<double>(arc.q * cfg.Q), k - 1);
  out.bound_expression = "(qQ)^(k-1)";
  out.ratio = ratio_of(out.measured, out.bound);
  out.sample = describe(cfg) + " arc=" + std::to_string(arc.a) + "/" + std::to_string(arc.q) +
               " ell=" + std::to_string(ell) + " k=" + std::to_string(k);
  out.extras = {{"integral_re", result.value.real()}, {"integral_im", result.value.imag()}, {"main", main}};
  return out;
}

ParsevalCheck parseval_check(const CircleConfig& cfg, const SieveTables& tables) {
  cfg.validate();
  const SmoothedSum s(cfg, tables);
  const auto arcs = sorted_arcs(cfg);
  const auto total = integrate_over_arcs(cfg, arcs, smooth_sum_options(cfg, 1e-13),
                                         [&](const FareyArc& arc, double eta) -> std::complex<double> {
                                           return std::norm(s(arc.center().to_double() + eta));
                                         });
  ParsevalCheck out;
  out.quadrature = total.value.real();
  out.exact = s.sum_of_squares();
  out.relative_error = std::abs(out.quadrature - out.exact) / out.exact;
  return out;
}

DecompositionCheck decomposition_check(std::int64_t n, int k, const CircleConfig& cfg, const SieveTables& tables) {
  cfg.validate();
  if (n < 1 || k < 1) throw ValidationError("decomposition_check: need n >= 1 and k >= 1");
  const SmoothedSum s(cfg, tables);
  if (n > s.truncation()) throw RangeError("decomposition_check: n exceeds the S~ truncation point");
  const auto arcs = sorted_arcs(cfg);
  const double nn = static_cast<double>(n);
  const auto total = integrate_over_arcs(cfg, arcs, smooth_sum_options(cfg, 1e-14),
                                         [&](const FareyArc& arc, double eta) -> std::complex<double> {
                                           const double alpha = arc.center().to_double() + eta;
                                           const double frac = nn * alpha - std::floor(nn * alpha);
                                           return std::pow(s(alpha), k) * std::polar(1.0, -kTwoPi * frac);
                                         });
  DecompositionCheck out;
  out.integral = total.value;
  out.expected = std::exp(-nn / static_cast<double>(cfg.N)) * rk_exact(n, k, tables);
  out.relative_error = std::abs(out.integral - out.expected) / std::abs(out.expected);
  return out;
}

std::vector<BoundProbeReport> v_bound_scan(std::int64_t N, int samples, std::uint64_t seed) {
  if (N < 1 || samples < 1) throw ValidationError("v_bound_scan: need N >= 1 and samples >= 1");
  std::mt19937_64 rng(seed);
  double worst_gap = 0.0;
  double worst_ratio = 0.0;
  for (int i = 0; i < samples; ++i) {
    // η uniform on (-1/2, 1/2], from 53 random bits.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double eta = 0.5 - u;
    const std::complex<double> v = v_of_eta(eta, N);
    worst_gap = std::max(worst_gap, std::abs(v - 1.0 / z_of_eta(eta, N)));
    const double scale = eta == 0.0 ? static_cast<double>(N) : std::min(static_cast<double>(N), 1.0 / std::abs(eta));
    worst_ratio = std::max(worst_ratio, std::abs(v) / scale);
  }
  CircleConfig cfg;
  cfg.N = N;
  cfg.Q = 1;
  const std::string sample = "N=" + std::to_string(N) + " samples=" + std::to_string(samples) +
                             " seed=" + std::to_string(seed);
  BoundProbeReport gap;
  gap.probe = "v-minus-inverse-z";
  gap.config = cfg;
  gap.measured = worst_gap;
  gap.bound = 1.0;
  gap.bound_expression = "1";
  gap.ratio = worst_gap;
  gap.sample = sample;
  BoundProbeReport size;
  size.probe = "v-size";
  size.config = cfg;
  size.measured = worst_ratio;
  size.bound = 1.0;
  size.bound_expression = "min(N, 1/|eta|)";
  size.ratio = worst_ratio;
  size.sample = sample;
  return {gap, size};
}

}  // namespace kprimes
