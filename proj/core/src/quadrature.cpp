#include "kprimes/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "kprimes/errors.hpp"

namespace kprimes {
namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
  }
  return rule;
}

struct Pass {
  std::complex<double> value;
  double abs_value = 0.0;
};

Pass composite(const ComplexIntegrand& f, const std::vector<double>& breakpoints, const std::vector<long>& panels,
               const GaussLegendreRule& rule) {
  Pass out;
  for (std::size_t piece = 0; piece + 1 < breakpoints.size(); ++piece) {
    const double a = breakpoints[piece];
    const double b = breakpoints[piece + 1];
    const long n = panels[piece];
    const double h = (b - a) / static_cast<double>(n);
    std::complex<double> acc{0.0, 0.0};
    double acc_abs = 0.0;
    for (long p = 0; p < n; ++p) {
      const double mid = a + (p + 0.5) * h;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const std::complex<double> v = f(mid + 0.5 * h * rule.nodes[i]);
        acc += rule.weights[i] * v;
        acc_abs += rule.weights[i] * std::abs(v);
      }
    }
    out.value += 0.5 * h * acc;
    out.abs_value += 0.5 * h * acc_abs;
  }
  return out;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1 || n > 512) throw ValidationError("Gauss-Legendre order " + std::to_string(n) + " outside [1, 512]");
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

QuadratureResult integrate(const ComplexIntegrand& f, const std::vector<double>& breakpoints,
                           const QuadratureOptions& options) {
  if (breakpoints.size() < 2) throw ValidationError("integrate: need at least two breakpoints");
  const GaussLegendreRule& rule = gauss_legendre(options.order);
  std::vector<long> panels(breakpoints.size() - 1, 1);
  if (options.max_panel_width > 0.0) {
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const double width = std::abs(breakpoints[i + 1] - breakpoints[i]);
      panels[i] = std::max(1L, static_cast<long>(std::ceil(width / options.max_panel_width)));
    }
  }
  Pass coarse = composite(f, breakpoints, panels, rule);
  QuadratureResult result;
  for (int d = 0; d <= options.max_doublings; ++d) {
    for (auto& p : panels) p *= 2;
    const Pass fine = composite(f, breakpoints, panels, rule);
    result.value = fine.value;
    result.abs_integral = fine.abs_value;
    result.last_change = std::abs(fine.value - coarse.value);
    result.panels = 0;
    for (const long p : panels) result.panels += p;
    if (result.last_change <= options.tolerance * fine.abs_value) return result;
    coarse = fine;
  }
  if (result.last_change > options.precision_limit * std::abs(result.value) + options.tolerance * result.abs_integral) {
    throw PrecisionError("quadrature did not converge: node doubling changed the integral by " +
                         std::to_string(result.last_change) + " against |I| = " + std::to_string(std::abs(result.value)));
  }
  return result;
}

}  // namespace kprimes
