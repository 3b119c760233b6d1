#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace kprimes {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Nodes and weights of the n-point rule (Newton on P_n), cached per n.
const GaussLegendreRule& gauss_legendre(int n);

struct QuadratureOptions {
  int order = 16;                 // points per panel
  double max_panel_width = 0.0;   // 0: one panel per piece to start
  double tolerance = 1e-12;       // doubling stops once the change is below tolerance * ∫|f|
  int max_doublings = 10;
  double precision_limit = 0.01;  // final doubling may change the result by at most this fraction
};

struct QuadratureResult {
  std::complex<double> value;
  double abs_integral = 0.0;  // ∫|f| at the final resolution
  double last_change = 0.0;   // |I(2P) - I(P)| of the final doubling
  long panels = 0;            // total panels used in the final evaluation
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Composite Gauss–Legendre over the pieces [b_0,b_1], [b_1,b_2], ...; panel counts
/// are doubled until converged. Throws PrecisionError if the last doubling still
/// moves the result by more than precision_limit (relative).
QuadratureResult integrate(const ComplexIntegrand& f, const std::vector<double>& breakpoints,
                           const QuadratureOptions& options = {});

inline QuadratureResult integrate(const ComplexIntegrand& f, double a, double b,
                                  const QuadratureOptions& options = {}) {
  return integrate(f, std::vector<double>{a, b}, options);
}

}  // namespace kprimes
