#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "kprimes/arithmetic.hpp"
#include "kprimes/circle.hpp"
#include "kprimes/convolution.hpp"
#include "kprimes/errors.hpp"
#include "kprimes/farey.hpp"
#include "kprimes/quadrature.hpp"
#include "kprimes/rational.hpp"

using namespace kprimes;
using cd = std::complex<double>;

TEST_SUITE("circle") {

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(3, 4) * Rational(8, 9) == Rational(2, 3));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK_THROWS_AS(Rational(1, 0), ValidationError);
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(Rational(big, 1) * Rational(big, 3), RangeError);
}

TEST_CASE("farey arcs tile the circle exactly") {
  for (std::int64_t Q : {1, 2, 3, 7, 20, 200}) {
    const auto arcs = farey_arcs(Q);
    std::int64_t phi_sum = 0;
    for (std::int64_t q = 1; q <= Q; ++q) phi_sum += totient_small(q);
    CHECK(static_cast<std::int64_t>(arcs.size()) == phi_sum);
    const auto check = check_farey_cover(arcs, Q);
    CHECK_MESSAGE(check.ok(), check.detail);
    CHECK(arcs.front().left == Rational(1, Q + 1));
    CHECK(arcs.back().right == Rational(Q + 2, Q + 1));
  }
  const auto arcs = farey_arcs(5);
  CHECK(arcs.back().q == 1);
  CHECK(arcs.back().xi_left == Rational(-1, 6));
  CHECK_THROWS_AS(farey_arcs(0), RangeError);
}

TEST_CASE("farey check catches a gap") {
  auto arcs = farey_arcs(6);
  arcs[3].right = arcs[3].right - Rational(1, 1000);
  CHECK_FALSE(check_farey_cover(arcs, 6).cover);
}

TEST_CASE("gauss-legendre rules") {
  for (int n : {1, 2, 5, 16, 64}) {
    const auto& rule = gauss_legendre(n);
    double w = 0.0;
    for (double x : rule.weights) w += x;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
  }
  const auto r = integrate([](double x) { return cd(std::pow(x, 9), 0.0); }, 0.0, 1.0);
  CHECK(r.value.real() == doctest::Approx(0.1).epsilon(1e-14));
  const auto osc = integrate([](double x) { return std::exp(cd(0.0, 2.0 * std::numbers::pi * 40.0 * x)); }, 0.0, 1.0);
  CHECK(std::abs(osc.value) < 1e-12);
  QuadratureOptions strict;
  strict.max_doublings = 0;
  strict.order = 2;
  CHECK_THROWS_AS(integrate([](double x) { return cd(std::cos(200.0 * x), 0.0); }, 0.0, 1.0, strict),
                  PrecisionError);
}

TEST_CASE("V and z") {
  const std::int64_t N = 50;
  for (double eta : {-0.4, -0.01, 0.0, 1e-4, 0.013, 0.25, 0.5}) {
    const cd z = z_of_eta(eta, N);
    CHECK(std::abs(z - cd(1.0 / N, -2.0 * std::numbers::pi * eta)) < 1e-15);
    const cd direct = 1.0 / (std::exp(z) - 1.0);
    CHECK(std::abs(v_of_eta(eta, N) - direct) < 1e-12 * std::abs(direct));
  }
}

TEST_CASE("smoothed sum against the direct series") {
  CircleConfig cfg;
  cfg.N = 40;
  const auto tables = build_sieve(cfg.truncation());
  const SmoothedSum S(cfg, tables);
  CHECK(S.tail_bound() < 1e-9);
  for (double alpha : {0.0, 0.1, 0.333, 0.75, 0.999}) {
    cd direct{};
    for (std::int64_t m = 2; m <= cfg.truncation(); ++m) {
      direct += tables.lambda(m) * std::exp(-static_cast<double>(m) / cfg.N) *
                std::exp(cd(0.0, 2.0 * std::numbers::pi * alpha * static_cast<double>(m)));
    }
    CHECK(std::abs(S(alpha) - direct) < 1e-10 * std::max(1.0, std::abs(direct)));
    CHECK(std::abs(s_tilde(alpha, cfg, tables) - direct) < 1e-10 * std::max(1.0, std::abs(direct)));
  }
  CHECK_THROWS_AS(SmoothedSum(cfg, build_sieve(100)), RangeError);
}

TEST_CASE("parseval and decomposition at small scale") {
  CircleConfig cfg;
  cfg.N = 40;
  cfg.Q = 4;
  const auto tables = build_sieve(cfg.truncation());
  const auto p = parseval_check(cfg, tables);
  CHECK(p.relative_error < 1e-8);
  double exact = 0.0;
  for (std::int64_t m = 2; m <= cfg.truncation(); ++m) {
    exact += tables.lambda(m) * tables.lambda(m) * std::exp(-2.0 * m / cfg.N);
  }
  CHECK(p.exact == doctest::Approx(exact).epsilon(1e-12));

  cfg.N = 60;
  cfg.Q = 3;
  const auto big = build_sieve(CircleConfig{60}.truncation());
  const auto d = decomposition_check(9, 3, cfg, big);
  CHECK(d.expected == doctest::Approx(std::exp(-9.0 / 60.0) * rk_exact(9, 3, big)).epsilon(1e-14));
  CHECK(d.relative_error < 1e-8);
}

TEST_CASE("main-term arc integral") {
  CircleConfig cfg;
  cfg.N = 100;
  cfg.Q = 5;
  const auto arcs = farey_arcs(5);
  const auto r = main_term_arc_integral(100, 3, cfg, arcs.back());
  CHECK(r.ratio < 1e-3);
  CHECK(r.bound == 25.0);
  cfg.Q = 6;
  CHECK_THROWS_AS(main_term_arc_integral(1, 3, cfg, farey_arcs(6).back()), ValidationError);
}

TEST_CASE("config validation") {
  CircleConfig cfg;
  cfg.N = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg.N = 100;
  cfg.epsilon = 2.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  CHECK(CircleConfig{100}.truncation() == static_cast<std::int64_t>(std::ceil(100 * std::log(1e12))));
}

}
