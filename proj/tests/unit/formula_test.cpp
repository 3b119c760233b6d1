#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <functional>

#include "doctest.h"
#include "kprimes/arithmetic.hpp"
#include "kprimes/characters.hpp"
#include "kprimes/convolution.hpp"
#include "kprimes/errors.hpp"
#include "kprimes/formula.hpp"
#include "kprimes/report_io.hpp"
#include "kprimes/singular_series.hpp"
#include "kprimes/zero_store.hpp"

using namespace kprimes;
using cd = std::complex<double>;

namespace {

// Sum of f(m_1) g(m_2) ... g(m_k) over positive m_1 + ... + m_k = n, by nested loops.
cd enumerate(std::int64_t n, int k, const std::function<cd(std::int64_t)>& f,
             const std::function<cd(std::int64_t)>& g) {
  if (k == 1) return f(n);
  cd total{};
  const std::function<void(std::int64_t, int, cd)> rec = [&](std::int64_t left, int slots, cd weight) {
    if (slots == 0) {
      if (left >= 1) total += weight * f(left);
      return;
    }
    for (std::int64_t m = 1; m < left; ++m) rec(left - m, slots - 1, weight * g(m));
  };
  rec(n, k - 1, cd(1.0));
  return total;
}

std::filesystem::path store_dir() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / "kprimes_unit_formula";
    std::filesystem::remove_all(d);
    ZeroStore(d).ensure(3, 60.0);
    return d;
  }();
  return dir;
}

}  // namespace

TEST_SUITE("formula") {

TEST_CASE("R_k by convolution against enumeration") {
  const auto t = build_sieve(200);
  const auto lam = [&](std::int64_t m) { return cd(t.lambda(m), 0.0); };
  for (int k = 2; k <= 4; ++k) {
    for (std::int64_t n = 1; n <= 36; ++n) {
      const double brute = enumerate(n, k, lam, lam).real();
      CHECK(rk_exact(n, k, t) == doctest::Approx(brute).epsilon(1e-12).scale(1.0));
    }
  }
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  CHECK(rk_exact(6, 3, t) == doctest::Approx(l2 * l2 * l2).epsilon(1e-14));
  CHECK(rk_exact(7, 3, t) == doctest::Approx(3 * l2 * l2 * l3).epsilon(1e-14));
  CHECK(rk_exact(5, 3, t) == 0.0);
  const auto table = rk_table(100, 3, t);
  CHECK(table[77] == doctest::Approx(rk_exact(77, 3, t)).epsilon(1e-14));
  ConvolutionBudget tiny;
  tiny.max_operations = 10;
  CHECK_THROWS_AS(rk_table(100, 3, t, tiny), RangeError);
  CHECK_THROWS_AS(rk_table(300, 3, t), RangeError);
}

TEST_CASE("singular series") {
  const auto t = build_sieve(1000);
  CHECK(ramanujan_tail_constant(3) == 7.5);
  CHECK(ramanujan_tail_constant(11) == 87000.0);
  CHECK_THROWS_AS(ramanujan_tail_constant(12), RangeError);
  for (std::int64_t n : {8, 9, 100, 101, 3001}) {
    for (int k = 3; k <= 6; ++k) {
      const auto e = singular_series_euler(n, k, 1'000'000);
      const auto r = singular_series_ramanujan(n, k, 1000, t);
      if ((n - k) % 2 != 0) {
        CHECK(e.value == 0.0);
        CHECK(std::abs(r.value) <= r.tail_bound);
      } else {
        CHECK(e.value > 0.0);
      }
      CHECK(std::abs(e.value - r.value) <= std::max(1e-6, r.tail_bound));
    }
  }
  CHECK(singular_series_euler(9, 3, 1'000'000).value == doctest::Approx(1.53397436314).epsilon(1e-10));
  CHECK_THROWS_AS(singular_series_euler(9, 2, 100), ValidationError);
}

TEST_CASE("integral identity, both forms against enumeration") {
  const auto t = build_sieve(200);
  for (const auto& chi : characters_mod(5)) {
    const double delta = chi.is_principal() ? 1.0 : 0.0;
    for (int k = 3; k <= 4; ++k) {
      for (std::int64_t n : {5, 12, 19}) {
        const double N = 20.0;
        const auto f = [&](std::int64_t m) { return (t.lambda(m) * chi(m) - delta) * std::exp(-m / N); };
        const auto g = [&](std::int64_t m) { return cd(std::exp(-m / N), 0.0); };
        const cd brute = enumerate(n, k, f, g);
        const auto c = w_integral_identity_check(n, k, chi, 20, t);
        CHECK(std::abs(c.composition_form - brute) < 1e-12 * std::max(1.0, c.scale));
        CHECK(c.residual <= 1e-12 * std::max(1.0, c.scale));
      }
    }
  }
}

TEST_CASE("psi_j sums") {
  const auto t = build_sieve(100);
  const auto zeta = principal_character(1);
  CHECK(psi_j(10.0, 0, zeta, t).real() == doctest::Approx(3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0)));
  CHECK(psi_j(10.0, 1, zeta, t).real() ==
        doctest::Approx(std::log(2.0) * (8 + 6 + 2) + std::log(3.0) * (7 + 1) + std::log(5.0) * 5 + std::log(7.0) * 3));
  CHECK_THROWS_AS(psi_j(1.0, 1, zeta, t), ValidationError);
  CHECK_THROWS_AS(psi_j(500.0, 1, zeta, t), RangeError);
}

TEST_CASE("secondary term is real and needs every zero list") {
  const ZeroStore store(store_dir());
  const auto s = secondary_term(301, 5, 3, 60.0, store);
  CHECK(std::abs(s.value.imag()) < 1e-9 * std::abs(s.value.real()));
  REQUIRE(s.per_q.size() == 3);  // q = 1, 2, 3
  CHECK(std::abs(s.per_q[0].second - s.per_q[1].second) < 1e-9 * std::abs(s.per_q[0].second));
  CHECK(s.q_tail == doctest::Approx(std::pow(3.0, -4.0) * std::pow(301.0, 3.5)));
  CHECK_THROWS_AS(secondary_term(301, 4, 3, 60.0, store), ValidationError);
  CHECK_THROWS_WITH_AS(secondary_term(301, 5, 5, 60.0, store), doctest::Contains("q=5 chi=1"), DependencyError);
  CHECK_THROWS_AS(secondary_term(301, 5, 3, 80.0, store), DependencyError);
}

TEST_CASE("engine reports") {
  const ZeroStore store(store_dir());
  const ExplicitFormulaEngine engine(5, 400, store);
  const auto odd = engine.report(301, 3, 60.0);
  CHECK(odd.r_exact == doctest::Approx(rk_exact(301, 5, engine.tables())).epsilon(1e-14));
  CHECK(odd.residual == doctest::Approx(odd.r_exact - odd.main - odd.secondary.real()));
  CHECK(odd.imaginary_ok);
  CHECK_FALSE(odd.parity);
  const auto even = engine.report(300, 3, 60.0);
  CHECK(even.parity);
  CHECK(even.main == 0.0);

  bool capped = false;
  CHECK(engine.default_level(400, 60.0, &capped) == 4);  // 4 needs nothing beyond mod 3
  CHECK(capped);
  CHECK(engine.default_level(36, 60.0, &capped) == 3);
  CHECK_FALSE(capped);

  const auto rows = engine.sweep({301, 303, 500}, 3, 60.0);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].report);
  CHECK(rows[2].error_kind == ErrorKind::range);
  const auto summary = summarize(rows);
  CHECK(summary.rows == 3);
  CHECK(summary.failures == 1);

  CHECK_THROWS_AS(ExplicitFormulaEngine(4, 100, store), ValidationError);
  CHECK(median_abs({-3.0, 1.0, 2.0, -10.0}) == 2.5);
}

TEST_CASE("report serialisation") {
  const ZeroStore store(store_dir());
  const auto r = explicit_formula_report(301, 5, 3, 60.0, store);
  const std::string line = to_json_line(r);
  CHECK(line.find("\"n\":301") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
  const std::string row = to_csv_row(r);
  const std::string header = csv_header();
  CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
}

}
