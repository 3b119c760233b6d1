#include <cmath>
#include <complex>

#include "doctest.h"
#include "kprimes/arithmetic.hpp"
#include "kprimes/characters.hpp"
#include "kprimes/errors.hpp"

using namespace kprimes;
using cd = std::complex<double>;

namespace {

// Smallest d | q with chi(a) = chi(b) whenever a = b mod d and both are units mod q.
std::int64_t brute_conductor(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  for (std::int64_t d = 1; d <= q; ++d) {
    if (q % d != 0) continue;
    bool periodic = true;
    for (std::int64_t a = 1; a <= q && periodic; ++a) {
      if (gcd64(a, q) != 1) continue;
      for (std::int64_t b = a + d; b <= q; b += d) {
        if (gcd64(b, q) == 1 && std::abs(chi(a) - chi(b)) > 1e-12) {
          periodic = false;
          break;
        }
      }
    }
    if (periodic) return d;
  }
  return q;
}

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("group sizes and multiplicativity") {
  for (std::int64_t q = 1; q <= 60; ++q) {
    const auto chars = characters_mod(q);
    CHECK(static_cast<std::int64_t>(chars.size()) == totient_small(q));
    for (const auto& chi : chars) {
      for (std::int64_t a = 1; a <= q; ++a) {
        for (std::int64_t b = 1; b <= q; b += 3) {
          CHECK(std::abs(chi(a * b) - chi(a) * chi(b)) < 1e-12);
        }
        CHECK(std::abs(chi(a + q) - chi(a)) < 1e-12);
      }
    }
  }
}

TEST_CASE("orthogonality for q <= 50") {
  for (std::int64_t q = 1; q <= 50; ++q) {
    const auto chars = characters_mod(q);
    const double phi = static_cast<double>(totient_small(q));
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = 0; j < chars.size(); ++j) {
        cd s{};
        for (std::int64_t a = 1; a <= q; ++a) s += chars[i](a) * std::conj(chars[j](a));
        CHECK(std::abs(s - cd(i == j ? phi : 0.0)) < 1e-9);
      }
    }
    for (std::int64_t a = 1; a <= q; ++a) {
      cd s{};
      for (const auto& chi : chars) s += chi(a);
      CHECK(std::abs(s - cd(a % q == 1 % q ? phi : 0.0)) < 1e-9);
    }
  }
}

TEST_CASE("conductors mod 8 by brute force") {
  const auto chars = characters_mod(8);
  REQUIRE(chars.size() == 4);
  int primitive = 0;
  for (const auto& chi : chars) {
    CHECK(chi.conductor() == brute_conductor(chi));
    primitive += chi.is_primitive();
  }
  CHECK(primitive == 2);
}

TEST_CASE("conductors up to 72 by brute force") {
  for (std::int64_t q = 1; q <= 72; ++q) {
    for (const auto& chi : characters_mod(q)) CHECK(chi.conductor() == brute_conductor(chi));
  }
}

TEST_CASE("gauss sums of primitive characters") {
  for (std::int64_t q = 1; q <= 100; ++q) {
    for (const auto& chi : characters_mod(q)) {
      if (!chi.is_primitive()) continue;
      const cd tau = gauss_sum(chi);
      CHECK(std::abs(std::abs(tau) - std::sqrt(static_cast<double>(q))) < 1e-9);
      for (std::int64_t m = 0; m <= q; ++m) {
        CHECK(std::abs(c_chi(chi, m) - std::conj(chi(m)) * tau) < 1e-9);
      }
      const cd sign = chi.parity() == 1 ? cd(1.0) : cd(-1.0);
      CHECK(std::abs(gauss_sum(chi.conjugate()) - sign * std::conj(tau)) < 1e-9);
    }
  }
}

TEST_CASE("parity, conjugation and reality") {
  for (const auto& chi : characters_mod(15)) {
    CHECK(std::abs(chi(14) - cd(chi.parity(), 0.0)) < 1e-12);
    CHECK(chi.conjugate().conjugate() == chi);
    CHECK(chi.is_real() == (chi.conjugate() == chi));
  }
  CHECK(principal_character(9).is_principal());
}

TEST_CASE("induction and primitive reduction round trip") {
  for (std::int64_t q1 : {3, 4, 5, 7, 8, 12}) {
    for (const auto& chi1 : characters_mod(q1)) {
      if (!chi1.is_primitive()) continue;
      const auto chi = induce(chi1, q1 * 6);
      CHECK(chi.conductor() == q1);
      CHECK(primitive_inducing(chi) == chi1);
      for (std::int64_t a = 1; a <= chi.modulus(); ++a) {
        const cd expected = gcd64(a, chi.modulus()) == 1 ? chi1(a) : cd{};
        CHECK(std::abs(chi(a) - expected) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(induce(principal_character(5), 12), ValidationError);
}

TEST_CASE("exact values") {
  const auto chi = character_from_exponents(5, {1});
  CHECK(chi.order() == 4);
  CHECK(chi.value(4) == CharValue{false, 1, 2});
  CHECK(chi.value(10).zero);
  CHECK(std::abs(unit_root(1, 4) - cd(0.0, 1.0)) < 1e-15);
  CHECK_THROWS_AS(characters_mod(0), RangeError);
}

}
