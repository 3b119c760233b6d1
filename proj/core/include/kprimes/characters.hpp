#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace kprimes {

inline constexpr std::int64_t kDefaultCharacterModulusMax = 10'000;

/// One cyclic factor of (Z/q)^*: a generator lifted to Z/q by CRT.
struct UnitGenerator {
  std::int64_t generator;  // residue mod q
  std::int64_t order;
  std::int64_t prime;      // prime of the local factor this generator belongs to
  int prime_exponent;      // e in p^e
  bool is_minus_one;       // the <-1> factor of (Z/2^e)^*, e >= 2
};

/// Structure of (Z/q)^*: CRT generators and a discrete-log table.
class UnitGroup {
 public:
  static std::shared_ptr<const UnitGroup> create(std::int64_t q,
                                                 std::int64_t max_q = kDefaultCharacterModulusMax);

  std::int64_t modulus() const noexcept { return q_; }
  const std::vector<UnitGenerator>& generators() const noexcept { return gens_; }
  /// lcm of the generator orders.
  std::int64_t exponent() const noexcept { return exponent_; }
  std::int64_t size() const noexcept { return size_; }

  /// Discrete logs of m mod q on each generator; false if gcd(m,q) > 1.
  bool log(std::int64_t m, std::vector<std::int64_t>& out) const;
  bool is_unit(std::int64_t m) const;

 private:
  explicit UnitGroup(std::int64_t q);

  std::int64_t q_;
  std::int64_t exponent_ = 1;
  std::int64_t size_ = 1;
  std::vector<UnitGenerator> gens_;
  std::vector<std::int32_t> logs_;  // q_ * gens_.size(), -1 for non-units
  std::vector<std::uint8_t> unit_;
};

/// χ(m) as an exact root of unity e(num/den), or zero.
struct CharValue {
  bool zero = true;
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::complex<double> value() const;
  bool operator==(const CharValue&) const = default;
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> exponents);

  std::int64_t modulus() const noexcept { return group_->modulus(); }
  const std::vector<UnitGenerator>& generators() const noexcept { return group_->generators(); }
  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
  const std::shared_ptr<const UnitGroup>& group() const noexcept { return group_; }

  std::int64_t order() const noexcept { return order_; }
  std::int64_t conductor() const noexcept { return conductor_; }
  bool is_principal() const noexcept { return order_ == 1; }
  bool is_primitive() const noexcept { return conductor_ == modulus(); }
  bool is_real() const noexcept { return order_ <= 2; }
  /// χ(-1) as ±1.
  int parity() const noexcept { return parity_; }

  CharValue value(std::int64_t m) const;
  std::complex<double> operator()(std::int64_t m) const { return value(m).value(); }

  DirichletCharacter conjugate() const;

  /// Exponent vector rendered as "e1,e2,..." (empty for the trivial group).
  std::string exponent_string() const;

  bool operator==(const DirichletCharacter& other) const;

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<std::int64_t> exponents_;
  std::int64_t order_ = 1;
  std::int64_t conductor_ = 1;
  int parity_ = 1;
};

/// All φ(q) characters mod q, lexicographic in exponent vectors; index 0 is principal.
std::vector<DirichletCharacter> characters_mod(std::int64_t q,
                                               std::int64_t max_q = kDefaultCharacterModulusMax);

DirichletCharacter character_from_exponents(std::int64_t q, std::vector<std::int64_t> exponents);
DirichletCharacter principal_character(std::int64_t q);

CharValue char_value(const DirichletCharacter& chi, std::int64_t m);

/// τ(χ) = Σ_{a=1}^{q} χ(a) e(a/q).
std::complex<double> gauss_sum(const DirichletCharacter& chi);

/// c_χ(m) = Σ_{a=1}^{q} χ(a) e(ma/q).
std::complex<double> c_chi(const DirichletCharacter& chi, std::int64_t m);

/// The character mod q induced by chi1 mod q1, q1 | q.
DirichletCharacter induce(const DirichletCharacter& chi1, std::int64_t q);

/// The primitive character mod conductor(chi) that induces chi.
DirichletCharacter primitive_inducing(const DirichletCharacter& chi);

/// e(x) = exp(2πix) for x = num/den, reduced mod 1 exactly before rounding.
std::complex<double> unit_root(std::int64_t num, std::int64_t den);

}  // namespace kprimes
