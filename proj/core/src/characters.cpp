#include "kprimes/characters.hpp"

#include <numbers>
#include <numeric>
#include <string>

#include "kprimes/arithmetic.hpp"
#include "kprimes/errors.hpp"

namespace kprimes {
namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    std::int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw ValidationError("mod_inverse: not invertible");
  return ((old_s % m) + m) % m;
}

std::int64_t primitive_root_mod_prime(std::int64_t p) {
  if (p == 2) return 1;
  std::vector<std::int64_t> factors;
  for (const auto& pp : factorize_small(p - 1)) factors.push_back(pp.prime);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const std::int64_t r : factors) {
      if (powmod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw ValidationError("no primitive root found");  // unreachable for primes
}

int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Lift a local residue mod pe to Z/q with the other CRT components equal to 1.
std::int64_t crt_lift(std::int64_t local, std::int64_t pe, std::int64_t q) {
  const std::int64_t rest = q / pe;
  if (rest == 1) return ((local % pe) + pe) % pe;
  // x = 1 + rest * t, with 1 + rest * t ≡ local (mod pe)
  const std::int64_t t = ((local - 1) % pe + pe) % pe * mod_inverse(rest, pe) % pe;
  return (1 + rest * t) % q;
}

}  // namespace

std::complex<double> unit_root(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % den;
  if (r < 0) r += den;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == den) return {-1.0, 0.0};
  if (4 * r == den) return {0.0, 1.0};
  if (4 * r == 3 * den) return {0.0, -1.0};
  if (2 * r > den) r -= den;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> CharValue::value() const {
  if (zero) return {0.0, 0.0};
  return unit_root(num, den);
}

UnitGroup::UnitGroup(std::int64_t q) : q_(q) {
  const auto qs = static_cast<std::size_t>(q);
  unit_.assign(qs, 0);
  for (std::int64_t r = 0; r < q; ++r) unit_[r] = gcd64(r, q) == 1 ? 1 : 0;

  // Per-generator local discrete-log tables indexed by residue mod p^e.
  std::vector<std::vector<std::int32_t>> local_logs;
  std::vector<std::int64_t> local_moduli;

  for (const auto& pp : factorize_small(q)) {
    const std::int64_t p = pp.prime;
    const int e = pp.exponent;
    const std::int64_t pe = ipow(p, e);
    if (p == 2) {
      if (e == 1) continue;
      // <-1>: residues ≡ 3 (mod 4) have log 1.
      std::vector<std::int32_t> minus_log(static_cast<std::size_t>(pe), -1);
      for (std::int64_t x = 1; x < pe; x += 2) minus_log[x] = (x % 4 == 3) ? 1 : 0;
      gens_.push_back({crt_lift(pe - 1, pe, q), 2, 2, e, true});
      local_logs.push_back(std::move(minus_log));
      local_moduli.push_back(pe);
      if (e >= 3) {
        const std::int64_t order = pe / 4;
        std::vector<std::int32_t> five_log(static_cast<std::size_t>(pe), -1);
        std::int64_t x = 1;
        for (std::int64_t j = 0; j < order; ++j) {
          five_log[x] = static_cast<std::int32_t>(j);
          five_log[pe - x] = static_cast<std::int32_t>(j);  // -x shares the <5> component
          x = x * 5 % pe;
        }
        gens_.push_back({crt_lift(5, pe, q), order, 2, e, false});
        local_logs.push_back(std::move(five_log));
        local_moduli.push_back(pe);
      }
      continue;
    }
    std::int64_t g = primitive_root_mod_prime(p);
    if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    const std::int64_t order = pe / p * (p - 1);
    std::vector<std::int32_t> table(static_cast<std::size_t>(pe), -1);
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < order; ++j) {
      table[x] = static_cast<std::int32_t>(j);
      x = x * g % pe;
    }
    gens_.push_back({crt_lift(g, pe, q), order, p, e, false});
    local_logs.push_back(std::move(table));
    local_moduli.push_back(pe);
  }

  for (const auto& gen : gens_) {
    exponent_ = std::lcm(exponent_, gen.order);
    size_ *= gen.order;
  }

  const std::size_t ng = gens_.size();
  logs_.assign(qs * ng, -1);
  for (std::int64_t r = 0; r < q; ++r) {
    if (!unit_[r]) continue;
    for (std::size_t i = 0; i < ng; ++i) {
      logs_[static_cast<std::size_t>(r) * ng + i] = local_logs[i][r % local_moduli[i]];
    }
  }
}

std::shared_ptr<const UnitGroup> UnitGroup::create(std::int64_t q, std::int64_t max_q) {
  if (q < 1 || q > max_q) {
    throw RangeError("modulus " + std::to_string(q) + " outside [1, " + std::to_string(max_q) + "]");
  }
  return std::shared_ptr<const UnitGroup>(new UnitGroup(q));
}

bool UnitGroup::is_unit(std::int64_t m) const {
  const std::int64_t r = ((m % q_) + q_) % q_;
  return unit_[static_cast<std::size_t>(r)] != 0;
}

bool UnitGroup::log(std::int64_t m, std::vector<std::int64_t>& out) const {
  const std::int64_t r = ((m % q_) + q_) % q_;
  if (!unit_[static_cast<std::size_t>(r)]) return false;
  const std::size_t ng = gens_.size();
  out.resize(ng);
  for (std::size_t i = 0; i < ng; ++i) out[i] = logs_[static_cast<std::size_t>(r) * ng + i];
  return true;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& gens = group_->generators();
  if (exponents_.size() != gens.size()) {
    throw ValidationError("exponent vector has " + std::to_string(exponents_.size()) +
                          " entries, modulus " + std::to_string(group_->modulus()) + " needs " +
                          std::to_string(gens.size()));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    exponents_[i] = ((exponents_[i] % gens[i].order) + gens[i].order) % gens[i].order;
    order_ = std::lcm(order_, gens[i].order / std::gcd(exponents_[i], gens[i].order));
  }

  // Conductor: each local factor contributes the least p^f whose reduction kernel χ kills.
  conductor_ = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& gen = gens[i];
    const std::int64_t local_order = gen.order / std::gcd(exponents_[i], gen.order);
    if (gen.prime != 2) {
      if (local_order > 1) conductor_ *= ipow(gen.prime, 1 + valuation(local_order, gen.prime));
      continue;
    }
    if (!gen.is_minus_one) continue;  // <5> handled together with <-1>
    const bool odd_part = exponents_[i] != 0;
    std::int64_t five_order = 1;
    if (i + 1 < gens.size() && gens[i + 1].prime == 2 && !gens[i + 1].is_minus_one) {
      five_order = gens[i + 1].order / std::gcd(exponents_[i + 1], gens[i + 1].order);
    }
    if (five_order > 1) {
      conductor_ *= ipow(2, 2 + valuation(five_order, 2));
    } else if (odd_part) {
      conductor_ *= 4;
    }
  }

  const CharValue minus_one = value(-1);
  parity_ = (minus_one.num % minus_one.den == 0) ? 1 : -1;
}

CharValue DirichletCharacter::value(std::int64_t m) const {
  thread_local std::vector<std::int64_t> logs;
  CharValue v;
  if (!group_->log(m, logs)) return v;
  const auto& gens = group_->generators();
  const std::int64_t big = group_->exponent();
  std::int64_t num = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    num = (num + exponents_[i] * logs[i] % gens[i].order * (big / gens[i].order)) % big;
  }
  const std::int64_t g = std::gcd(num, big);
  v.zero = false;
  v.num = num / g;
  v.den = big / g;
  return v;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<std::int64_t> conj(exponents_.size());
  const auto& gens = group_->generators();
  for (std::size_t i = 0; i < conj.size(); ++i) conj[i] = (gens[i].order - exponents_[i]) % gens[i].order;
  return DirichletCharacter(group_, std::move(conj));
}

std::string DirichletCharacter::exponent_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents_[i]);
  }
  return out;
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
  return modulus() == other.modulus() && exponents_ == other.exponents_;
}

std::vector<DirichletCharacter> characters_mod(std::int64_t q, std::int64_t max_q) {
  auto group = UnitGroup::create(q, max_q);
  const auto& gens = group->generators();
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(group->size()));
  std::vector<std::int64_t> exps(gens.size(), 0);
  while (true) {
    out.emplace_back(group, exps);
    // Odometer: the last coordinate varies fastest.
    std::size_t i = exps.size();
    while (i > 0) {
      --i;
      if (++exps[i] < gens[i].order) break;
      exps[i] = 0;
      if (i == 0) return out;
    }
    if (exps.empty()) return out;
  }
}

DirichletCharacter character_from_exponents(std::int64_t q, std::vector<std::int64_t> exponents) {
  auto group = UnitGroup::create(q);
  const auto& gens = group->generators();
  if (exponents.size() != gens.size()) {
    throw ValidationError("modulus " + std::to_string(q) + " has " + std::to_string(gens.size()) +
                          " generators, got " + std::to_string(exponents.size()) + " exponents");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] >= gens[i].order) {
      throw ValidationError("exponent " + std::to_string(exponents[i]) + " out of range for order " +
                            std::to_string(gens[i].order));
    }
  }
  return DirichletCharacter(std::move(group), std::move(exponents));
}

DirichletCharacter principal_character(std::int64_t q) {
  auto group = UnitGroup::create(q);
  std::vector<std::int64_t> zeros(group->generators().size(), 0);
  return DirichletCharacter(std::move(group), std::move(zeros));
}

CharValue char_value(const DirichletCharacter& chi, std::int64_t m) { return chi.value(m); }

std::complex<double> c_chi(const DirichletCharacter& chi, std::int64_t m) {
  const std::int64_t q = chi.modulus();
  const std::int64_t m_red = ((m % q) + q) % q;
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t a = 1; a <= q; ++a) {
    const CharValue v = chi.value(a);
    if (v.zero) continue;
    // χ(a) e(ma/q) = e(num/den + (ma mod q)/q), combined over the denominator den*q.
    const std::int64_t ma = m_red * a % q;
    sum += unit_root(v.num * q + ma * v.den, v.den * q);
  }
  return sum;
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) { return c_chi(chi, 1); }

DirichletCharacter induce(const DirichletCharacter& chi1, std::int64_t q) {
  const std::int64_t q1 = chi1.modulus();
  if (q < 1 || q % q1 != 0) {
    throw ValidationError("induce: modulus " + std::to_string(q1) + " does not divide " +
                          std::to_string(q));
  }
  auto group = UnitGroup::create(q);
  const auto& gens = group->generators();
  std::vector<std::int64_t> exps(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const CharValue v = chi1.value(gens[i].generator);
    exps[i] = v.num * (gens[i].order / v.den) % gens[i].order;
  }
  return DirichletCharacter(std::move(group), std::move(exps));
}

DirichletCharacter primitive_inducing(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  const std::int64_t q1 = chi.conductor();
  auto group = UnitGroup::create(q1);
  const auto& gens = group->generators();
  std::vector<std::int64_t> exps(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::int64_t h = gens[j].generator;
    while (gcd64(h, q) != 1) h += q1;
    const CharValue v = chi.value(h);
    exps[j] = v.num * (gens[j].order / v.den) % gens[j].order;
  }
  DirichletCharacter out(std::move(group), std::move(exps));
  if (!out.is_primitive()) {
    throw ValidationError("primitive_inducing: reduction of character mod " + std::to_string(q) +
                          " is not primitive");
  }
  return out;
}

}  // namespace kprimes
