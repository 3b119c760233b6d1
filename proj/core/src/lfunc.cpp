#include "kprimes/lfunc.hpp"
#include "kprimes/zero_io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kprimes/errors.hpp"
#include "kprimes/gamma.hpp"
#include "kprimes/hurwitz.hpp"

namespace kprimes {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_primitive(const DirichletCharacter& chi, const char* who) {
  if (!chi.is_primitive()) {
    throw ValidationError(std::string(who) + ": character mod " + std::to_string(chi.modulus()) +
                          " is not primitive (conductor " + std::to_string(chi.conductor()) +
                          "); pass the inducing primitive character");
  }
}

double bisect(const RotatedL& z, double lo, double f_lo, double hi, double tolerance) {
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = z(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> scan_sign_changes(const RotatedL& z, double height, double step, double tolerance) {
  std::vector<double> roots;
  const auto intervals = static_cast<std::int64_t>(std::ceil(height / step));
  double t_prev = 0.0;
  double f_prev = z(0.0);
  for (std::int64_t i = 1; i <= intervals; ++i) {
    const double t = (i == intervals) ? height : height * static_cast<double>(i) / intervals;
    const double f = z(t);
    if (f == 0.0) {
      roots.push_back(t);
    } else if (f_prev != 0.0 && (f < 0.0) != (f_prev < 0.0)) {
      roots.push_back(bisect(z, t_prev, f_prev, t, tolerance));
    }
    t_prev = t;
    f_prev = f;
  }
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

ZeroList find_zeros(const DirichletCharacter& chi, double height, const ZeroSearchOptions& options) {
  require_primitive(chi, "l_zeros");
  if (!(height >= 0.0) || height > options.limits.max_height) {
    throw RangeError("zero height " + format_ordinate(height) + " outside [0, " +
                     std::to_string(options.limits.max_height) + "]");
  }
  const RotatedL z(chi, options.limits);
  ZeroList out;
  out.key = ZeroKey::of(chi);
  out.height = height;
  out.source = ZeroSource::computed;
  out.self_dual = chi.is_real();
  if (height == 0.0) return out;

  double bad_lo = 0.0;
  double bad_hi = height;
  for (int pass = 0; pass <= options.refinement_passes; ++pass) {
    const double step = options.step / std::ldexp(1.0, pass);
    auto roots = scan_sign_changes(z, height, step, options.tolerance);
    if (zero_count_consistent(roots, height, z, options.count_slack, &bad_lo, &bad_hi)) {
      out.ordinates = std::move(roots);
      const ZeroValidation check = validate_zero_list(out, options);
      if (!check.ok()) {
        throw PrecisionError("zero list for " + out.key.describe() +
                             " failed validation (max |L| = " + std::to_string(check.max_abs_l) + ")");
      }
      return out;
    }
  }
  throw IncompletenessError(bad_lo, bad_hi,
                            "zero count for " + out.key.describe() +
                                " disagrees with the counting formula after refinement; suspect interval [" +
                                std::to_string(bad_lo) + ", " + std::to_string(bad_hi) + "]");
}

}  // namespace

std::complex<double> l_value_at(const DirichletCharacter& chi, std::complex<double> s) {
  const std::int64_t q = chi.modulus();
  if (q == 1) return hurwitz_zeta(s, 1.0);
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t a = 1; a <= q; ++a) {
    const CharValue v = chi.value(a);
    if (v.zero) continue;
    sum += v.value() * hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
  }
  return std::exp(-s * std::log(static_cast<double>(q))) * sum;
}

std::complex<double> l_value(const DirichletCharacter& chi, double t, const LFunctionLimits& limits) {
  require_primitive(chi, "l_value");
  if (chi.conductor() > limits.max_conductor) {
    throw RangeError("l_value: conductor " + std::to_string(chi.conductor()) + " exceeds " +
                     std::to_string(limits.max_conductor));
  }
  if (std::abs(t) > limits.max_height) {
    throw RangeError("l_value: |t| = " + std::to_string(t) + " exceeds " + std::to_string(limits.max_height));
  }
  return l_value_at(chi, {0.5, t});
}

RotatedL::RotatedL(const DirichletCharacter& chi, const LFunctionLimits& limits)
    : chi_(chi), limits_(limits), kappa_(chi.parity() == 1 ? 0 : 1) {
  require_primitive(chi_, "RotatedL");
  const double q = static_cast<double>(chi_.modulus());
  const std::complex<double> i_kappa = kappa_ == 0 ? std::complex<double>{1.0, 0.0} : kI;
  root_number_ = gauss_sum(chi_) / (i_kappa * std::sqrt(q));
  half_root_inverse_ = std::sqrt(std::conj(root_number_));
}

std::complex<double> RotatedL::rotated(double t) const {
  const double q = static_cast<double>(chi_.modulus());
  const double phase = 0.5 * t * std::log(q / std::numbers::pi) +
                       log_gamma({0.5 * (0.5 + kappa_), 0.5 * t}).imag();
  return half_root_inverse_ * std::exp(kI * phase) * l(t);
}

double RotatedL::count_main(double height) const {
  const double q = static_cast<double>(chi_.modulus());
  const double smooth = 0.5 * height * std::log(q / std::numbers::pi) +
                        log_gamma({0.5 * (0.5 + kappa_), 0.5 * height}).imag();
  return smooth / std::numbers::pi + (chi_.modulus() == 1 ? 1.0 : 0.0);
}

std::string ZeroKey::describe() const {
  if (is_zeta()) return "zeta";
  std::string vec;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) vec += ',';
    vec += std::to_string(exponents[i]);
  }
  return "q=" + std::to_string(conductor) + " chi=" + vec;
}

std::string ZeroKey::filename() const {
  if (is_zeta()) return "zeta.zeros";
  std::string vec;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) vec += '-';
    vec += std::to_string(exponents[i]);
  }
  return "q" + std::to_string(conductor) + "_chi" + vec + ".zeros";
}

DirichletCharacter ZeroKey::character() const {
  if (is_zeta()) return principal_character(1);
  return character_from_exponents(conductor, exponents);
}

ZeroKey ZeroKey::of(const DirichletCharacter& primitive_chi) {
  require_primitive(primitive_chi, "ZeroKey");
  ZeroKey key;
  key.conductor = primitive_chi.modulus();
  if (key.conductor > 1) key.exponents = primitive_chi.exponents();
  return key;
}

ZeroList zeta_zeros(double height, const ZeroSearchOptions& options) {
  return find_zeros(principal_character(1), height, options);
}

ZeroList l_zeros(const DirichletCharacter& chi, double height, const ZeroSearchOptions& options) {
  return find_zeros(chi, height, options);
}

bool zero_count_consistent(const std::vector<double>& ordinates, double height, const RotatedL& z,
                           double slack, double* bad_lo, double* bad_hi) {
  double prev = 0.0;
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    const double gamma = ordinates[i];
    const double expected = z.count_main(gamma);
    // Just below γ the count is i, at γ it is i + 1.
    if (std::abs(static_cast<double>(i) - expected) > slack ||
        std::abs(static_cast<double>(i + 1) - expected) > slack) {
      if (bad_lo) *bad_lo = prev;
      if (bad_hi) *bad_hi = gamma;
      return false;
    }
    prev = gamma;
  }
  if (std::abs(static_cast<double>(ordinates.size()) - z.count_main(height)) > slack) {
    if (bad_lo) *bad_lo = prev;
    if (bad_hi) *bad_hi = height;
    return false;
  }
  return true;
}

ZeroValidation validate_zero_list(const ZeroList& zeros, const ZeroSearchOptions& options) {
  ZeroValidation result;
  const RotatedL z(zeros.key.character(), options.limits);
  double prev = 0.0;
  for (const double gamma : zeros.ordinates) {
    if (!(gamma > prev) || gamma > zeros.height) result.ordered = false;
    prev = gamma;
    const double below = z(gamma - options.tolerance);
    const double above = z(gamma + options.tolerance);
    if (below * above > 0.0) result.bracketed = false;
    const double abs_l = std::abs(z.l(gamma));
    result.max_abs_l = std::max(result.max_abs_l, abs_l);
    if (abs_l >= options.validation_tolerance) result.small_value = false;
  }
  result.count_ok = zero_count_consistent(zeros.ordinates, zeros.height, z, options.count_slack);
  return result;
}

std::vector<double> signed_ordinates(const ZeroList& positive, const ZeroList& conjugate, double height) {
  std::vector<double> out;
  for (const double g : positive.ordinates) {
    if (g <= height) out.push_back(g);
  }
  for (const double g : conjugate.ordinates) {
    if (g <= height) out.push_back(-g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kprimes
