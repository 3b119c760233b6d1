#pragma once

#include <complex>

namespace kprimes {

/// log Γ(z) from the Lanczos (g = 7, n = 9) approximation, about 15 digits.
/// On Re z > 0 the imaginary part is the branch continuous from the real axis,
/// which is what zero counting needs.
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma(std::complex<double> z);

}  // namespace kprimes
