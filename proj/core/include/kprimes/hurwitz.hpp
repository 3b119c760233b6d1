#pragma once

#include <complex>

namespace kprimes {

/// ζ(s, a) for 0 < a <= 1 by Euler–Maclaurin summation. The cut-off N and the
/// number of Bernoulli corrections are chosen from |s| so the remainder stays
/// below ~1e-15 relative to the leading terms. Requires s != 1.
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);

/// B_{2j} / (2j)! for j >= 1.
double bernoulli_over_factorial(int j);

}  // namespace kprimes
