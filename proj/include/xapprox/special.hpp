#pragma once

// Elementary functions with exact zeros at the lattice points and
// cancellation-free forms of the hyperbolic differences that appear in the
// extremal error formulas.

#include <complex>

namespace xapprox {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// sin(pi x), exactly zero at integers.
double sin_pi(double x);
/// cos(pi x), exactly zero at half-integers.
double cos_pi(double x);
std::complex<double> sin_pi(std::complex<double> z);
std::complex<double> cos_pi(std::complex<double> z);

/// sin(pi d) / (pi d) with the removable point d = 0.
std::complex<double> sinc_pi(std::complex<double> d);

double sech(double x);
double csch(double x);
double coth(double x);

/// 1 - sech(x), accurate for small |x|.
double one_minus_sech(double x);
/// sinh(x) - x, accurate for small |x|.
double sinh_minus_x(double x);
/// 1/x - csch(x), accurate for small |x|; the x -> 0 limit is 0.
double inv_minus_csch(double x);

}  // namespace xapprox
