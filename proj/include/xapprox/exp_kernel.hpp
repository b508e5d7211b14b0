#pragma once

// The extremal approximation of exp(-lambda |x|) by entire functions of
// exponential type pi*delta:
//
//   K(lambda, z) = (cos(pi z)/pi) sum_n (-1)^n exp(-lambda |n - 1/2|) / (z - n + 1/2)
//
// evaluated in its dilated form K(lambda/delta, delta z). The kernel
// interpolates exp(-lambda |x|) at the half-integers and the error
// exp(-lambda |x|) - K(lambda, x) has the sign of cos(pi x).

#include <complex>
#include <cstdint>

#include "xapprox/quadrature.hpp"

namespace xapprox {

struct ExpKernel {
  double lambda = 1.0;
  double delta = 1.0;

  void validate() const;
  /// Decay rate of the undilated kernel, lambda / delta.
  double scaled_lambda() const { return lambda / delta; }
};

/// K(lambda/delta, delta z), even in z, accurate to about 1e-15 (1 + |K|).
std::complex<double> eval_K(const ExpKernel& k, std::complex<double> z);
double eval_K(const ExpKernel& k, double x);

/// Fourier transform of the undilated kernel,
///   sinh(lambda/2) cos(pi t) / (sinh^2(lambda/2) + sin^2(pi t))  for |t| <= 1/2,
/// and 0 outside. Nonnegative, exactly zero at |t| = 1/2.
double K_hat_unit(double lambda, double t);

/// Transform of x -> K(lambda/delta, delta x): delta^{-1} K_hat(lambda/delta, t/delta),
/// supported on [-delta/2, delta/2].
double K_hat(const ExpKernel& k, double t);

/// Optimal L1(R) error 2/lambda - (2/lambda) sech(lambda / (2 delta)).
double l1_error_exp(double lambda, double delta);

/// exp(-lambda |x|) - K(lambda/delta, delta x).
double error_exp(const ExpKernel& k, double x);

/// C(lambda + w) - C(lambda - w) with C(w) = -1/(2 cosh(w/2)), in a
/// cancellation-free form; strictly positive for lambda, w > 0.
double kernel_error_density(double lambda, double w);

/// Independent route to the error for x >= 0 (delta = 1):
///   (cos(pi x)/pi) int_0^inf (C(lambda + w) - C(lambda - w)) exp(-x w) dw.
double error_exp_integral_oracle(double lambda, double x, const QuadratureConfig& cfg = {});

/// int_T^inf |exp(-lambda u) - K(lambda, u)| du for a half-integer T > 0,
/// via the integral representation and the Laplace transform of |cos(pi u)|.
double error_exp_tail_l1(double lambda, double T, const QuadratureConfig& cfg = {});

/// L1(R) norm of the error computed by sign-split Gauss-Legendre quadrature
/// between consecutive nodes on [-T, T] plus the exact tail beyond T.
double l1_error_exp_quadrature(const ExpKernel& k, double T = 40.5, int order = 32,
                               const QuadratureConfig& cfg = {});

/// Partial sum, over `terms` paired frequencies, of the lower bound obtained
/// by testing the error against sgn(cos(pi delta x)).
double dual_lower_bound_exp(double lambda, double delta, std::int64_t terms);

}  // namespace xapprox
