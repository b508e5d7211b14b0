#pragma once

// Best L1 approximations of the measure-generated targets f_mu by entire
// functions of exponential type pi*delta. The type-pi*delta approximant is
// the half-integer cardinal series of f_mu sampled at the nodes m/delta,
//
//   Ktilde(z) = sum_m f_mu(m / delta) sinc(pi (delta z - m)),
//
// which equals K_nu(delta z) + f_mu(1/delta) for the dilated measure nu.
// Three presentations are exposed: the raw pair (f_mu, Ktilde), the log
// pair (log|x|, V = -Ktilde) for Haar measure and the power pair
// (|x|^{sigma-1}, V_sigma = Ktilde / Gamma(1-sigma) + 1).

#include <complex>

#include "xapprox/measure.hpp"
#include "xapprox/quadrature.hpp"
#include "xapprox/series.hpp"

namespace xapprox {

enum class TargetForm { RawKmu, LogForm, PowerForm };

struct EntireApproximant {
  MeasureSpec spec;
  double delta = 1.0;
  TargetForm form = TargetForm::RawKmu;

  /// Checks the measure, delta > 0 and that LogForm pairs with HaarLog and
  /// PowerForm with PowerSigma.
  void validate() const;
};

/// LogForm for HaarLog, PowerForm for PowerSigma, RawKmu for point masses.
EntireApproximant natural_approximant(const MeasureSpec& spec, double delta = 1.0);

/// tol 1e-11, max_pairs 2e6; EulerAveraging for the densities, None for
/// point masses (their node values converge geometrically to a constant).
SeriesControl default_series_control(const MeasureSpec& spec);

/// Target function in the approximant's presentation.
double target(const EntireApproximant& a, double x);

/// Approximant in the approximant's presentation, by the cardinal series.
std::complex<double> eval_K_mu(const EntireApproximant& a, std::complex<double> z,
                               const SeriesControl& ctl);
double eval_K_mu(const EntireApproximant& a, double x, const SeriesControl& ctl);
double eval_K_mu(const EntireApproximant& a, double x);

/// target(x) - eval_K_mu(x) through the series path.
double error_mu_series(const EntireApproximant& a, double x, const SeriesControl& ctl);

/// target(x) - approximant(x) through the lambda-integral of the exponential
/// kernel errors, int (exp(-lambda|x|) - K(lambda/delta, delta x)) dmu.
/// Independent of the series path. Requires x != 0 unless f_mu(0) is finite.
double error_mu_pointwise(const EntireApproximant& a, double x, const QuadratureConfig& cfg = {});

/// Approximant value through int (K(lambda/delta, delta x) - exp(-lambda)) dmu;
/// valid at every real x including 0.
double approximant_integral_oracle(const EntireApproximant& a, double x,
                                   const QuadratureConfig& cfg = {});

/// Closed-form optimal L1 error in the natural presentation:
/// point masses sum w_j l1_error_exp(lambda_j, delta); Haar 4G/(pi delta);
/// power (1/|Gamma(1-sigma)|) 4 beta(1+sigma) / (sin(pi sigma/2) pi^sigma) delta^{-sigma}.
double l1_error_mu(const MeasureSpec& spec, double delta);

/// The same quantity as int (2/lambda)(1 - sech(lambda/(2 delta))) dmu by
/// quadrature (scaled by 1/|Gamma(1-sigma)| for power measures).
double l1_error_mu_quadrature(const MeasureSpec& spec, double delta, const QuadratureConfig& cfg = {});

/// L1(R) norm of the pointwise error of the natural approximant: piecewise
/// quadrature of |target - approximant| between the nodes on [-T, T]
/// (T delta must be a half-integer) plus the tail beyond T, computed as
/// int dmu(lambda) int_T^inf |exp(-lambda x) - K(lambda/delta, delta x)| dx.
double l1_error_mu_x_quadrature(const MeasureSpec& spec, double delta, double T,
                                const QuadratureConfig& cfg = {});

/// Fourier transform at t != 0 of the raw error f_mu - Ktilde:
///   int 2 lambda / (lambda^2 + 4 pi^2 t^2) dmu - delta^{-1} int K_hat(lambda/delta, t/delta) dmu.
double error_fourier_transform(const MeasureSpec& spec, double delta, double t,
                               const QuadratureConfig& cfg = {});

}  // namespace xapprox
