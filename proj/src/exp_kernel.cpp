#include "xapprox/exp_kernel.hpp"

#include <algorithm>
#include <cmath>

#include "xapprox/error.hpp"
#include "xapprox/series.hpp"
#include "xapprox/special.hpp"

namespace xapprox {

void ExpKernel::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw Error(ErrorCode::InvalidArgument, "lambda must be positive and finite");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw Error(ErrorCode::InvalidArgument, "delta must be positive and finite");
}

std::complex<double> eval_K(const ExpKernel& k, std::complex<double> z) {
  const double rate = k.scaled_lambda();
  SeriesControl ctl;
  ctl.tol = 1e-15;
  return cardinal_series([rate](double m) { return std::exp(-rate * m); }, 0.0, k.delta * z, ctl);
}

double eval_K(const ExpKernel& k, double x) { return eval_K(k, std::complex<double>(x, 0.0)).real(); }

double K_hat_unit(double lambda, double t) {
  if (std::fabs(t) > 0.5) return 0.0;
  const double c = cos_pi(t);
  if (c == 0.0) return 0.0;
  const double s = std::sinh(0.5 * lambda);
  const double sn = sin_pi(t);
  if (s < 1.0) return s * c / (s * s + sn * sn);
  return c / (s + sn * sn / s);
}

double K_hat(const ExpKernel& k, double t) {
  return K_hat_unit(k.scaled_lambda(), t / k.delta) / k.delta;
}

double l1_error_exp(double lambda, double delta) {
  return 2.0 / lambda * one_minus_sech(lambda / (2.0 * delta));
}

double error_exp(const ExpKernel& k, double x) {
  return std::exp(-k.lambda * std::fabs(x)) - eval_K(k, x);
}

double kernel_error_density(double lambda, double w) {
  const double big = std::max(lambda, w);
  const double small = std::min(lambda, w);
  const double num = std::exp(-0.5 * (big - small)) * -std::expm1(-lambda) * -std::expm1(-w);
  const double den = 1.0 + std::exp(-2.0 * big) + std::exp(-(big - small)) + std::exp(-(big + small));
  return num / den;
}

double error_exp_integral_oracle(double lambda, double x, const QuadratureConfig& cfg) {
  if (!(x >= 0.0)) throw Error(ErrorCode::InvalidArgument, "integral oracle needs x >= 0");
  const double c = cos_pi(x);
  if (c == 0.0) return 0.0;
  QuadratureConfig local = cfg;
  local.tail_cut = std::max(1.0, lambda);
  const double integral = integrate_ray(
      [lambda, x](double w) {
        const double d = kernel_error_density(lambda, w);
        return d == 0.0 ? 0.0 : d * std::exp(-x * w);
      },
      0.0, local);
  return c / kPi * integral;
}

double error_exp_tail_l1(double lambda, double T, const QuadratureConfig& cfg) {
  if (!(T > 0.0) || std::remainder(T - 0.5, 1.0) != 0.0)
    throw Error(ErrorCode::InvalidArgument, "tail cut must be a positive half-integer");
  QuadratureConfig local = cfg;
  local.tail_cut = std::max(1.0, lambda);
  return integrate_ray(
      [lambda, T](double w) {
        const double d = kernel_error_density(lambda, w);
        if (d == 0.0) return 0.0;
        return d * std::exp(-w * T) * coth(0.5 * w) / (kPi * kPi + w * w);
      },
      0.0, local);
}

double l1_error_exp_quadrature(const ExpKernel& k, double T, int order, const QuadratureConfig& cfg) {
  k.validate();
  // In u = delta x the integral becomes (2/delta) int_0^inf |e^{-rate u} - K(rate, u)| du.
  const double rate = k.scaled_lambda();
  const ExpKernel unit{rate, 1.0};
  auto err = [&](double u) { return std::exp(-rate * u) - eval_K(unit, u); };
  double sum = std::fabs(integrate_gauss(err, 0.0, 0.5, order));
  for (double a = 0.5; a < T; a += 1.0) sum += std::fabs(integrate_gauss(err, a, a + 1.0, order));
  sum += error_exp_tail_l1(rate, T, cfg);
  return 2.0 * sum / k.delta;
}

double dual_lower_bound_exp(double lambda, double delta, std::int64_t terms) {
  if (terms < 1) throw Error(ErrorCode::InvalidArgument, "terms must be >= 1");
  const double l2 = lambda * lambda;
  const double f = 4.0 * kPi * kPi * delta * delta;
  double sum = 0.0;
  for (std::int64_t k = terms - 1; k >= 0; --k) {
    const double h = k + 0.5;
    const double term = 2.0 * lambda / (l2 + f * h * h) / (2.0 * k + 1.0);
    sum += (k % 2 == 0) ? term : -term;
  }
  return 4.0 / kPi * sum;
}

}  // namespace xapprox
