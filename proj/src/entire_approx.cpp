#include "xapprox/entire_approx.hpp"

#include <cmath>

#include "xapprox/detail/overloaded.hpp"
#include "xapprox/error.hpp"
#include "xapprox/exp_kernel.hpp"
#include "xapprox/special.hpp"

namespace xapprox {

using detail::Overloaded;

void EntireApproximant::validate() const {
  xapprox::validate(spec);
  xapprox::validate(DilationParam{delta});
  if (form == TargetForm::LogForm && !std::holds_alternative<HaarLog>(spec))
    throw Error(ErrorCode::InvalidArgument, "LogForm requires the Haar measure");
  if (form == TargetForm::PowerForm && !std::holds_alternative<PowerSigma>(spec))
    throw Error(ErrorCode::InvalidArgument, "PowerForm requires a power measure");
}

EntireApproximant natural_approximant(const MeasureSpec& spec, double delta) {
  const TargetForm form = std::visit(Overloaded{
                                         [](const PointMasses&) { return TargetForm::RawKmu; },
                                         [](const HaarLog&) { return TargetForm::LogForm; },
                                         [](const PowerSigma&) { return TargetForm::PowerForm; },
                                     },
                                     spec);
  return {spec, delta, form};
}

SeriesControl default_series_control(const MeasureSpec& spec) {
  SeriesControl ctl;
  ctl.tol = 1e-11;
  ctl.max_pairs = 2'000'000;
  ctl.acceleration = std::holds_alternative<PointMasses>(spec) ? Acceleration::None
                                                               : Acceleration::EulerAveraging;
  return ctl;
}

namespace {

double gamma_of(const EntireApproximant& a) { return power_gamma(std::get<PowerSigma>(a.spec)); }

// Raw error / approximant -> presentation.
double error_in_form(const EntireApproximant& a, double raw) {
  switch (a.form) {
    case TargetForm::RawKmu: return raw;
    case TargetForm::LogForm: return -raw;
    case TargetForm::PowerForm: return raw / gamma_of(a);
  }
  return raw;
}

std::complex<double> approximant_in_form(const EntireApproximant& a, std::complex<double> raw) {
  switch (a.form) {
    case TargetForm::RawKmu: return raw;
    case TargetForm::LogForm: return -raw;
    case TargetForm::PowerForm: return raw / gamma_of(a) + 1.0;
  }
  return raw;
}

}  // namespace

double target(const EntireApproximant& a, double x) {
  const double ax = std::fabs(x);
  switch (a.form) {
    case TargetForm::RawKmu: return f_mu(a.spec, x);
    case TargetForm::LogForm: return std::log(ax);
    case TargetForm::PowerForm: return std::pow(ax, std::get<PowerSigma>(a.spec).sigma - 1.0);
  }
  return 0.0;
}

std::complex<double> eval_K_mu(const EntireApproximant& a, std::complex<double> z,
                               const SeriesControl& ctl) {
  const double delta = a.delta;
  const double limit = f_mu_limit(a.spec).value_or(0.0);
  const MeasureSpec& spec = a.spec;
  const std::complex<double> raw =
      cardinal_series([&spec, delta](double m) { return f_mu(spec, m / delta); }, limit, delta * z, ctl);
  return approximant_in_form(a, raw);
}

double eval_K_mu(const EntireApproximant& a, double x, const SeriesControl& ctl) {
  return eval_K_mu(a, std::complex<double>(x, 0.0), ctl).real();
}

double eval_K_mu(const EntireApproximant& a, double x) {
  return eval_K_mu(a, x, default_series_control(a.spec));
}

double error_mu_series(const EntireApproximant& a, double x, const SeriesControl& ctl) {
  return target(a, x) - eval_K_mu(a, x, ctl);
}

namespace {

// Below this lambda/delta the direct difference exp - K keeps too few
// relative digits for the lambda^{-sigma} weights with sigma near 2.
constexpr double kSmallRate = 1e-2;

// exp(-lambda ax) - K(lambda/delta, delta ax) for ax >= 0.
double exp_error(double lambda, double delta, double ax, const QuadratureConfig& cfg) {
  const double rate = lambda / delta;
  if (rate >= kSmallRate) return std::exp(-lambda * ax) - eval_K(ExpKernel{lambda, delta}, ax);
  QuadratureConfig local = cfg;
  local.abs_tol = 1e-3 * cfg.rel_tol * rate;
  return error_exp_integral_oracle(rate, delta * ax, local);
}

// exp(-lambda ax) - exp(-lambda) without cancellation.
double exp_difference(double lambda, double ax) {
  return ax < 1.0 ? -std::exp(-lambda * ax) * std::expm1(-lambda * (1.0 - ax))
                  : std::exp(-lambda) * std::expm1(-lambda * (ax - 1.0));
}

}  // namespace

double error_mu_pointwise(const EntireApproximant& a, double x, const QuadratureConfig& cfg) {
  a.validate();
  if (x == 0.0 && !std::isfinite(f_mu(a.spec, 0.0)))
    throw Error(ErrorCode::InvalidArgument, "error is unbounded at x = 0 for this measure");
  const double ax = std::fabs(x);
  const double delta = a.delta;
  const double raw = integrate_measure(
      a.spec,
      [&](double lambda) { return exp_error(lambda, delta, ax, cfg); },
      cfg, delta);
  return error_in_form(a, raw);
}

double approximant_integral_oracle(const EntireApproximant& a, double x, const QuadratureConfig& cfg) {
  a.validate();
  const double ax = std::fabs(x);
  const double delta = a.delta;
  const double raw = integrate_measure(
      a.spec,
      [&](double lambda) { return exp_difference(lambda, ax) - exp_error(lambda, delta, ax, cfg); }, cfg,
      delta);
  return approximant_in_form(a, raw).real();
}

double l1_error_mu(const MeasureSpec& spec, double delta) {
  validate(spec);
  validate(DilationParam{delta});
  return std::visit(Overloaded{
                        [delta](const PointMasses& p) {
                          double s = 0.0;
                          for (const PointMass& m : p.masses) s += m.weight * l1_error_exp(m.lambda, delta);
                          return s;
                        },
                        [delta](const HaarLog&) { return 4.0 * catalan() / (kPi * delta); },
                        [delta](const PowerSigma& p) {
                          const double s = p.sigma;
                          const double unit = 4.0 * dirichlet_beta(1.0 + s) /
                                              (std::sin(kPi * s / 2.0) * std::pow(kPi, s));
                          return unit / std::fabs(power_gamma(p)) * std::pow(delta, -s);
                        },
                    },
                    spec);
}

double l1_error_mu_quadrature(const MeasureSpec& spec, double delta, const QuadratureConfig& cfg) {
  validate(spec);
  validate(DilationParam{delta});
  const double raw = integrate_measure(
      spec, [delta](double l) { return 2.0 / l * one_minus_sech(l / (2.0 * delta)); }, cfg, delta);
  if (const auto* p = std::get_if<PowerSigma>(&spec)) return raw / std::fabs(power_gamma(*p));
  return raw;
}

double l1_error_mu_x_quadrature(const MeasureSpec& spec, double delta, double T,
                                const QuadratureConfig& cfg) {
  const EntireApproximant a = natural_approximant(spec, delta);
  a.validate();
  const double uT = T * delta;
  if (!(uT > 0.0) || std::remainder(uT - 0.5, 1.0) != 0.0)
    throw Error(ErrorCode::InvalidArgument, "T * delta must be a positive half-integer");
  const SeriesControl ctl = default_series_control(spec);
  auto err = [&](double x) { return error_mu_series(a, x, ctl); };

  // [0, first node] carries the singularity of the target at x = 0; x = h t^r
  // turns |x|^{sigma-1} into a bounded integrand and flattens log|x|.
  double r = 2.0;
  if (const auto* p = std::get_if<PowerSigma>(&spec)) r = p->sigma < 1.0 ? 1.0 / p->sigma : 1.0;
  const double h = 0.5 / delta;
  double half = std::fabs(integrate_interval(
      [&](double t) {
        if (t == 0.0) return 0.0;
        return err(h * std::pow(t, r)) * h * r * std::pow(t, r - 1.0);
      },
      0.0, 1.0, cfg));
  for (double u = 0.5; u < uT; u += 1.0)
    half += std::fabs(integrate_gauss(err, u / delta, (u + 1.0) / delta, 32));

  double scale = 1.0;
  if (const auto* p = std::get_if<PowerSigma>(&spec)) scale = std::fabs(power_gamma(*p));
  const double tail = integrate_measure(
                          spec,
                          [&](double lambda) {
                            return error_exp_tail_l1(lambda / delta, uT, cfg) / delta;
                          },
                          cfg, delta) /
                      scale;
  return 2.0 * (half + tail);
}

double error_fourier_transform(const MeasureSpec& spec, double delta, double t,
                               const QuadratureConfig& cfg) {
  validate(spec);
  validate(DilationParam{delta});
  if (t == 0.0) throw Error(ErrorCode::InvalidArgument, "transform is evaluated at t != 0");
  const double w = 2.0 * kPi * t;
  const double first = integrate_measure(
      spec, [w](double l) { return 2.0 * l / (l * l + w * w); }, cfg, std::fabs(w));
  if (std::fabs(t) >= 0.5 * delta) return first;
  const double second = integrate_measure(
      spec, [delta, t](double l) { return K_hat_unit(l / delta, t / delta); }, cfg, delta);
  return first - second / delta;
}

}  // namespace xapprox
