#include "xapprox/periodic.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "xapprox/detail/overloaded.hpp"
#include "xapprox/error.hpp"
#include "xapprox/exp_kernel.hpp"
#include "xapprox/series.hpp"
#include "xapprox/special.hpp"

namespace xapprox {

using detail::Overloaded;

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw Error(ErrorCode::InvalidArgument, "lambda must be positive and finite");
}

void check_degree(int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
}

bool at_integer(double x) { return std::remainder(x, 1.0) == 0.0; }

double power_unit_error(double sigma) {
  return 4.0 * dirichlet_beta(1.0 + sigma) / (std::sin(kPi * sigma / 2.0) * std::pow(kPi, sigma));
}

}  // namespace

void validate(const PeriodicTarget& target) {
  std::visit(Overloaded{
                 [](const ExpPeriodized& e) { check_lambda(e.lambda); },
                 [](const MeasurePeriodized& m) { validate(m.spec); },
             },
             target);
}

double eval_p(double lambda, double x) {
  check_lambda(lambda);
  const double a = (x - std::floor(x)) - 0.5;
  if (lambda < 1.0) {
    const double s = std::sinh(lambda * a / 2.0);
    return (2.0 * lambda * s * s - 2.0 * sinh_minus_x(lambda / 2.0)) / (lambda * std::sinh(lambda / 2.0));
  }
  const double b = std::fabs(a);
  return (std::exp(lambda * (b - 0.5)) + std::exp(-lambda * (b + 0.5))) / -std::expm1(-lambda) -
         2.0 / lambda;
}

double p_hat(double lambda, std::int64_t n) {
  check_lambda(lambda);
  if (n == 0) return 0.0;
  const double w = 2.0 * kPi * static_cast<double>(n);
  return 2.0 * lambda / (lambda * lambda + w * w);
}

double q_hat_mu(const MeasureSpec& spec, std::int64_t n) {
  validate(spec);
  if (n == 0) return 0.0;
  const double an = std::fabs(static_cast<double>(n));
  return std::visit(Overloaded{
                        [n](const PointMasses& p) {
                          double s = 0.0;
                          for (const PointMass& m : p.masses) s += m.weight * p_hat(m.lambda, n);
                          return s;
                        },
                        [an](const HaarLog&) { return 0.5 / an; },
                        [an](const PowerSigma& p) {
                          return kPi * std::pow(2.0 * kPi * an, -p.sigma) / std::sin(kPi * p.sigma / 2.0);
                        },
                    },
                    spec);
}

double eval_q_mu(const MeasureSpec& spec, double x, const QuadratureConfig& cfg) {
  validate(spec);
  return std::visit(
      Overloaded{
          [x](const PointMasses& p) {
            double s = 0.0;
            for (const PointMass& m : p.masses) s += m.weight * eval_p(m.lambda, x);
            return s;
          },
          [x](const HaarLog&) {
            if (at_integer(x)) throw Error(ErrorCode::DivergentAtZero, "q_mu(0) is infinite for Haar measure");
            return -std::log(2.0 * std::fabs(sin_pi(x)));
          },
          [x, &spec, &cfg](const PowerSigma& p) {
            if (at_integer(x)) {
              if (p.sigma < 1.0)
                throw Error(ErrorCode::DivergentAtZero, "q_mu(0) is infinite for sigma < 1");
              return 2.0 * kPi * std::pow(2.0 * kPi, -p.sigma) * std::riemann_zeta(p.sigma) /
                     std::sin(kPi * p.sigma / 2.0);
            }
            const double d = std::fabs(std::remainder(x, 1.0));
            return integrate_measure(spec, [x](double l) { return eval_p(l, x); }, cfg,
                                     std::max(1.0, 1.0 / d));
          },
      },
      spec);
}

double q_mu_partial_sum(const MeasureSpec& spec, double x, std::int64_t terms) {
  validate(spec);
  if (terms < 0) throw Error(ErrorCode::InvalidArgument, "terms must be nonnegative");
  const double r = x - std::floor(x);
  double s = 0.0;
  for (std::int64_t n = terms; n >= 1; --n) s += q_hat_mu(spec, n) * cos_pi(2.0 * std::fmod(n * r, 1.0));
  return 2.0 * s;
}

double eval_target(const PeriodicTarget& target, double x, const QuadratureConfig& cfg) {
  return std::visit(Overloaded{
                        [x](const ExpPeriodized& e) { return eval_p(e.lambda, x); },
                        [x, &cfg](const MeasurePeriodized& m) { return eval_q_mu(m.spec, x, cfg); },
                    },
                    target);
}

double target_coefficient(const PeriodicTarget& target, std::int64_t n) {
  return std::visit(Overloaded{
                        [n](const ExpPeriodized& e) { return p_hat(e.lambda, n); },
                        [n](const MeasurePeriodized& m) { return q_hat_mu(m.spec, n); },
                    },
                    target);
}

namespace {

// Coefficient n >= 0 of k(lambda, N; .).
double k_coeff(double lambda, int N, int n) {
  const double delta = 2.0 * N + 2.0;
  if (n == 0) return -inv_minus_csch(lambda / (2.0 * delta)) / delta;
  return K_hat_unit(lambda / delta, n / delta) / delta;
}

}  // namespace

TrigPoly build_k(double lambda, int N) {
  check_lambda(lambda);
  check_degree(N);
  TrigPoly k(N);
  for (int n = 0; n <= N; ++n) k.set_hermitian(n, k_coeff(lambda, N, n));
  return k;
}

TrigPoly build_k_mu(const MeasureSpec& spec, int N, const QuadratureConfig& cfg) {
  validate(spec);
  check_degree(N);
  const double delta = 2.0 * N + 2.0;
  TrigPoly k(N);
  for (int n = 0; n <= N; ++n)
    k.set_hermitian(n, integrate_measure(spec, [N, n](double l) { return k_coeff(l, N, n); }, cfg, delta));
  return k;
}

TrigPoly build_v_N(int N, const QuadratureConfig& cfg) { return -build_k_mu(HaarLog{}, N, cfg); }

TrigPoly build_extremal(const PeriodicTarget& target, int N, const QuadratureConfig& cfg) {
  return std::visit(Overloaded{
                        [N](const ExpPeriodized& e) { return build_k(e.lambda, N); },
                        [N, &cfg](const MeasurePeriodized& m) { return build_k_mu(m.spec, N, cfg); },
                    },
                    target);
}

double periodic_l1_error(double lambda, int N) {
  check_lambda(lambda);
  check_degree(N);
  return 2.0 / lambda * one_minus_sech(lambda / (4.0 * N + 4.0));
}

double periodic_l1_error_mu(const MeasureSpec& spec, int N) {
  validate(spec);
  check_degree(N);
  const double delta = 2.0 * N + 2.0;
  return std::visit(Overloaded{
                        [N](const PointMasses& p) {
                          double s = 0.0;
                          for (const PointMass& m : p.masses) s += m.weight * periodic_l1_error(m.lambda, N);
                          return s;
                        },
                        [delta](const HaarLog&) { return 4.0 * catalan() / (delta * kPi); },
                        [delta](const PowerSigma& p) {
                          return power_unit_error(p.sigma) * std::pow(delta, -p.sigma);
                        },
                    },
                    spec);
}

double periodic_l1_error_mu_quadrature(const MeasureSpec& spec, int N, const QuadratureConfig& cfg) {
  validate(spec);
  check_degree(N);
  const double delta = 2.0 * N + 2.0;
  return integrate_measure(
      spec, [N](double l) { return 2.0 / l * one_minus_sech(l / (4.0 * N + 4.0)); }, cfg, delta);
}

double periodic_l1_error(const PeriodicTarget& target, int N) {
  return std::visit(Overloaded{
                        [N](const ExpPeriodized& e) { return periodic_l1_error(e.lambda, N); },
                        [N](const MeasurePeriodized& m) { return periodic_l1_error_mu(m.spec, N); },
                    },
                    target);
}

std::vector<double> interpolation_nodes(int N) {
  check_degree(N);
  const int count = 2 * N + 2;
  std::vector<double> x(count);
  for (int k = 0; k < count; ++k) x[k] = (k + 0.5) / count;
  return x;
}

TrigPoly interpolation_oracle(const PeriodicTarget& target, int N, const QuadratureConfig& cfg) {
  validate(target);
  check_degree(N);
  // Even targets: the nodes pair up as x and 1 - x, leaving M = N + 1
  // equations f(x_k) = a_0 + sum_n a_n cos(pi n (2k+1)/(2M)), a DCT-II.
  const int M = N + 1;
  Eigen::VectorXd f(M);
  for (int k = 0; k < M; ++k) f[k] = eval_target(target, (k + 0.5) / (2.0 * M), cfg);
  Eigen::MatrixXd inverse(M, M);
  for (int n = 0; n < M; ++n)
    for (int k = 0; k < M; ++k)
      inverse(n, k) = (n == 0 ? 1.0 : 2.0) / M * cos_pi(n * (2.0 * k + 1.0) / (2.0 * M));
  const Eigen::VectorXd a = inverse * f;
  TrigPoly poly(N);
  poly.set_coeff(0, a[0]);
  for (int n = 1; n <= N; ++n) poly.set_hermitian(n, 0.5 * a[n]);
  return poly;
}

double dual_lower_bound_periodic(const PeriodicTarget& target, int N, std::int64_t terms) {
  validate(target);
  check_degree(N);
  if (terms < 1) throw Error(ErrorCode::InvalidArgument, "terms must be >= 1");
  double sum = 0.0;
  for (std::int64_t k = terms - 1; k >= 0; --k) {
    const double term = target_coefficient(target, (2 * k + 1) * (N + 1)) / (2.0 * k + 1.0);
    sum += (k % 2 == 0) ? term : -term;
  }
  return 4.0 / kPi * sum;
}

double circle_l1_distance(const PeriodicTarget& target, const TrigPoly& poly, const QuadratureConfig& cfg) {
  validate(target);
  const std::vector<double> nodes = interpolation_nodes(poly.degree());
  const double singular[] = {0.0};
  double grading = 1.0;
  if (const auto* m = std::get_if<MeasurePeriodized>(&target)) {
    if (std::holds_alternative<HaarLog>(m->spec)) grading = 2.0;
    if (const auto* p = std::get_if<PowerSigma>(&m->spec)) grading = p->sigma < 1.0 ? 1.0 / p->sigma : 2.0;
  }
  return integrate_circle_signed(
      [&](double x) { return eval_target(target, x, cfg) - poly(x); }, nodes, singular, cfg, grading);
}

}  // namespace xapprox
