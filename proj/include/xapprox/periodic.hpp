#pragma once

// Periodic analogues on R/Z. Degree-N approximants interpolate their
// targets at x_k = (k + 1/2)/(2N + 2) and are the dilation delta = 2N + 2 of
// the entire construction.

#include <cstdint>
#include <variant>
#include <vector>

#include "xapprox/measure.hpp"
#include "xapprox/quadrature.hpp"
#include "xapprox/trig_poly.hpp"

namespace xapprox {

struct ExpPeriodized {
  double lambda = 1.0;
};
struct MeasurePeriodized {
  MeasureSpec spec;
};
using PeriodicTarget = std::variant<ExpPeriodized, MeasurePeriodized>;

void validate(const PeriodicTarget& target);

/// p(lambda, x) = sum_m exp(-lambda |x + m|) - 2/lambda.
double eval_p(double lambda, double x);

/// Fourier coefficient of p(lambda, .): 2 lambda/(lambda^2 + 4 pi^2 n^2), and 0 at n = 0.
double p_hat(double lambda, std::int64_t n);

/// Fourier coefficient of q_mu: closed forms for every measure kind.
double q_hat_mu(const MeasureSpec& spec, std::int64_t n);

/// q_mu(x) = int p(lambda, x) dmu(lambda). Haar: -log|2 sin pi x|; point
/// masses: weighted p; power: lambda-quadrature, with the zeta value at 0
/// when sigma > 1. Throws DivergentAtZero at x = 0 for Haar and sigma < 1.
double eval_q_mu(const MeasureSpec& spec, double x, const QuadratureConfig& cfg = {});

/// Symmetric partial sum sum_{|n| <= terms} q_hat(n) e(n x).
double q_mu_partial_sum(const MeasureSpec& spec, double x, std::int64_t terms);

double eval_target(const PeriodicTarget& target, double x, const QuadratureConfig& cfg = {});
double target_coefficient(const PeriodicTarget& target, std::int64_t n);

/// Extremal degree-N polynomial k(lambda, N; x) for p(lambda, .).
TrigPoly build_k(double lambda, int N);

/// Extremal polynomial k_mu(N; x) = int k(lambda, N; x) dmu(lambda), with
/// coefficients by quadrature (exact sums for point masses).
TrigPoly build_k_mu(const MeasureSpec& spec, int N, const QuadratureConfig& cfg = {});

/// v_N = -k_mu(N; .) for Haar measure, the approximant of log|1 - e(x)|.
TrigPoly build_v_N(int N, const QuadratureConfig& cfg = {});

TrigPoly build_extremal(const PeriodicTarget& target, int N, const QuadratureConfig& cfg = {});

/// (2/lambda)(1 - sech(lambda/(4N + 4))).
double periodic_l1_error(double lambda, int N);

/// Optimal L1(R/Z) error for q_mu. Haar: 4G/((2N + 2) pi); point masses:
/// weighted sum; power: 4 beta(1+sigma)/(sin(pi sigma/2) pi^sigma) (2N+2)^{-sigma}.
double periodic_l1_error_mu(const MeasureSpec& spec, int N);

/// int (2/lambda)(1 - sech(lambda/(4N + 4))) dmu by quadrature.
double periodic_l1_error_mu_quadrature(const MeasureSpec& spec, int N, const QuadratureConfig& cfg = {});

double periodic_l1_error(const PeriodicTarget& target, int N);

/// x_k = (k + 1/2)/(2N + 2), k = 0..2N+1.
std::vector<double> interpolation_nodes(int N);

/// Degree-N interpolant at the shifted nodes by cosine-transform inversion of
/// the even-symmetric half system.
TrigPoly interpolation_oracle(const PeriodicTarget& target, int N, const QuadratureConfig& cfg = {});

/// (4/pi) sum_{k < terms} (-1)^k/(2k+1) target_hat((2k+1)(N+1)).
double dual_lower_bound_periodic(const PeriodicTarget& target, int N, std::int64_t terms);

/// int_0^1 |target - poly| dx, split at the nodes of `poly` and at 0.
double circle_l1_distance(const PeriodicTarget& target, const TrigPoly& poly,
                          const QuadratureConfig& cfg = {});

}  // namespace xapprox
