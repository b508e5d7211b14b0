#pragma once

// Adaptive Gauss-Kronrod integration on intervals and rays, fixed-order
// Gauss-Legendre rules, and L1 integrators on the circle R/Z.

#include <functional>
#include <span>
#include <vector>

namespace xapprox {

using RealFunction = std::function<double(double)>;

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 48;       // maximum bisection depth of one subinterval
  double tail_cut = 1.0;    // integrate_ray splits [a, inf) at a + tail_cut
  int max_intervals = 20000;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

/// One G10/K21 panel on [a, b]: the Kronrod value and the QUADPACK-style
/// error estimate. Exact for polynomials of degree <= 31.
QuadratureResult gauss_kronrod21(const RealFunction& f, double a, double b);

/// Globally adaptive G10/K21 on [a, b]. Throws QuadratureNonConvergence when
/// the tolerance is not met within max_depth / max_intervals.
QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

double integrate_interval(const RealFunction& f, double a, double b,
                          const QuadratureConfig& cfg = {});

/// Integral of f over [a, inf). The piece [a, a + tail_cut] is integrated
/// directly; [s, inf) with s = a + tail_cut is mapped by x = s/u onto (0, 1],
/// so no truncation is involved. f must tend to zero fast enough that
/// f(s/u) s/u^2 is integrable at u = 0 and must return finite values for
/// arbitrarily large arguments.
double integrate_ray(const RealFunction& f, double a, const QuadratureConfig& cfg = {});

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, computed once per order and cached.
const GaussRule& gauss_legendre(int n);

double integrate_gauss(const RealFunction& f, double a, double b, int order);

/// Sum over the sign-constant arcs of R/Z between consecutive nodes of
/// |Gauss-Legendre integral|. Nodes are reduced mod 1 and sorted; the last
/// arc wraps through 0. Equals the L1 norm of f when f has constant sign on
/// each arc.
double integrate_circle_signed(const RealFunction& f, std::span<const double> nodes,
                               int order = 24);

/// As above, but arcs containing one of `singular` are split there and
/// integrated adaptively (for integrable endpoint singularities such as a
/// logarithm). With grading r > 1 each piece touching a singular point s is
/// mapped by x = s + h t^r, so |x - s|^a integrands become bounded for
/// a >= 1/r - 1.
double integrate_circle_signed(const RealFunction& f, std::span<const double> nodes,
                               std::span<const double> singular, const QuadratureConfig& cfg,
                               double grading = 1.0);

/// L1 norm of a continuous 1-periodic f with no known sign pattern: sign
/// changes are bracketed on a uniform grid of `grid` points, refined by
/// bisection, and |f| is integrated piecewise. Pieces are also split at
/// `breaks` (points where f is not smooth).
double l1_norm_circle(const RealFunction& f, int grid = 4096, int order = 24,
                      std::span<const double> breaks = {});

}  // namespace xapprox
