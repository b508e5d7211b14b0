#pragma once

// Alternating-series acceleration and the half-integer cardinal series
// shared by the exponential kernel and the measure-integrated approximants.

#include <complex>
#include <cstdint>
#include <functional>

namespace xapprox {

enum class Acceleration { None, EulerAveraging };

struct SeriesControl {
  double tol = 1e-11;                  // stagnation tolerance, relative once |sum| > 1
  std::int64_t max_pairs = 2'000'000;  // hard cap on summed terms
  Acceleration acceleration = Acceleration::EulerAveraging;
  int depth = 12;                      // averaging levels for EulerAveraging

  void validate() const;
};

using TermFunction = std::function<std::complex<double>(std::int64_t)>;

/// Sum of (-1)^k a(k) over k >= 0.
///
/// With EulerAveraging the estimate after n terms is the depth-fold
/// iterated mean of the last depth+1 partial sums (binomial weights), and n
/// doubles until two estimates agree to tol * max(1, |estimate|). With None, terms are added
/// until one falls below tol. Throws SeriesNonConvergence at max_pairs.
std::complex<double> sum_alternating(const TermFunction& a, const SeriesControl& ctl);

/// Dirichlet beta function sum_{n>=0} (-1)^n / (2n+1)^s, s > 0.
double dirichlet_beta(double s);

/// Catalan's constant G = beta(2).
double catalan();

/// Symmetric cardinal series over the half-integers m = k + 1/2:
///
///   S(z) = limit + sum_m (value(|m|) - limit) sinc(pi (z - m)).
///
/// Terms with |m| < |Re z| + window are summed in sinc form (stable at the
/// nodes); the remaining m, -m pairs combine into
///   (cos(pi z)/pi) (-1)^k (value(m) - limit) 2m / (m^2 - z^2)
/// and are summed by sum_alternating. `limit` is any constant; the series
/// reproduces constants, so choosing the limit of value(m) as m -> inf
/// makes the tail decay faster. The result is even in z by construction.
std::complex<double> cardinal_series(const std::function<double(double)>& value, double limit,
                                     std::complex<double> z, const SeriesControl& ctl,
                                     int window = 8);

}  // namespace xapprox
