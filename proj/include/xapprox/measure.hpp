#pragma once

// Measures on (0, inf) and the even target functions they generate,
//
//   f_mu(x) = int_0^inf (exp(-lambda |x|) - exp(-lambda)) dmu(lambda).

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xapprox/quadrature.hpp"

namespace xapprox {

struct PointMass {
  double lambda;
  double weight;
};

/// Finite sum of weighted point masses; canonical form has strictly
/// increasing lambda.
struct PointMasses {
  std::vector<PointMass> masses;
};

/// Haar measure dlambda / lambda; f_mu(x) = -log|x|.
struct HaarLog {};

/// lambda^{-sigma} dlambda with 0 < sigma < 2, sigma != 1;
/// f_mu(x) = Gamma(1 - sigma) (|x|^{sigma - 1} - 1).
struct PowerSigma {
  double sigma;
};

using MeasureSpec = std::variant<PointMasses, HaarLog, PowerSigma>;

/// Exponential type is pi * delta.
struct DilationParam {
  double delta = 1.0;
};

/// Sorts by lambda and merges equal lambdas by adding their weights.
PointMasses canonical(std::vector<PointMass> masses);

/// Throws InvalidSigma or InvalidPointMass.
void validate(const MeasureSpec& spec);
void validate(const DilationParam& d);

/// Value in R u {+inf}; +inf at x = 0 for HaarLog and PowerSigma with sigma < 1.
double f_mu(const MeasureSpec& spec, double x);

/// f_mu(1/delta): the additive constant carrying the type-pi problem to type
/// pi*delta. Throws NonFiniteOffset when that value is not finite.
double f_mu_dilated_offset(const MeasureSpec& spec, DilationParam delta);

/// lim_{x -> inf} f_mu(x) when finite (point masses, sigma < 1).
std::optional<double> f_mu_limit(const MeasureSpec& spec);

/// Gamma(1 - sigma) for PowerSigma.
double power_gamma(const PowerSigma& p);

/// int_0^inf g(lambda) dmu(lambda). Point masses are summed exactly; the
/// densities are split at `scale` (the lambda range where g changes
/// character) and both halves are mapped to (0, 1] by power substitutions
/// that absorb the weight singularity at 0 and an O(1/lambda) tail. For
/// power sigma near 2 the weight reaches down to lambda ~ 1e-16, so g must
/// keep its relative accuracy there.
double integrate_measure(const MeasureSpec& spec, const std::function<double(double)>& g,
                         const QuadratureConfig& cfg, double scale = 1.0);

std::string describe(const MeasureSpec& spec);

}  // namespace xapprox
