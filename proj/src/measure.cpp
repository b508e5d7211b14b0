#include "xapprox/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "xapprox/detail/overloaded.hpp"
#include "xapprox/error.hpp"

namespace xapprox {

namespace {
using detail::Overloaded;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

PointMasses canonical(std::vector<PointMass> masses) {
  std::sort(masses.begin(), masses.end(),
            [](const PointMass& a, const PointMass& b) { return a.lambda < b.lambda; });
  std::vector<PointMass> merged;
  for (const PointMass& m : masses) {
    if (!merged.empty() && merged.back().lambda == m.lambda)
      merged.back().weight += m.weight;
    else
      merged.push_back(m);
  }
  return {std::move(merged)};
}

void validate(const MeasureSpec& spec) {
  std::visit(Overloaded{
                 [](const PointMasses& p) {
                   if (p.masses.empty())
                     throw Error(ErrorCode::InvalidPointMass, "point mass list is empty");
                   double prev = 0.0;
                   double admissible = 0.0;
                   for (const PointMass& m : p.masses) {
                     if (!(m.lambda > 0.0) || !std::isfinite(m.lambda))
                       throw Error(ErrorCode::InvalidPointMass, "lambda must be positive and finite");
                     if (!(m.weight >= 0.0) || !std::isfinite(m.weight))
                       throw Error(ErrorCode::InvalidPointMass, "weight must be nonnegative and finite");
                     if (!(m.lambda > prev))
                       throw Error(ErrorCode::InvalidPointMass, "lambdas must be strictly increasing");
                     prev = m.lambda;
                     admissible += m.weight * m.lambda / (m.lambda * m.lambda + 1.0);
                   }
                   if (!std::isfinite(admissible))
                     throw Error(ErrorCode::InvalidPointMass, "admissibility sum is not finite");
                 },
                 [](const HaarLog&) {},
                 [](const PowerSigma& p) {
                   if (!(p.sigma > 0.0 && p.sigma < 2.0) || p.sigma == 1.0)
                     throw Error(ErrorCode::InvalidSigma, "sigma must lie in (0,2) \\ {1}");
                 },
             },
             spec);
}

void validate(const DilationParam& d) {
  if (!(d.delta > 0.0) || !std::isfinite(d.delta))
    throw Error(ErrorCode::InvalidArgument, "delta must be positive and finite");
}

double power_gamma(const PowerSigma& p) { return std::tgamma(1.0 - p.sigma); }

double f_mu(const MeasureSpec& spec, double x) {
  const double ax = std::fabs(x);
  return std::visit(Overloaded{
                        [ax](const PointMasses& p) {
                          double s = 0.0;
                          for (const PointMass& m : p.masses)
                            s += m.weight * (std::exp(-m.lambda * ax) - std::exp(-m.lambda));
                          return s;
                        },
                        [ax](const HaarLog&) { return ax == 0.0 ? kInf : -std::log(ax); },
                        [ax](const PowerSigma& p) {
                          return power_gamma(p) * (std::pow(ax, p.sigma - 1.0) - 1.0);
                        },
                    },
                    spec);
}

double f_mu_dilated_offset(const MeasureSpec& spec, DilationParam delta) {
  validate(delta);
  const double v = f_mu(spec, 1.0 / delta.delta);
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteOffset, "f_mu(1/delta) is not finite");
  return v;
}

std::optional<double> f_mu_limit(const MeasureSpec& spec) {
  return std::visit(Overloaded{
                        [](const PointMasses& p) -> std::optional<double> {
                          double s = 0.0;
                          for (const PointMass& m : p.masses) s -= m.weight * std::exp(-m.lambda);
                          return s;
                        },
                        [](const HaarLog&) -> std::optional<double> { return std::nullopt; },
                        [](const PowerSigma& p) -> std::optional<double> {
                          if (p.sigma < 1.0) return -power_gamma(p);
                          return std::nullopt;
                        },
                    },
                    spec);
}

namespace {

// int_0^inf g(l) l^{-sigma} dl for sigma in (0, 2). g may be O(1) at 0 when
// sigma < 1 and must be O(l) otherwise; g = O(1/l) at infinity.
// Head [0, s] uses l = s t^p, tail [s, inf) uses l = s u^{-q}; the exponents
// make both transformed integrands bounded at t = 0 and u = 0.
double integrate_weighted_ray(const std::function<double(double)>& g, double sigma,
                              const QuadratureConfig& cfg) {
  const double s = cfg.tail_cut;
  const double p = sigma < 1.0 ? 1.0 / (1.0 - sigma) : 1.0 / (2.0 - sigma);
  const double q = sigma > 0.0 ? 1.0 / sigma : 1.0;
  const double scale = std::pow(s, 1.0 - sigma);
  const double head_exp = p * (1.0 - sigma) - 1.0;
  const double tail_exp = q * sigma - q - 1.0;
  const double head = integrate_interval(
      [&](double t) {
        const double l = s * std::pow(t, p);
        if (l == 0.0) return 0.0;
        const double v = g(l);
        return v == 0.0 ? 0.0 : v * scale * p * std::pow(t, head_exp);
      },
      0.0, 1.0, cfg);
  const double tail = integrate_interval(
      [&](double u) {
        const double l = s * std::pow(u, -q);
        if (!std::isfinite(l)) return 0.0;
        const double v = g(l);
        return v == 0.0 ? 0.0 : v * scale * q * std::pow(u, tail_exp);
      },
      0.0, 1.0, cfg);
  return head + tail;
}

}  // namespace

double integrate_measure(const MeasureSpec& spec, const std::function<double(double)>& g,
                         const QuadratureConfig& cfg, double scale) {
  QuadratureConfig local = cfg;
  local.tail_cut = scale;
  return std::visit(Overloaded{
                        [&](const PointMasses& p) {
                          double s = 0.0;
                          for (const PointMass& m : p.masses) s += m.weight * g(m.lambda);
                          return s;
                        },
                        [&](const HaarLog&) { return integrate_weighted_ray(g, 1.0, local); },
                        [&](const PowerSigma& p) { return integrate_weighted_ray(g, p.sigma, local); },
                    },
                    spec);
}

std::string describe(const MeasureSpec& spec) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const PointMasses& p) {
                   os << "points[";
                   for (std::size_t i = 0; i < p.masses.size(); ++i)
                     os << (i ? ", " : "") << "(" << p.masses[i].lambda << ", " << p.masses[i].weight << ")";
                   os << "]";
                 },
                 [&](const HaarLog&) { os << "haar"; },
                 [&](const PowerSigma& p) { os << "power(sigma=" << p.sigma << ")"; },
             },
             spec);
  return os.str();
}

}  // namespace xapprox
