#include "xapprox/special.hpp"

#include <cmath>

namespace xapprox {

double sin_pi(double x) {
  const double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  const double a = std::fabs(r);
  const double s = std::signbit(r) ? -1.0 : 1.0;
  if (a <= 0.25) return s * std::sin(kPi * a);
  if (a <= 0.75) return s * std::cos(kPi * (a - 0.5));
  return s * std::sin(kPi * (1.0 - a));
}

double cos_pi(double x) {
  const double a = std::fabs(std::remainder(x, 2.0));
  if (a <= 0.25) return std::cos(kPi * a);
  if (a <= 0.75) return std::sin(kPi * (0.5 - a));
  return -std::cos(kPi * (1.0 - a));
}

std::complex<double> sin_pi(std::complex<double> z) {
  if (z.imag() == 0.0) return {sin_pi(z.real()), 0.0};
  const double b = kPi * z.imag();
  return {sin_pi(z.real()) * std::cosh(b), cos_pi(z.real()) * std::sinh(b)};
}

std::complex<double> cos_pi(std::complex<double> z) {
  if (z.imag() == 0.0) return {cos_pi(z.real()), 0.0};
  const double b = kPi * z.imag();
  return {cos_pi(z.real()) * std::cosh(b), -sin_pi(z.real()) * std::sinh(b)};
}

std::complex<double> sinc_pi(std::complex<double> d) {
  if (d == std::complex<double>(0.0, 0.0)) return 1.0;
  return sin_pi(d) / (kPi * d);
}

double sech(double x) {
  const double e = std::exp(-std::fabs(x));
  return 2.0 * e / (1.0 + e * e);
}

double csch(double x) {
  const double a = std::fabs(x);
  const double v = 2.0 * std::exp(-a) / -std::expm1(-2.0 * a);
  return std::signbit(x) ? -v : v;
}

double coth(double x) {
  const double a = std::fabs(x);
  const double e2 = std::exp(-2.0 * a);
  const double v = (1.0 + e2) / -std::expm1(-2.0 * a);
  return std::signbit(x) ? -v : v;
}

double one_minus_sech(double x) {
  const double a = std::fabs(x);
  if (a < 1.0) {
    const double s = std::sinh(0.5 * a);
    return 2.0 * s * s / std::cosh(a);
  }
  return 1.0 - sech(a);
}

double sinh_minus_x(double x) {
  if (std::fabs(x) < 0.5) {
    const double x2 = x * x;
    double term = x * x2 / 6.0;
    double sum = 0.0;
    for (int k = 2; k < 20 && term != 0.0; ++k) {
      sum += term;
      term *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
    }
    return sum;
  }
  return std::sinh(x) - x;
}

double inv_minus_csch(double x) {
  if (x == 0.0) return 0.0;
  if (std::fabs(x) < 1.0) return sinh_minus_x(x) / (x * std::sinh(x));
  return 1.0 / x - csch(x);
}

}  // namespace xapprox
