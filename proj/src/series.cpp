#include "xapprox/series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "xapprox/error.hpp"
#include "xapprox/special.hpp"

namespace xapprox {

void SeriesControl::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "series tol must be positive");
  if (max_pairs < 16) throw Error(ErrorCode::InvalidArgument, "max_pairs must be >= 16");
  if (depth < 1 || depth > 40) throw Error(ErrorCode::InvalidArgument, "averaging depth out of range");
}

std::complex<double> sum_alternating(const TermFunction& a, const SeriesControl& ctl) {
  using cd = std::complex<double>;
  if (ctl.acceleration == Acceleration::None) {
    cd sum = 0.0;
    for (std::int64_t k = 0; k < ctl.max_pairs; ++k) {
      const cd t = (k % 2 == 0 ? 1.0 : -1.0) * a(k);
      sum += t;
      if (std::abs(t) < ctl.tol) return sum;
    }
    throw Error(ErrorCode::SeriesNonConvergence, "terms did not fall below tol");
  }

  const int d = ctl.depth;
  std::vector<double> weights(d + 1);
  weights[0] = std::ldexp(1.0, -d);
  for (int j = 1; j <= d; ++j) weights[j] = weights[j - 1] * (d - j + 1) / j;

  std::vector<cd> ring(d + 1);  // last d+1 partial sums
  cd partial = 0.0;
  auto estimate = [&](std::int64_t n) {
    cd e = 0.0;
    for (int j = 0; j <= d; ++j) e += weights[j] * ring[(n - d - 1 + j) % (d + 1)];
    return e;
  };

  std::int64_t checkpoint = std::max<std::int64_t>(32, 2 * (d + 1));
  bool have_prev = false;
  cd prev = 0.0;
  for (std::int64_t k = 0; k < ctl.max_pairs; ++k) {
    partial += (k % 2 == 0 ? 1.0 : -1.0) * a(k);
    ring[k % (d + 1)] = partial;
    if (k + 1 == checkpoint) {
      const cd cur = estimate(checkpoint);
      if (have_prev && std::abs(cur - prev) < ctl.tol * std::max(1.0, std::abs(cur))) return cur;
      prev = cur;
      have_prev = true;
      checkpoint *= 2;
    }
  }
  throw Error(ErrorCode::SeriesNonConvergence,
              "accelerated estimates did not stagnate within max_pairs");
}

double dirichlet_beta(double s) {
  if (!(s > 0.0)) throw Error(ErrorCode::InvalidArgument, "dirichlet_beta needs s > 0");
  // Cohen-Villegas-Zagier acceleration; (2k+1)^{-s} is a moment sequence,
  // so the error is below 2 (3 + sqrt 8)^{-n} relative.
  constexpr int n = 30;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d, sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(2.0 * k + 1.0, -s);
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

double catalan() {
  static const double g = dirichlet_beta(2.0);
  return g;
}

std::complex<double> cardinal_series(const std::function<double(double)>& value, double limit,
                                     std::complex<double> z, const SeriesControl& ctl,
                                     int window) {
  using cd = std::complex<double>;
  if (z.real() < 0.0) z = -z;
  const std::int64_t k0 = static_cast<std::int64_t>(std::ceil(z.real())) + window;

  cd head = 0.0;
  for (std::int64_t k = k0 - 1; k >= 0; --k) {
    const double m = k + 0.5;
    const double v = value(m) - limit;
    if (v == 0.0) continue;
    head += v * (sinc_pi(z - m) + sinc_pi(z + m));
  }

  const cd cz = cos_pi(z);
  if (cz == cd(0.0, 0.0)) return limit + head;
  const cd z2 = z * z;
  const cd tail = sum_alternating(
      [&](std::int64_t j) -> cd {
        const double m = static_cast<double>(k0 + j) + 0.5;
        const double v = value(m) - limit;
        return v == 0.0 ? cd(0.0) : v * (2.0 * m) / (m * m - z2);
      },
      ctl);
  // (-1)^k with k = k0 + j
  const double sign = (k0 % 2 == 0) ? 1.0 : -1.0;
  return limit + head + sign * cz / kPi * tail;
}

}  // namespace xapprox
