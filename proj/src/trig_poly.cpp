#include "xapprox/trig_poly.hpp"

#include <algorithm>
#include <cmath>

#include "xapprox/error.hpp"
#include "xapprox/special.hpp"

namespace xapprox {

TrigPoly::TrigPoly(int degree) : degree_(degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  coeffs_ = Eigen::VectorXcd::Zero(2 * degree + 1);
}

TrigPoly::TrigPoly(int degree, Eigen::VectorXcd coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  if (coeffs_.size() != 2 * degree + 1)
    throw Error(ErrorCode::InvalidArgument, "coefficient vector must have 2N+1 entries");
}

std::complex<double> TrigPoly::coeff(int n) const {
  if (n < -degree_ || n > degree_) return {};
  return coeffs_[n + degree_];
}

void TrigPoly::set_coeff(int n, std::complex<double> c) {
  if (n < -degree_ || n > degree_) throw Error(ErrorCode::InvalidArgument, "index outside degree");
  coeffs_[n + degree_] = c;
}

void TrigPoly::set_hermitian(int n, std::complex<double> c) {
  set_coeff(n, c);
  set_coeff(-n, std::conj(c));
}

std::complex<double> TrigPoly::eval_complex(double x) const {
  const double r = x - std::floor(x);
  std::complex<double> s = 0.0;
  for (int n = -degree_; n <= degree_; ++n) {
    const double t = 2.0 * n * r;
    s += coeffs_[n + degree_] * std::complex<double>(cos_pi(t), sin_pi(t));
  }
  return s;
}

double TrigPoly::operator()(double x) const { return eval_complex(x).real(); }

bool TrigPoly::is_hermitian(double tol) const {
  for (int n = 0; n <= degree_; ++n)
    if (std::abs(coeff(n) - std::conj(coeff(-n))) > tol) return false;
  return true;
}

double TrigPoly::max_coeff_diff(const TrigPoly& other) const {
  const int m = std::max(degree_, other.degree_);
  double d = 0.0;
  for (int n = -m; n <= m; ++n) d = std::max(d, std::abs(coeff(n) - other.coeff(n)));
  return d;
}

TrigPoly TrigPoly::operator-() const { return TrigPoly(degree_, -coeffs_); }

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  if (other.degree_ > degree_) {
    Eigen::VectorXcd wide = Eigen::VectorXcd::Zero(2 * other.degree_ + 1);
    wide.segment(other.degree_ - degree_, coeffs_.size()) = coeffs_;
    coeffs_ = std::move(wide);
    degree_ = other.degree_;
  }
  coeffs_.segment(degree_ - other.degree_, other.coeffs_.size()) += other.coeffs_;
  return *this;
}

TrigPoly& TrigPoly::operator*=(double s) {
  coeffs_ *= s;
  return *this;
}

TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
TrigPoly operator*(double s, TrigPoly p) { return p *= s; }

}  // namespace xapprox
