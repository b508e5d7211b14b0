#pragma once

#include <complex>

#include <Eigen/Core>

namespace xapprox {

/// Trigonometric polynomial sum_{|n|<=N} c_n e(n x), e(t) = exp(2 pi i t).
/// Coefficients live in a dense vector indexed by n + N.
class TrigPoly {
 public:
  TrigPoly() : TrigPoly(0) {}
  explicit TrigPoly(int degree);
  TrigPoly(int degree, Eigen::VectorXcd coeffs);

  int degree() const { return degree_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

  /// c_n, zero outside |n| <= N.
  std::complex<double> coeff(int n) const;
  void set_coeff(int n, std::complex<double> c);
  /// Sets c_n and c_{-n} = conj(c_n) together.
  void set_hermitian(int n, std::complex<double> c);

  std::complex<double> eval_complex(double x) const;
  /// Real part of the sum; exact for Hermitian coefficient vectors.
  double operator()(double x) const;

  bool is_hermitian(double tol = 0.0) const;
  /// max_n |c_n - d_n| over the union of supports.
  double max_coeff_diff(const TrigPoly& other) const;

  TrigPoly operator-() const;
  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator*=(double s);

 private:
  int degree_;
  Eigen::VectorXcd coeffs_;
};

TrigPoly operator+(TrigPoly a, const TrigPoly& b);
TrigPoly operator*(double s, TrigPoly p);

}  // namespace xapprox
