#include <doctest.h>

#include <cmath>

#include "xapprox/exp_kernel.hpp"
#include "xapprox/quadrature.hpp"
#include "xapprox/special.hpp"

using namespace xapprox;

TEST_SUITE("exp_kernel") {

TEST_CASE("interpolation at half-integers") {
  CHECK(std::fabs(eval_K({1.0, 1.0}, 0.5) - std::exp(-0.5)) < 1e-15);
  CHECK(std::fabs(eval_K({1.0, 1.0}, -1.5) - std::exp(-1.5)) < 1e-15);
  for (double lam : {0.5, 1.0, 2.0, 5.0}) {
    for (int j = -10; j < 10; ++j) {
      const double m = j + 0.5;
      CHECK(std::fabs(eval_K({lam, 1.0}, m) - std::exp(-lam * std::fabs(m))) < 1e-12);
    }
  }
  SUBCASE("dilated nodes") {
    for (int j = 0; j < 6; ++j) {
      const double x = (j + 0.5) / 2.0;
      CHECK(std::fabs(eval_K({1.0, 2.0}, x) - std::exp(-x)) < 1e-14);
    }
  }
}

TEST_CASE("kernel values") {
  CHECK(eval_K({1.0, 1.0}, 0.0) == doctest::Approx(0.69417990675219207866).epsilon(1e-14));
  CHECK(eval_K({2.0, 1.0}, 0.0) == doctest::Approx(0.4488340286571699958).epsilon(1e-14));
  CHECK(eval_K({1.0, 1.0}, 0.25) == doctest::Approx(0.67110150600948986167).epsilon(1e-14));
  CHECK(eval_K({1.0, 1.0}, 0.75) == doctest::Approx(0.5130851152051133554).epsilon(1e-14));
  const auto z = eval_K({1.0, 1.0}, std::complex<double>(1.0, 0.5));
  CHECK(std::fabs(z.real() - 0.39425299928057580612) < 1e-14);
  CHECK(std::fabs(z.imag() + 0.23244083911770307883) < 1e-14);
  SUBCASE("evenness") {
    for (double x : {0.1, 0.9, 3.3, 17.2}) CHECK(eval_K({1.3, 1.0}, x) == eval_K({1.3, 1.0}, -x));
    const std::complex<double> w(0.4, -2.0);
    CHECK(eval_K({1.0, 1.0}, w) == eval_K({1.0, 1.0}, -w));
  }
  SUBCASE("dilation") {
    CHECK(eval_K({3.0, 2.0}, 0.8) == doctest::Approx(eval_K({1.5, 1.0}, 1.6)).epsilon(1e-15));
  }
  SUBCASE("value at zero in (0, 1]") {
    const double k = eval_K({2.0, 1.0}, 0.0);
    CHECK(k > 0.0);
    CHECK(k <= 1.0);
  }
}

TEST_CASE("Fourier transform") {
  CHECK(K_hat_unit(1.0, 0.0) == doctest::Approx(1.0 / std::sinh(0.5)).epsilon(1e-15));
  CHECK(K_hat({1.0, 1.0}, 0.5) == 0.0);
  CHECK(K_hat({1.0, 1.0}, 0.7) == 0.0);
  CHECK(K_hat({1.0, 2.0}, 1.0) == 0.0);
  CHECK(K_hat({1.0, 2.0}, 0.3) == doctest::Approx(0.5 * K_hat_unit(0.5, 0.15)).epsilon(1e-15));
  for (double lam : {0.5, 1.0, 2.0}) {
    for (int i = -100; i <= 100; ++i) CHECK(K_hat({lam, 1.0}, i * 0.01) >= 0.0);
    const double integral =
        integrate_interval([lam](double t) { return K_hat_unit(lam, t); }, -0.5, 0.5, {1e-13, 1e-13});
    CHECK(std::fabs(integral - eval_K({lam, 1.0}, 0.0)) < 1e-10);
  }
}

TEST_CASE("optimal L1 error") {
  CHECK(l1_error_exp(1.0, 1.0) == doctest::Approx(0.22636223205985218268).epsilon(1e-14));
  CHECK(l1_error_exp(1.0, 2.0) == doctest::Approx(0.060912741719570829899).epsilon(1e-14));
  CHECK(l1_error_exp(0.1, 1.0) == doctest::Approx(0.024973984782218849606).epsilon(1e-13));
  CHECK(l1_error_exp(100.0, 1.0) == 0.02);
  CHECK(l1_error_exp(1.0, 1.0) == doctest::Approx(2.0 - 2.0 / std::cosh(0.5)).epsilon(1e-15));
  SUBCASE("quadrature of the pointwise error") {
    for (double lam : {0.5, 1.0, 2.0, 5.0})
      for (double d : {1.0, 2.0})
        CHECK(std::fabs(l1_error_exp_quadrature({lam, d}) - l1_error_exp(lam, d)) < 1e-9);
  }
}

TEST_CASE("pointwise error") {
  CHECK(std::fabs(error_exp({1.0, 1.0}, 0.5)) < 1e-15);
  CHECK(error_exp({1.0, 1.0}, 0.0) == doctest::Approx(1.0 - 0.69417990675219207866).epsilon(1e-13));
  CHECK(error_exp({1.0, 1.0}, 0.75) < 0.0);
  SUBCASE("sign pattern") {
    for (double lam : {0.5, 1.0, 2.0, 5.0}) {
      int bad = 0;
      for (int i = -4000; i <= 4000; ++i) {
        const double x = i * 0.005 + 0.0013;
        const double frac = std::fabs(x - std::floor(x) - 0.5);
        if (std::fabs(frac) <= 1e-3 || std::fabs(x) > 20.0) continue;
        if (!(error_exp({lam, 1.0}, x) * cos_pi(x) > 0.0)) ++bad;
      }
      CHECK(bad == 0);
    }
  }
  SUBCASE("integral representation") {
    CHECK(error_exp_integral_oracle(1.0, 0.5) == 0.0);
    CHECK(error_exp_integral_oracle(1.0, 0.0) == doctest::Approx(1.0 - 0.69417990675219207866).epsilon(1e-10));
    CHECK(error_exp_integral_oracle(1e-9, 0.0) == doctest::Approx(1e-9 / kPi).epsilon(1e-6));
    CHECK(std::fabs(error_exp_integral_oracle(1.0, 0.25) - error_exp({1.0, 1.0}, 0.25)) < 1e-10);
    CHECK(std::fabs(error_exp_integral_oracle(2.0, 1.0) - error_exp({2.0, 1.0}, 1.0)) < 1e-10);
    for (double lam : {0.5, 1.0, 2.0})
      for (double x : {0.1, 0.25, 0.75, 1.3, 4.6})
        CHECK(std::fabs(error_exp({lam, 1.0}, x) - error_exp_integral_oracle(lam, x)) < 1e-9);
  }
  SUBCASE("error density is positive") {
    for (double lam : {0.1, 1.0, 10.0})
      for (double w : {1e-6, 0.5, 3.0, 40.0}) CHECK(kernel_error_density(lam, w) > 0.0);
  }
}

TEST_CASE("duality lower bound") {
  const double one = dual_lower_bound_exp(1.0, 1.0, 1);
  CHECK(one > 0.0);
  CHECK(one == doctest::Approx(4.0 / kPi * 2.0 / (1.0 + kPi * kPi)).epsilon(1e-14));
  for (double lam : {0.1, 1.0, 10.0})
    for (double d : {1.0, 2.0})
      CHECK(std::fabs(dual_lower_bound_exp(lam, d, 100000) - l1_error_exp(lam, d)) < 1e-8);
  CHECK(std::fabs(dual_lower_bound_exp(1.0, 1.0, 10000) - l1_error_exp(1.0, 1.0)) < 1e-8);
}

TEST_CASE("kernel validation") {
  CHECK_THROWS(ExpKernel{0.0, 1.0}.validate());
  CHECK_THROWS(ExpKernel{1.0, -1.0}.validate());
  CHECK_NOTHROW(ExpKernel{1.0, 1.0}.validate());
}

}  // TEST_SUITE
