#include <doctest.h>

#include <cmath>

#include "xapprox/entire_approx.hpp"
#include "xapprox/error.hpp"
#include "xapprox/exp_kernel.hpp"
#include "xapprox/series.hpp"
#include "xapprox/special.hpp"

using namespace xapprox;

namespace {

const EntireApproximant kLog = natural_approximant(HaarLog{});

double V(double x) { return eval_K_mu(kLog, x); }

}  // namespace

TEST_SUITE("entire_approx") {

TEST_CASE("presentations") {
  CHECK(natural_approximant(HaarLog{}).form == TargetForm::LogForm);
  CHECK(natural_approximant(PowerSigma{0.5}).form == TargetForm::PowerForm);
  CHECK(natural_approximant(PointMasses{{{1.0, 1.0}}}).form == TargetForm::RawKmu);
  CHECK_THROWS_AS((EntireApproximant{PowerSigma{0.5}, 1.0, TargetForm::LogForm}.validate()), Error);
  CHECK_THROWS_AS((EntireApproximant{HaarLog{}, 1.0, TargetForm::PowerForm}.validate()), Error);
  CHECK_THROWS_AS((EntireApproximant{HaarLog{}, 0.0, TargetForm::LogForm}.validate()), Error);
  CHECK_NOTHROW((EntireApproximant{HaarLog{}, 1.0, TargetForm::RawKmu}.validate()));
  CHECK(target(kLog, 0.25) == doctest::Approx(std::log(0.25)));
  CHECK(target(natural_approximant(PowerSigma{0.5}), 4.0) == doctest::Approx(0.5));
  CHECK(default_series_control(PointMasses{{{1.0, 1.0}}}).acceleration == Acceleration::None);
  CHECK(default_series_control(HaarLog{}).acceleration == Acceleration::EulerAveraging);
}

TEST_CASE("log approximant values") {
  CHECK(std::fabs(V(0.5) - std::log(0.5)) < 1e-14);
  CHECK(V(0.0) == doctest::Approx(-0.93875676533725948181).epsilon(1e-10));
  CHECK(V(0.25) == doctest::Approx(-0.87416414513912764987).epsilon(1e-10));
  for (int j = -10; j < 10; ++j) {
    const double m = j + 0.5;
    CHECK(std::fabs(V(m) - std::log(std::fabs(m))) < 1e-8);
  }
  SUBCASE("integral representation at zero") {
    CHECK(approximant_integral_oracle(kLog, 0.0) == doctest::Approx(-0.93875676533725948181).epsilon(1e-9));
  }
}

TEST_CASE("power and point-mass approximants") {
  const auto pw = natural_approximant(PowerSigma{0.5});
  CHECK(eval_K_mu(pw, 0.0) == doctest::Approx(1.5566516885444653678).epsilon(1e-9));
  CHECK(eval_K_mu(natural_approximant(PowerSigma{1.5}), 0.3) ==
        doctest::Approx(0.64075254912768939426).epsilon(1e-9));
  for (int j = 0; j < 6; ++j) {
    const double m = j + 0.5;
    CHECK(std::fabs(eval_K_mu(pw, m) - 1.0 / std::sqrt(m)) < 1e-9);
  }
  const auto pt = natural_approximant(PointMasses{{{1.0, 1.0}}});
  CHECK(std::fabs(eval_K_mu(pt, 1.5) - (std::exp(-1.5) - std::exp(-1.0))) < 1e-14);
  SUBCASE("point mass reduces to the exponential kernel") {
    const auto three = natural_approximant(PointMasses{{{2.0, 3.0}}});
    CHECK(error_mu_pointwise(three, 0.3) == doctest::Approx(3.0 * error_exp({2.0, 1.0}, 0.3)).epsilon(1e-12));
    CHECK(error_mu_series(three, 0.3, default_series_control(three.spec)) ==
          doctest::Approx(3.0 * error_exp({2.0, 1.0}, 0.3)).epsilon(1e-12));
  }
}

TEST_CASE("series and quadrature paths agree") {
  QuadratureConfig cfg;
  cfg.abs_tol = cfg.rel_tol = 1e-12;
  CHECK(std::fabs(error_mu_pointwise(kLog, 0.5, cfg)) < 1e-12);
  const double e25 = error_mu_pointwise(kLog, 0.25, cfg);
  CHECK(e25 == doctest::Approx(-0.51213021598076296897).epsilon(1e-9));
  CHECK(e25 < 0.0);
  CHECK(error_mu_pointwise(kLog, 2.2, cfg) == doctest::Approx(-0.027874857536782427526).epsilon(1e-8));
  const MeasureSpec specs[] = {HaarLog{},        PowerSigma{0.1}, PowerSigma{0.5},
                               PowerSigma{1.5},  PowerSigma{1.9}, PointMasses{{{0.7, 1.0}, {3.0, 0.4}}}};
  for (const auto& s : specs) {
    const auto a = natural_approximant(s);
    if (std::isfinite(f_mu(s, 0.0)))
      CHECK_MESSAGE(std::fabs(approximant_integral_oracle(a, 0.0, cfg) - eval_K_mu(a, 0.0)) < 1e-9, describe(s));
    const auto ctl = default_series_control(s);
    for (double x : {0.1, 0.3, 0.75, 2.2, 7.6}) {
      const double series = target(a, x) - eval_K_mu(a, x, ctl);
      CHECK_MESSAGE(std::fabs(series - error_mu_pointwise(a, x, cfg)) < 1e-7, describe(s) << " x=" << x);
    }
  }
}

TEST_CASE("raw error sign pattern") {
  const MeasureSpec specs[] = {HaarLog{}, PowerSigma{0.5}, PowerSigma{1.5}};
  for (const auto& s : specs) {
    const EntireApproximant raw{s, 1.0, TargetForm::RawKmu};
    const auto ctl = default_series_control(s);
    int bad = 0;
    for (int i = 1; i <= 400; ++i) {
      const double x = i * 0.0251;
      const double frac = std::fabs(x - std::floor(x) - 0.5);
      if (frac <= 1e-3) continue;
      if (error_mu_series(raw, x, ctl) * cos_pi(x) < 0.0) ++bad;
    }
    CHECK_MESSAGE(bad == 0, describe(s));
  }
}

TEST_CASE("dilation") {
  for (double d : {0.5, 2.0, 3.0}) {
    const EntireApproximant a{HaarLog{}, d, TargetForm::LogForm};
    for (double x : {0.0, 0.3, 1.7, 5.2})
      CHECK(std::fabs(eval_K_mu(a, x) - (-std::log(d) + V(d * x))) < 1e-9);
    const double node = 0.5 / d;
    CHECK(std::fabs(eval_K_mu(a, node) - std::log(node)) < 1e-9);
  }
}

TEST_CASE("exponential type") {
  const auto ctl = default_series_control(HaarLog{});
  double prev = 0.0;
  for (double y : {2.0, 4.0, 6.0, 8.0}) {
    const double r = std::abs(eval_K_mu(kLog, std::complex<double>(0.0, y), ctl)) * std::exp(-kPi * y);
    CHECK(r < 1.0);
    if (prev > 0.0) CHECK(r < 2.0 * prev);
    prev = r;
  }
}

TEST_CASE("optimal L1 errors") {
  CHECK(l1_error_mu(HaarLog{}, 1.0) == doctest::Approx(1.1662436161232751206).epsilon(1e-14));
  CHECK(l1_error_mu(HaarLog{}, 2.0) == doctest::Approx(1.1662436161232751206 / 2.0).epsilon(1e-14));
  CHECK(l1_error_mu(PowerSigma{0.5}, 1.0) == doctest::Approx(1.5566516885444653678).epsilon(1e-13));
  CHECK(l1_error_mu(PowerSigma{1.5}, 1.0) == doctest::Approx(0.27185574812765121426).epsilon(1e-13));
  CHECK(l1_error_mu(PointMasses{{{1.0, 2.0}, {2.0, 1.0}}}, 1.0) ==
        doctest::Approx(2.0 * l1_error_exp(1.0, 1.0) + l1_error_exp(2.0, 1.0)).epsilon(1e-15));
  SUBCASE("quadrature of the rate integral") {
    QuadratureConfig cfg;
    cfg.abs_tol = cfg.rel_tol = 1e-13;
    const MeasureSpec specs[] = {HaarLog{}, PowerSigma{0.25}, PowerSigma{0.5}, PowerSigma{1.5}};
    for (const auto& s : specs)
      for (double d : {1.0, 2.0, 5.0})
        CHECK_MESSAGE(std::fabs(l1_error_mu_quadrature(s, d, cfg) - l1_error_mu(s, d)) < 1e-10, describe(s));
    CHECK(l1_error_mu_quadrature(PowerSigma{0.5}, 1.0, cfg) * std::sqrt(kPi) ==
          doctest::Approx(2.7590932798792115621).epsilon(1e-11));
  }
  SUBCASE("power errors scale like delta^-sigma") {
    for (double s : {0.3, 0.5, 1.2, 1.7})
      CHECK(l1_error_mu(PowerSigma{s}, 3.0) == doctest::Approx(l1_error_mu(PowerSigma{s}, 1.0) * std::pow(3.0, -s)).epsilon(1e-14));
  }
  SUBCASE("pointwise L1 in x") {
    CHECK(std::fabs(l1_error_mu_x_quadrature(PowerSigma{0.5}, 1.0, 20.5) - l1_error_mu(PowerSigma{0.5}, 1.0)) < 1e-6);
    CHECK(std::fabs(l1_error_mu_x_quadrature(PointMasses{{{1.0, 1.0}}}, 2.0, 10.25) - l1_error_exp(1.0, 2.0)) < 1e-8);
    CHECK_THROWS_AS(l1_error_mu_x_quadrature(HaarLog{}, 1.0, 10.0), Error);
  }
}

TEST_CASE("Fourier transform of the error") {
  CHECK(error_fourier_transform(HaarLog{}, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(error_fourier_transform(PointMasses{{{1.0, 1.0}}}, 1.0, 0.75) ==
        doctest::Approx(2.0 / (1.0 + 4.0 * kPi * kPi * 0.5625)).epsilon(1e-12));
  CHECK(error_fourier_transform(HaarLog{}, 1.0, 0.25) == doctest::Approx(0.75354951971953897321).epsilon(1e-9));
  const double below = error_fourier_transform(HaarLog{}, 1.0, 0.5 - 1e-7);
  const double above = error_fourier_transform(HaarLog{}, 1.0, 0.5 + 1e-7);
  CHECK(std::isfinite(below));
  CHECK(std::fabs(below - above) < 1e-5);
  CHECK(std::fabs(error_fourier_transform(HaarLog{}, 1.0, -0.3) - error_fourier_transform(HaarLog{}, 1.0, 0.3)) < 1e-12);
  CHECK_THROWS_AS(error_fourier_transform(HaarLog{}, 1.0, 0.0), Error);
}

}  // TEST_SUITE
