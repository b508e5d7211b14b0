#include "xapprox/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "xapprox/entire_approx.hpp"
#include "xapprox/error.hpp"
#include "xapprox/exp_kernel.hpp"
#include "xapprox/periodic.hpp"
#include "xapprox/series.hpp"
#include "xapprox/special.hpp"

namespace xapprox {

namespace {

constexpr std::uint64_t kSeed = 20100515;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double uniform(std::mt19937_64& rng, double a, double b) {
  return a + (b - a) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

CertOutcome count_outcome(int violations, std::string detail) {
  return {static_cast<double>(violations), 0.0, 0.0, std::move(detail)};
}

// Off-node sample count where error(x) * cos(pi * delta * x) <= 0.
template <class ErrorFn>
int sign_violations(ErrorFn err, double lo, double hi, double delta, int samples, std::uint64_t seed,
                    double& min_margin) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  min_margin = std::numeric_limits<double>::infinity();
  for (int accepted = 0; accepted < samples;) {
    const double x = uniform(rng, lo, hi);
    const double u = delta * x;
    if (std::fabs(std::remainder(u - 0.5, 1.0)) <= 1e-3) continue;
    ++accepted;
    const double prod = err(x) * cos_pi(u);
    min_margin = std::min(min_margin, prod);
    if (!(prod > 0.0)) ++bad;
  }
  return bad;
}

std::vector<CertCheck> build_registry() {
  std::vector<CertCheck> checks;
  auto add = [&checks](std::string name, std::function<CertOutcome(const QuadratureConfig&)> f) {
    checks.push_back({std::move(name), std::move(f)});
  };

  const double lambdas[] = {0.5, 1.0, 2.0, 5.0};

  // Optimal error on R by sign-split quadrature.
  for (double delta : {1.0, 2.0})
    for (double l : lambdas) {
      std::string name = "thm1_1_lambda" + num(l) + (delta == 1.0 ? "" : "_delta" + num(delta));
      add(name, [l, delta](const QuadratureConfig& cfg) {
        return CertOutcome{l1_error_exp_quadrature(ExpKernel{l, delta}, 40.5, 32, cfg),
                           l1_error_exp(l, delta), 1e-8, ""};
      });
    }

  for (double l : lambdas)
    add("interp_lambda" + num(l), [l](const QuadratureConfig&) {
      double worst = 0.0;
      for (int j = -10; j < 10; ++j) {
        const double m = j + 0.5;
        worst = std::max(worst, std::fabs(eval_K(ExpKernel{l, 1.0}, m) - std::exp(-l * std::fabs(m))));
      }
      return CertOutcome{worst, 0.0, 1e-12, "max over half-integers |m| <= 10"};
    });

  for (double l : lambdas)
    add("sign_lambda" + num(l), [l](const QuadratureConfig&) {
      double margin = 0.0;
      const ExpKernel k{l, 1.0};
      const int bad = sign_violations([&k](double x) { return error_exp(k, x); }, -20.0, 20.0, 1.0, 4000,
                                      kSeed, margin);
      return count_outcome(bad, "4000 samples, min error*cos = " + sci(margin));
    });

  for (double l : lambdas) {
    add("transform_integral_lambda" + num(l), [l](const QuadratureConfig& cfg) {
      const ExpKernel k{l, 1.0};
      const double integral = integrate_interval([&k](double t) { return K_hat(k, t); }, -0.5, 0.5, cfg);
      return CertOutcome{integral, eval_K(k, 0.0), 1e-10, "integral of K_hat over [-1/2, 1/2] vs K(0)"};
    });
    add("transform_support_lambda" + num(l), [l](const QuadratureConfig&) {
      const ExpKernel k{l, 1.0};
      int bad = 0;
      for (int i = 0; i <= 1000; ++i)
        if (K_hat(k, -0.5 + i / 1000.0) < 0.0) ++bad;
      if (K_hat(k, 0.5) != 0.0) ++bad;
      if (K_hat(k, -0.5) != 0.0) ++bad;
      return count_outcome(bad, "negative values on 1001-point grid plus nonzero endpoints");
    });
  }

  add("oracle_exp", [](const QuadratureConfig& cfg) {
    double worst = 0.0;
    for (double l : {0.5, 1.0, 2.0})
      for (double x : {0.1, 0.25, 0.75, 1.3, 4.6})
        worst = std::max(worst, std::fabs(error_exp(ExpKernel{l, 1.0}, x) - error_exp_integral_oracle(l, x, cfg)));
    return CertOutcome{worst, 0.0, 1e-9, "max over 15 (lambda, x) points"};
  });

  for (double l : {0.1, 1.0, 10.0})
    add("duality_lambda" + num(l), [l](const QuadratureConfig&) {
      return CertOutcome{dual_lower_bound_exp(l, 1.0, 100000), l1_error_exp(l, 1.0), 1e-8, "1e5 paired terms"};
    });

  add("catalan_series", [](const QuadratureConfig&) {
    // Plain partial sums to n = 1e6, then one averaging of consecutive sums.
    const std::int64_t n_max = 1000000;
    double s = 0.0;
    for (std::int64_t n = n_max; n >= 0; --n) {
      const double d = 2.0 * n + 1.0;
      s += (n % 2 == 0 ? 1.0 : -1.0) / (d * d);
    }
    const double d_next = 2.0 * (n_max + 1) + 1.0;
    const double next = s + ((n_max + 1) % 2 == 0 ? 1.0 : -1.0) / (d_next * d_next);
    return CertOutcome{4.0 / kPi * 0.5 * (s + next), 4.0 * catalan() / kPi, 1e-12, "partial sums to 1e6"};
  });
  add("catalan_digits", [](const QuadratureConfig&) {
    return CertOutcome{catalan(), 0.915965594, 5e-10, "first 9 digits"};
  });

  add("haar_1d", [](const QuadratureConfig& cfg) {
    return CertOutcome{integrate_measure(
                           HaarLog{}, [](double l) { return 2.0 / l * one_minus_sech(l / 2.0); }, cfg, 1.0),
                       4.0 * catalan() / kPi, 1e-10, ""};
  });
  add("haar_2d", [](const QuadratureConfig& cfg) {
    return CertOutcome{l1_error_mu_x_quadrature(HaarLog{}, 1.0, 50.5, cfg), 4.0 * catalan() / kPi, 1e-4,
                       "|log|x| - V(x)| on [-50.5, 50.5] plus exact tail"};
  });

  add("log_interp", [](const QuadratureConfig&) {
    const EntireApproximant a = natural_approximant(HaarLog{}, 1.0);
    const SeriesControl ctl = default_series_control(a.spec);
    double worst = 0.0;
    for (int j = -10; j < 10; ++j) {
      const double m = j + 0.5;
      worst = std::max(worst, std::fabs(eval_K_mu(a, m, ctl) - std::log(std::fabs(m))));
    }
    return CertOutcome{worst, 0.0, 1e-8, "max |V(m) - log|m|| over |m| <= 19/2"};
  });
  add("oracle_log", [](const QuadratureConfig& cfg) {
    const EntireApproximant a = natural_approximant(HaarLog{}, 1.0);
    const SeriesControl ctl = default_series_control(a.spec);
    double worst = 0.0;
    for (double x : {0.1, 0.3, 0.75, 2.2, 7.6})
      worst = std::max(worst, std::fabs(error_mu_series(a, x, ctl) - error_mu_pointwise(a, x, cfg)));
    return CertOutcome{worst, 0.0, 1e-7, "series vs lambda-quadrature error"};
  });

  add("power_half", [](const QuadratureConfig& cfg) {
    return CertOutcome{l1_error_mu_quadrature(PowerSigma{0.5}, 1.0, cfg), l1_error_mu(PowerSigma{0.5}, 1.0), 1e-8,
                       "sigma = 1/2, delta = 1"};
  });
  add("power_delta2", [](const QuadratureConfig& cfg) {
    return CertOutcome{l1_error_mu_quadrature(PowerSigma{0.5}, 2.0, cfg), l1_error_mu(PowerSigma{0.5}, 2.0), 1e-8,
                       "delta^{-sigma} scaling at delta = 2"};
  });

  for (double l : {0.5, 1.0, 2.0})
    for (int N : {0, 1, 3})
      add("thm6_1_lambda" + num(l) + "_N" + std::to_string(N), [l, N](const QuadratureConfig& cfg) {
        return CertOutcome{circle_l1_distance(ExpPeriodized{l}, build_k(l, N), cfg), periodic_l1_error(l, N),
                           1e-9, ""};
      });
  add("thm6_1_nodes", [](const QuadratureConfig&) {
    double worst = 0.0;
    for (double l : {0.5, 1.0, 2.0})
      for (int N : {0, 1, 3}) {
        const TrigPoly k = build_k(l, N);
        for (double x : interpolation_nodes(N)) worst = std::max(worst, std::fabs(eval_p(l, x) - k(x)));
      }
    return CertOutcome{worst, 0.0, 1e-11, "max node residual over 9 cases"};
  });
  add("thm6_1_sign", [](const QuadratureConfig&) {
    int bad = 0;
    double margin = std::numeric_limits<double>::infinity();
    std::uint64_t seed = kSeed;
    for (double l : {0.5, 1.0, 2.0})
      for (int N : {0, 1, 3}) {
        const TrigPoly k = build_k(l, N);
        double m = 0.0;
        bad += sign_violations([&](double x) { return eval_p(l, x) - k(x); }, 0.0, 1.0, 2.0 * N + 2.0, 2000,
                               ++seed, m);
        margin = std::min(margin, m);
      }
    return count_outcome(bad, "2000 samples per case, min product = " + sci(margin));
  });

  for (int N : {0, 1, 2, 4, 8})
    add("thm1_4_N" + std::to_string(N), [N](const QuadratureConfig& cfg) {
      const TrigPoly v = build_v_N(N, cfg);
      const std::vector<double> nodes = interpolation_nodes(N);
      const double singular[] = {0.0};
      const double l1 = integrate_circle_signed(
          [&v](double x) { return std::log(2.0 * std::fabs(sin_pi(x))) - v(x); }, nodes, singular, cfg, 2.0);
      return CertOutcome{l1, 4.0 * catalan() / ((2.0 * N + 2.0) * kPi), 1e-7,
                         "|log|1 - e(x)| - v_N(x)| over the circle"};
    });

  add("cross_oracle_exp", [](const QuadratureConfig& cfg) {
    double worst = 0.0;
    for (double l : {0.5, 1.0, 2.0})
      for (int N : {0, 1, 3})
        worst = std::max(worst, interpolation_oracle(ExpPeriodized{l}, N, cfg).max_coeff_diff(build_k(l, N)));
    return CertOutcome{worst, 0.0, 1e-10, "max coefficient difference, 9 cases"};
  });
  add("cross_oracle_haar", [](const QuadratureConfig& cfg) {
    double worst = 0.0;
    for (int N : {0, 1, 2, 4, 8})
      worst = std::max(worst, interpolation_oracle(MeasurePeriodized{HaarLog{}}, N, cfg)
                                  .max_coeff_diff(build_k_mu(HaarLog{}, N, cfg)));
    return CertOutcome{worst, 0.0, 1e-10, "max coefficient difference, N in {0,1,2,4,8}"};
  });

  for (int N : {0, 1, 3})
    add("local_opt_N" + std::to_string(N), [N](const QuadratureConfig&) {
      const double lambda = 1.0;
      const TrigPoly k = build_k(lambda, N);
      const double breaks[] = {0.0};
      auto l1 = [&](const TrigPoly& q) {
        return l1_norm_circle([&](double x) { return eval_p(lambda, x) - q(x); }, 4096, 24, breaks);
      };
      const double base = l1(k);
      int bad = 0;
      double min_gain = std::numeric_limits<double>::infinity();
      // Real-valued perturbations: the cosine part of c_n (n >= 0) and the
      // sine part (n >= 1), each moved by +-1e-3.
      for (int n = 0; n <= N; ++n)
        for (std::complex<double> dir : {std::complex<double>(1.0, 0.0), std::complex<double>(0.0, 1.0)}) {
          if (n == 0 && dir.imag() != 0.0) continue;
          for (double eps : {1e-3, -1e-3}) {
            TrigPoly q = k;
            if (n == 0)
              q.set_coeff(0, k.coeff(0) + eps);
            else
              q.set_hermitian(n, k.coeff(n) + eps * dir);
            const double gain = l1(q) - base;
            min_gain = std::min(min_gain, gain);
            if (!(gain > 0.0)) ++bad;
          }
        }
      return count_outcome(bad, "lambda = 1, min L1 increase = " + sci(min_gain));
    });

  add("thm6_2_power_half", [](const QuadratureConfig& cfg) {
    return CertOutcome{periodic_l1_error_mu_quadrature(PowerSigma{0.5}, 2, cfg),
                       periodic_l1_error_mu(PowerSigma{0.5}, 2), 1e-8, "sigma = 1/2, N = 2"};
  });

  return checks;
}

}  // namespace

const std::vector<CertCheck>& cert_registry() {
  static const std::vector<CertCheck> registry = build_registry();
  return registry;
}

std::vector<std::string> cert_check_names() {
  std::vector<std::string> names;
  for (const CertCheck& c : cert_registry()) names.push_back(c.name);
  return names;
}

std::vector<CertReport> run_cert_suite(const std::vector<std::string>& selection, const QuadratureConfig& cfg) {
  cfg.validate();
  const auto& registry = cert_registry();
  for (const std::string& name : selection) {
    const bool known = std::any_of(registry.begin(), registry.end(),
                                   [&name](const CertCheck& c) { return c.name == name; });
    if (!known) throw Error(ErrorCode::UnknownCheckName, "unknown check '" + name + "'");
  }
  std::vector<CertReport> reports;
  for (const CertCheck& check : registry) {
    if (!selection.empty() && std::find(selection.begin(), selection.end(), check.name) == selection.end())
      continue;
    CertReport r;
    r.name = check.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const CertOutcome o = check.run(cfg);
      r.computed = o.computed;
      r.reference = o.reference;
      r.tolerance = o.tolerance;
      r.abs_diff = std::fabs(o.computed - o.reference);
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.computed = r.abs_diff = std::numeric_limits<double>::quiet_NaN();
      r.detail = e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.abs_diff <= r.tolerance;
    reports.push_back(std::move(r));
  }
  return reports;
}

bool all_passed(const std::vector<CertReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CertReport& r) { return r.passed; });
}

std::string format_report_table(const std::vector<CertReport>& reports) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-28s %-6s %-24s %-24s %-10s %-9s %s\n", "check", "status", "computed",
                "reference", "abs_diff", "ms", "detail");
  out += line;
  for (const CertReport& r : reports) {
    std::snprintf(line, sizeof line, "%-28s %-6s %-24.17g %-24.17g %-10.3e %-9.1f %s\n", r.name.c_str(),
                  r.passed ? "PASS" : "FAIL", r.computed, r.reference, r.abs_diff, r.runtime_ms, r.detail.c_str());
    out += line;
  }
  return out;
}

}  // namespace xapprox
