#include "xapprox/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

#include "xapprox/error.hpp"
#include "xapprox/special.hpp"

namespace xapprox {

namespace {

// Kronrod 21-point abscissae (non-negative half); odd indices are the
// 10-point Gauss abscissae.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525040546, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
  int depth;
  bool operator<(const Segment& o) const { return error < o.error; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Segment gk21(const RealFunction& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::fabs(resk);
  std::array<double, 10> f1{}, f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double pair = f1[j] + f2[j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

  const double value = resk * half;
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::QuadratureNonConvergence,
                "non-finite integrand on [" + fmt(a) + ", " + fmt(b) + "]");
  }
  return {a, b, value, err, depth};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
  if (max_depth < 8) throw Error(ErrorCode::InvalidArgument, "max_depth must be >= 8");
  if (!(tail_cut > 0.0)) throw Error(ErrorCode::InvalidArgument, "tail_cut must be positive");
}

QuadratureResult gauss_kronrod21(const RealFunction& f, double a, double b) {
  const Segment s = gk21(f, a, b, 0);
  return {s.value, s.error, 1};
}

QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    const QuadratureConfig& cfg) {
  if (a == b) return {};
  std::vector<Segment> heap{gk21(f, a, b, 0)};
  std::vector<Segment> frozen;
  double total = heap.front().value;
  double err = heap.front().error;
  int intervals = 1;

  auto exact_sums = [&] {
    double v = 0.0, e = 0.0;
    for (const Segment& s : heap) v += s.value, e += s.error;
    for (const Segment& s : frozen) v += s.value, e += s.error;
    total = v;
    err = e;
  };

  for (;;) {
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
    if (err <= tol) {
      // Running sums drift; confirm against an exact re-summation.
      exact_sums();
      tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
      if (err <= tol) return {total, err, intervals};
    }
    if (heap.empty() || intervals >= cfg.max_intervals) {
      exact_sums();
      throw Error(ErrorCode::QuadratureNonConvergence,
                  "error estimate " + fmt(err) + " above tolerance " + fmt(tol) + " on [" +
                      fmt(a) + ", " + fmt(b) + "]");
    }
    std::pop_heap(heap.begin(), heap.end());
    const Segment s = heap.back();
    heap.pop_back();
    if (s.depth >= cfg.max_depth) {
      frozen.push_back(s);
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    for (const Segment& child : {gk21(f, s.a, mid, s.depth + 1), gk21(f, mid, s.b, s.depth + 1)}) {
      heap.push_back(child);
      std::push_heap(heap.begin(), heap.end());
      total += child.value;
      err += child.error;
    }
    total -= s.value;
    err -= s.error;
    ++intervals;
  }
}

double integrate_interval(const RealFunction& f, double a, double b,
                          const QuadratureConfig& cfg) {
  return integrate_adaptive(f, a, b, cfg).value;
}

double integrate_ray(const RealFunction& f, double a, const QuadratureConfig& cfg) {
  const double s = a + cfg.tail_cut;
  const double head = integrate_interval(f, a, s, cfg);
  const double tail = integrate_interval(
      [&](double u) {
        const double x = s / u;
        const double fx = f(x);
        return fx == 0.0 ? 0.0 : fx * (s / (u * u));
      },
      0.0, 1.0, cfg);
  return head + tail;
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Gauss rule order must be positive");

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return cache.emplace(n, std::move(rule)).first->second;
}

double integrate_gauss(const RealFunction& f, double a, double b, int order) {
  const GaussRule& rule = gauss_legendre(order);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(c + h * rule.nodes[i]);
  return sum * h;
}

namespace {

std::vector<double> circle_nodes(std::span<const double> nodes) {
  std::vector<double> out;
  out.reserve(nodes.size());
  for (double x : nodes) out.push_back(x - std::floor(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

double integrate_circle_signed(const RealFunction& f, std::span<const double> nodes, int order) {
  const std::vector<double> x = circle_nodes(nodes);
  if (x.empty()) return std::fabs(integrate_gauss(f, 0.0, 1.0, order));
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) sum += std::fabs(integrate_gauss(f, x[i], x[i + 1], order));
  sum += std::fabs(integrate_gauss(f, x.back(), x.front() + 1.0, order));
  return sum;
}

double integrate_circle_signed(const RealFunction& f, std::span<const double> nodes,
                               std::span<const double> singular, const QuadratureConfig& cfg,
                               double grading) {
  if (!(grading >= 1.0)) throw Error(ErrorCode::InvalidArgument, "grading must be >= 1");
  // Piece [lo, hi] with the singular point at `at` (lo or hi): x = at +/- h t^r.
  auto graded = [&](double lo, double hi, double at) {
    if (grading == 1.0) return integrate_interval(f, lo, hi, cfg);
    const double h = hi - lo;
    const double dir = at == lo ? 1.0 : -1.0;
    const double v = integrate_interval(
        [&](double t) {
          if (t == 0.0) return 0.0;
          return f(at + dir * h * std::pow(t, grading)) * h * grading * std::pow(t, grading - 1.0);
        },
        0.0, 1.0, cfg);
    return v;
  };
  const std::vector<double> x = circle_nodes(nodes);
  const std::vector<double> sing = circle_nodes(singular);
  std::vector<std::pair<double, double>> arcs;
  if (x.empty()) {
    arcs.emplace_back(0.0, 1.0);
  } else {
    for (std::size_t i = 0; i + 1 < x.size(); ++i) arcs.emplace_back(x[i], x[i + 1]);
    arcs.emplace_back(x.back(), x.front() + 1.0);
  }
  double sum = 0.0;
  for (auto [a, b] : arcs) {
    std::vector<double> cuts;
    for (double s : sing) {
      for (double shift : {0.0, 1.0}) {
        const double p = s + shift;
        if (p > a && p < b) cuts.push_back(p);
      }
    }
    if (cuts.empty()) {
      sum += std::fabs(integrate_interval(f, a, b, cfg));
      continue;
    }
    std::sort(cuts.begin(), cuts.end());
    double arc = 0.0;
    double lo = a;
    for (double c : cuts) {
      arc += graded(lo, c, c);
      lo = c;
    }
    arc += graded(lo, b, lo);
    sum += std::fabs(arc);
  }
  return sum;
}

double l1_norm_circle(const RealFunction& f, int grid, int order, std::span<const double> breaks) {
  if (grid < 2) throw Error(ErrorCode::InvalidArgument, "grid must have at least 2 points");
  std::vector<double> roots;
  double x0 = 0.0;
  double f0 = f(x0);
  for (int i = 1; i <= grid; ++i) {
    const double x1 = static_cast<double>(i) / grid;
    const double f1 = f(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
      double lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 80 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  const std::vector<double> cuts = circle_nodes(breaks);
  // Integrate between roots, subdividing long arcs so the fixed rule stays
  // accurate on each piece and splitting at the break points.
  const double step = 1.0 / 64.0;
  auto smooth_integral = [&](double a, double b) {
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
    double s = 0.0;
    for (int k = 0; k < pieces; ++k)
      s += integrate_gauss(f, a + (b - a) * k / pieces, a + (b - a) * (k + 1) / pieces, order);
    return s;
  };
  auto arc_integral = [&](double a, double b) {
    std::vector<double> pts{a};
    for (double c : cuts)
      for (double shift : {0.0, 1.0})
        if (c + shift > a && c + shift < b) pts.push_back(c + shift);
    std::sort(pts.begin() + 1, pts.end());
    pts.push_back(b);
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += smooth_integral(pts[i], pts[i + 1]);
    return std::fabs(s);
  };
  if (roots.empty()) return arc_integral(0.0, 1.0);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) sum += arc_integral(roots[i], roots[i + 1]);
  sum += arc_integral(roots.back(), roots.front() + 1.0);
  return sum;
}

}  // namespace xapprox
