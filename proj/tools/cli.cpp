#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "xapprox/certify.hpp"
#include "xapprox/entire_approx.hpp"
#include "xapprox/error.hpp"
#include "xapprox/exp_kernel.hpp"
#include "xapprox/io.hpp"
#include "xapprox/periodic.hpp"

namespace xapprox::cli {

namespace {

using nlohmann::json;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kernel;
  std::string measure;
  std::string lambda;
  std::string delta;
  std::string sigma;
  std::string degree;
  std::vector<double> xs;
  std::string x_range;
  int samples = 0;
  std::string output;
  std::string format;
  bool periodic = false;
  bool negate_for_vn = false;
  bool verify = false;
  std::vector<std::string> only;
};

double parse_number(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
    throw InvalidInput("'" + s + "' is not a finite number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

struct Span {
  double start = 0.0;
  double stop = 0.0;
  std::optional<double> step;
};

Span parse_span(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.empty() || parts.size() > 3) throw InvalidInput("range '" + text + "' must be start[:stop[:step]]");
  Span s;
  s.start = parse_number(parts[0]);
  s.stop = parts.size() > 1 ? parse_number(parts[1]) : s.start;
  if (parts.size() == 3) s.step = parse_number(parts[2]);
  return s;
}

std::vector<double> expand(const Span& s, double step) {
  if (!(step > 0.0)) throw InvalidInput("range step must be positive");
  std::vector<double> v;
  if (s.stop < s.start) return v;
  const auto count = static_cast<long long>(std::floor((s.stop - s.start) / step + 1e-9)) + 1;
  if (count > 10'000'000) throw InvalidInput("range has too many points");
  for (long long i = 0; i < count; ++i) v.push_back(s.start + static_cast<double>(i) * step);
  return v;
}

std::vector<double> uniform_samples(double a, double b, int samples) {
  if (samples < 2) throw InvalidInput("--samples must be at least 2");
  if (!(b > a)) throw InvalidInput("x-range must have start < stop");
  std::vector<double> v(samples);
  for (int i = 0; i < samples; ++i) v[i] = a + (b - a) * i / (samples - 1);
  return v;
}

std::vector<double> x_grid(const Options& o, const std::string& default_range) {
  const Span s = parse_span(o.x_range.empty() ? default_range : o.x_range);
  if (s.step) {
    if (o.samples != 0) throw InvalidInput("give either a range step or --samples, not both");
    return expand(s, *s.step);
  }
  return uniform_samples(s.start, s.stop, o.samples == 0 ? 201 : o.samples);
}

std::vector<double> grid_flag(const std::string& text, const std::string& name, double fallback) {
  if (text.empty()) return {fallback};
  const std::vector<double> v = parse_range(text);
  if (v.empty()) throw InvalidInput("--" + name + " grid is empty");
  return v;
}

std::vector<int> degree_grid(const std::string& text) {
  std::vector<int> out;
  for (double d : parse_range(text)) {
    if (d < 0.0 || d != std::floor(d) || d > 100000) throw InvalidInput("--degree values must be integers >= 0");
    out.push_back(static_cast<int>(d));
  }
  if (out.empty()) throw InvalidInput("--degree grid is empty");
  return out;
}

double single(const std::string& text, const std::string& name, double fallback) {
  const std::vector<double> v = grid_flag(text, name, fallback);
  if (v.size() != 1) throw InvalidInput("--" + name + " takes a single value here");
  return v.front();
}

int single_degree(const std::string& text) {
  if (text.empty()) throw InvalidInput("--degree is required");
  const std::vector<int> v = degree_grid(text);
  if (v.size() != 1) throw InvalidInput("--degree takes a single value here");
  return v.front();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Measure from --measure (and --sigma for the power shorthand).
MeasureSpec measure_with_sigma(const Options& o, double sigma) {
  const std::string& m = o.measure;
  if (m == "haar") return HaarLog{};
  if (m == "power") return PowerSigma{sigma};
  if (m == "points") throw InvalidInput("point masses are given as JSON, e.g. {\"kind\":\"points\",\"masses\":[[1,1]]}");
  if (!m.empty() && m.front() == '{') return parse_measure(m);
  if (!m.empty() && m.front() == '@') return parse_measure(read_file(m.substr(1)));
  throw InvalidInput("unknown measure '" + m + "' (haar, power, JSON or @file)");
}

void check_source(const Options& o) {
  if (o.kernel.empty() == o.measure.empty()) throw InvalidInput("give exactly one of --kernel or --measure");
  if (!o.kernel.empty()) {
    if (o.kernel != "exp") throw InvalidInput("unknown kernel '" + o.kernel + "'");
    if (o.lambda.empty()) throw InvalidInput("--kernel exp needs --lambda");
    if (!o.sigma.empty()) throw InvalidInput("--sigma applies to --measure power only");
    return;
  }
  if (!o.lambda.empty()) throw InvalidInput("--lambda applies to --kernel exp only");
  if (o.measure == "power" && o.sigma.empty()) throw InvalidInput("--measure power needs --sigma");
  if (o.measure != "power" && !o.sigma.empty()) throw InvalidInput("--sigma applies to --measure power only");
}

MeasureSpec single_measure(const Options& o) {
  const double sigma = o.measure == "power" ? single(o.sigma, "sigma", 0.0) : 0.0;
  MeasureSpec spec = measure_with_sigma(o, sigma);
  validate(spec);
  return spec;
}

bool is_haar(const MeasureSpec& spec) { return std::holds_alternative<HaarLog>(spec); }

QuadratureConfig config_from_env() {
  QuadratureConfig cfg;
  if (const char* tol = std::getenv("XAPPROX_TOL")) {
    const double v = parse_number(tol);
    if (!(v > 0.0)) throw InvalidInput("XAPPROX_TOL must be positive");
    cfg.abs_tol = v;
  }
  cfg.validate();
  return cfg;
}

std::string resolve_format(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw InvalidInput("format '" + f + "' is not supported by this command");
}

// ---- evaluation rows ----------------------------------------------------

struct Row {
  double x, target, approximant, error;
};

using Evaluator = std::function<std::pair<double, double>(double)>;

Evaluator make_evaluator(const Options& o, const QuadratureConfig& cfg) {
  check_source(o);
  const bool periodic = o.periodic || !o.degree.empty();
  if (!o.kernel.empty()) {
    if (o.negate_for_vn) throw InvalidInput("--negate-for-vn applies to the periodic Haar measure only");
    const double lambda = single(o.lambda, "lambda", 1.0);
    if (periodic) {
      if (!o.delta.empty()) throw InvalidInput("--delta is fixed to 2N+2 in the periodic setting");
      const TrigPoly k = build_k(lambda, single_degree(o.degree));
      return [lambda, k](double x) { return std::pair{eval_p(lambda, x), k(x)}; };
    }
    const ExpKernel kernel{lambda, single(o.delta, "delta", 1.0)};
    kernel.validate();
    return [kernel](double x) { return std::pair{std::exp(-kernel.lambda * std::fabs(x)), eval_K(kernel, x)}; };
  }
  const MeasureSpec spec = single_measure(o);
  if (o.negate_for_vn && !(periodic && is_haar(spec)))
    throw InvalidInput("--negate-for-vn applies to the periodic Haar measure only");
  if (periodic) {
    if (!o.delta.empty()) throw InvalidInput("--delta is fixed to 2N+2 in the periodic setting");
    const TrigPoly k = build_k_mu(spec, single_degree(o.degree), cfg);
    // Haar is shown as log|1 - e(x)| against v_N = -k_mu.
    const double sign = is_haar(spec) ? -1.0 : 1.0;
    return [spec, k, sign, cfg](double x) {
      double q;
      try {
        q = eval_q_mu(spec, x, cfg);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DivergentAtZero) throw;
        q = std::numeric_limits<double>::infinity();
      }
      return std::pair{sign * q, sign * k(x)};
    };
  }
  const EntireApproximant a = natural_approximant(spec, single(o.delta, "delta", 1.0));
  a.validate();
  return [a](double x) { return std::pair{target(a, x), eval_K_mu(a, x)}; };
}

std::vector<Row> evaluate(const Evaluator& f, const std::vector<double>& xs) {
  std::vector<Row> rows;
  rows.reserve(xs.size());
  for (double x : xs) {
    const auto [t, v] = f(x);
    rows.push_back({x, t, v, t - v});
  }
  return rows;
}

std::string render_rows(const std::vector<Row>& rows, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const Row& r : rows)
      arr.push_back({{"x", r.x}, {"target", r.target}, {"approximant", r.approximant}, {"error", r.error}});
    return arr.dump(2) + "\n";
  }
  std::string out = "x,target,approximant,error\n";
  for (const Row& r : rows)
    out += format_double(r.x) + "," + format_double(r.target) + "," + format_double(r.approximant) + "," +
           format_double(r.error) + "\n";
  return out;
}

// ---- commands -------------------------------------------------------------

std::string cmd_eval(const Options& o, const QuadratureConfig& cfg) {
  const std::string format = resolve_format(o, "csv", {"csv", "json"});
  if (o.xs.empty() && o.x_range.empty()) throw InvalidInput("eval needs --x or --x-range");
  const Evaluator f = make_evaluator(o, cfg);
  std::vector<double> xs = o.xs;
  if (!o.x_range.empty()) {
    const std::vector<double> more = x_grid(o, o.x_range);
    xs.insert(xs.end(), more.begin(), more.end());
  }
  std::vector<Row> rows;
  try {
    rows = evaluate(f, xs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivergentAtZero) throw InvalidInput(e.what());
    throw;
  }
  return render_rows(rows, format);
}

std::string cmd_plot_data(const Options& o, const QuadratureConfig& cfg) {
  const std::string format = resolve_format(o, "csv", {"csv", "json"});
  const bool periodic = o.periodic || !o.degree.empty();
  const std::vector<double> xs = x_grid(o, periodic ? "0:1" : "-5:5");
  return render_rows(evaluate(make_evaluator(o, cfg), xs), format);
}

std::string cmd_coeffs(const Options& o, const QuadratureConfig& cfg) {
  const std::string format = resolve_format(o, "json", {"csv", "json"});
  check_source(o);
  const int N = single_degree(o.degree);
  TrigPoly p;
  if (!o.kernel.empty()) {
    if (o.negate_for_vn) throw InvalidInput("--negate-for-vn applies to the Haar measure only");
    p = build_k(single(o.lambda, "lambda", 1.0), N);
  } else {
    const MeasureSpec spec = single_measure(o);
    if (o.negate_for_vn && !is_haar(spec)) throw InvalidInput("--negate-for-vn applies to the Haar measure only");
    p = build_k_mu(spec, N, cfg);
    if (o.negate_for_vn) p = -p;
  }
  if (format == "json") return trig_poly_to_json(p).dump() + "\n";
  std::string out = "n,re,im\n";
  for (int n = -N; n <= N; ++n)
    out += std::to_string(n) + "," + format_double(p.coeff(n).real() + 0.0) + "," +
           format_double(p.coeff(n).imag() + 0.0) + "\n";
  return out;
}

struct TableRow {
  double param, closed;
  std::optional<double> quad;
};

std::string cmd_error_table(const Options& o, const QuadratureConfig& cfg) {
  const std::string format = resolve_format(o, "csv", {"csv", "json"});
  check_source(o);
  const bool periodic = o.periodic || !o.degree.empty();
  if (periodic && !o.delta.empty()) throw InvalidInput("--delta is fixed to 2N+2 in the periodic setting");

  const std::vector<double> lambdas = grid_flag(o.lambda, "lambda", 1.0);
  const std::vector<double> deltas = grid_flag(o.delta, "delta", 1.0);
  const std::vector<double> sigmas = grid_flag(o.sigma, "sigma", 0.0);
  const std::vector<int> degrees = periodic ? degree_grid(o.degree.empty() ? "0" : o.degree) : std::vector<int>{0};
  const int ranged = (lambdas.size() > 1) + (deltas.size() > 1) + (sigmas.size() > 1) + (degrees.size() > 1);
  if (ranged > 1) throw InvalidInput("at most one of --lambda, --delta, --sigma, --degree may be a range");

  std::vector<TableRow> rows;
  const bool exp = !o.kernel.empty();
  for (double l : lambdas)
    for (double d : deltas)
      for (double s : sigmas)
        for (int N : degrees) {
          double param;
          if (lambdas.size() > 1) param = l;
          else if (deltas.size() > 1) param = d;
          else if (sigmas.size() > 1) param = s;
          else if (periodic) param = N;
          else param = exp ? l : d;

          TableRow row{param, 0.0, std::nullopt};
          if (exp) {
            if (periodic) {
              row.closed = periodic_l1_error(l, N);
              if (o.verify) row.quad = circle_l1_distance(ExpPeriodized{l}, build_k(l, N), cfg);
            } else {
              ExpKernel{l, d}.validate();
              row.closed = l1_error_exp(l, d);
              if (o.verify) row.quad = l1_error_exp_quadrature(ExpKernel{l, d}, 40.5, 32, cfg);
            }
          } else {
            const MeasureSpec spec = measure_with_sigma(o, s);
            validate(spec);
            if (periodic) {
              row.closed = periodic_l1_error_mu(spec, N);
              if (o.verify) row.quad = circle_l1_distance(MeasurePeriodized{spec}, build_k_mu(spec, N, cfg), cfg);
            } else {
              row.closed = l1_error_mu(spec, d);
              if (o.verify) row.quad = l1_error_mu_quadrature(spec, d, cfg);
            }
          }
          rows.push_back(row);
        }

  if (format == "json") {
    json arr = json::array();
    for (const TableRow& r : rows) {
      json j{{"param", r.param}, {"closed_form", r.closed}, {"quadrature", nullptr}, {"abs_diff", nullptr}};
      if (r.quad) {
        j["quadrature"] = *r.quad;
        j["abs_diff"] = std::fabs(*r.quad - r.closed);
      }
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::string out = "param,closed_form,quadrature,abs_diff\n";
  for (const TableRow& r : rows) {
    out += format_double(r.param) + "," + format_double(r.closed) + ",";
    if (r.quad) out += format_double(*r.quad) + "," + format_double(std::fabs(*r.quad - r.closed));
    else out += ",";
    out += "\n";
  }
  return out;
}

std::string cmd_verify(const Options& o, const QuadratureConfig& cfg, bool& passed) {
  const std::string format = resolve_format(o, "text", {"text", "json", "csv"});
  std::vector<std::string> names;
  for (const std::string& item : o.only)
    for (const std::string& n : split(item, ','))
      if (!n.empty()) names.push_back(n);
  const std::vector<CertReport> reports = run_cert_suite(names, cfg);
  passed = all_passed(reports);
  if (format == "json") return reports_to_json(reports).dump(2) + "\n";
  if (format == "csv") {
    std::string out = "name,passed,computed,reference,abs_diff,tolerance,runtime_ms\n";
    for (const CertReport& r : reports)
      out += r.name + "," + (r.passed ? "true" : "false") + "," + format_double(r.computed) + "," +
             format_double(r.reference) + "," + format_double(r.abs_diff) + "," + format_double(r.tolerance) + "," +
             format_double(r.runtime_ms) + "\n";
    return out;
  }
  return format_report_table(reports);
}

// ---- flag registration ------------------------------------------------------

enum Flag : unsigned {
  kSource = 1u << 0,
  kDelta = 1u << 1,
  kDegree = 1u << 2,
  kX = 1u << 3,
  kXRange = 1u << 4,
  kPeriodic = 1u << 5,
  kVn = 1u << 6,
  kVerify = 1u << 7,
  kOnly = 1u << 8,
};

void register_flags(CLI::App* cmd, Options& o, unsigned flags) {
  if (flags & kSource) {
    cmd->add_option("--kernel", o.kernel, "Kernel family (exp)");
    cmd->add_option("--measure", o.measure, "haar, power, a JSON measure or @file");
    cmd->add_option("--lambda", o.lambda, "Decay rate, value or start:stop[:step]");
    cmd->add_option("--sigma", o.sigma, "Power exponent in (0,2), sigma != 1");
  }
  if (flags & kDelta) cmd->add_option("--delta", o.delta, "Type parameter delta (type pi*delta)");
  if (flags & kDegree) cmd->add_option("--degree", o.degree, "Trigonometric degree N");
  if (flags & kX) cmd->add_option("--x", o.xs, "Evaluation point (repeatable)")->allow_extra_args(false);
  if (flags & kXRange) {
    cmd->add_option("--x-range", o.x_range, "start:stop[:step], inclusive");
    cmd->add_option("--samples", o.samples, "Uniform sample count over --x-range");
  }
  if (flags & kPeriodic) cmd->add_flag("--periodic", o.periodic, "Use the periodic (circle) setting");
  if (flags & kVn) cmd->add_flag("--negate-for-vn", o.negate_for_vn, "Export v_N = -k_mu for the Haar measure");
  if (flags & kVerify) cmd->add_flag("--verify", o.verify, "Fill the quadrature column");
  if (flags & kOnly) cmd->add_option("--only", o.only, "Check names (repeatable or comma-separated)");
  cmd->add_option("--output,-o", o.output, "Write to this file instead of stdout");
  cmd->add_option("--format", o.format, "Output format");
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  const Span s = parse_span(text);
  return expand(s, s.step.value_or(1.0));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Best L1 bandlimited approximations and their certification"};
  app.name("xapprox");
  app.require_subcommand(1);
  Options o;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate target, approximant and error");
  register_flags(eval, o, kSource | kDelta | kDegree | kX | kXRange | kPeriodic | kVn);
  CLI::App* coeffs = app.add_subcommand("coeffs", "Export extremal trigonometric polynomial coefficients");
  register_flags(coeffs, o, kSource | kDegree | kPeriodic | kVn);
  CLI::App* table = app.add_subcommand("error-table", "Tabulate optimal L1 errors");
  register_flags(table, o, kSource | kDelta | kDegree | kPeriodic | kVerify);
  CLI::App* plot = app.add_subcommand("plot-data", "Sample target, approximant and error for plotting");
  register_flags(plot, o, kSource | kDelta | kDegree | kXRange | kPeriodic | kVn);
  CLI::App* verify = app.add_subcommand("verify", "Run the certification suite");
  register_flags(verify, o, kOnly);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    }
    err << "xapprox: error: " << e.what() << "\n";
    return kExitInvalid;
  }

  // A bare --lambda selects the exponential kernel.
  if (o.kernel.empty() && o.measure.empty() && !o.lambda.empty()) o.kernel = "exp";

  try {
    const QuadratureConfig cfg = config_from_env();
    std::string text;
    int code = kExitOk;
    if (eval->parsed()) text = cmd_eval(o, cfg);
    else if (coeffs->parsed()) text = cmd_coeffs(o, cfg);
    else if (table->parsed()) text = cmd_error_table(o, cfg);
    else if (plot->parsed()) text = cmd_plot_data(o, cfg);
    else {
      bool passed = false;
      text = cmd_verify(o, cfg, passed);
      code = passed ? kExitOk : kExitFailed;
    }
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw InvalidInput("cannot write '" + o.output + "'");
      file << text;
    }
    return code;
  } catch (const InvalidInput& e) {
    err << "xapprox: error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "xapprox: error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::QuadratureNonConvergence:
      case ErrorCode::SeriesNonConvergence: return kExitFailed;
      default: return kExitInvalid;
    }
  }
}

}  // namespace xapprox::cli
