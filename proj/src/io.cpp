#include "xapprox/io.hpp"

#include <cstdio>

#include "xapprox/detail/overloaded.hpp"
#include "xapprox/error.hpp"

namespace xapprox {

using nlohmann::json;

nlohmann::json measure_to_json(const MeasureSpec& spec) {
  return std::visit(detail::Overloaded{
                        [](const HaarLog&) { return json{{"kind", "haar"}}; },
                        [](const PowerSigma& p) { return json{{"kind", "power"}, {"sigma", p.sigma}}; },
                        [](const PointMasses& p) {
                          json masses = json::array();
                          for (const PointMass& m : p.masses) masses.push_back({m.lambda, m.weight});
                          return json{{"kind", "points"}, {"masses", masses}};
                        },
                    },
                    spec);
}

MeasureSpec measure_from_json(const nlohmann::json& j) {
  MeasureSpec spec;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "haar") {
      spec = HaarLog{};
    } else if (kind == "power") {
      spec = PowerSigma{j.at("sigma").get<double>()};
    } else if (kind == "points") {
      std::vector<PointMass> masses;
      for (const json& m : j.at("masses")) {
        if (!m.is_array() || m.size() != 2) throw Error(ErrorCode::ParseError, "mass must be [lambda, weight]");
        masses.push_back({m[0].get<double>(), m[1].get<double>()});
      }
      spec = PointMasses{std::move(masses)};
    } else {
      throw Error(ErrorCode::ParseError, "unknown measure kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  validate(spec);
  return spec;
}

MeasureSpec parse_measure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return measure_from_json(j);
}

nlohmann::json trig_poly_to_json(const TrigPoly& p) {
  json coeffs = json::array();
  for (int n = -p.degree(); n <= p.degree(); ++n) {
    const auto c = p.coeff(n);
    coeffs.push_back({n, c.real() + 0.0, c.imag() + 0.0});  // no negative zeros
  }
  return json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

TrigPoly trig_poly_from_json(const nlohmann::json& j) {
  try {
    const int degree = j.at("degree").get<int>();
    if (degree < 0) throw Error(ErrorCode::ParseError, "degree must be nonnegative");
    TrigPoly p(degree);
    for (const json& c : j.at("coeffs")) {
      if (!c.is_array() || c.size() != 3) throw Error(ErrorCode::ParseError, "coefficient must be [n, re, im]");
      const int n = c[0].get<int>();
      if (n < -degree || n > degree) throw Error(ErrorCode::ParseError, "coefficient index outside degree");
      p.set_coeff(n, {c[1].get<double>(), c[2].get<double>()});
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json report_to_json(const CertReport& r) {
  return json{{"name", r.name},           {"computed", r.computed},     {"reference", r.reference},
              {"abs_diff", r.abs_diff},   {"tolerance", r.tolerance},   {"passed", r.passed},
              {"runtime_ms", r.runtime_ms}, {"detail", r.detail}};
}

nlohmann::json reports_to_json(const std::vector<CertReport>& rs) {
  json out = json::array();
  for (const CertReport& r : rs) out.push_back(report_to_json(r));
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace xapprox
