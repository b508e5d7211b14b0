#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "xapprox/certify.hpp"
#include "xapprox/measure.hpp"
#include "xapprox/trig_poly.hpp"

namespace xapprox {

/// {"kind":"haar"} | {"kind":"power","sigma":s} | {"kind":"points","masses":[[l,w],...]}
nlohmann::json measure_to_json(const MeasureSpec& spec);
/// Parses and validates; malformed documents raise ParseError.
MeasureSpec measure_from_json(const nlohmann::json& j);
MeasureSpec parse_measure(const std::string& text);

/// {"degree":N,"coeffs":[[n,re,im],...]} with n ascending.
nlohmann::json trig_poly_to_json(const TrigPoly& p);
TrigPoly trig_poly_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CertReport& r);
nlohmann::json reports_to_json(const std::vector<CertReport>& rs);

/// %.17g.
std::string format_double(double v);

}  // namespace xapprox
