#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xapprox/quadrature.hpp"

namespace xapprox {

/// One certification result. passed == (abs_diff <= tolerance). Count-type
/// checks (sign patterns, perturbation tests) report the number of
/// violations in computed and abs_diff against a reference of 0.
struct CertReport {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
  std::string detail;
};

struct CertOutcome {
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct CertCheck {
  std::string name;
  std::function<CertOutcome(const QuadratureConfig&)> run;
};

/// All checks in registration order.
const std::vector<CertCheck>& cert_registry();
std::vector<std::string> cert_check_names();

/// Runs the selected checks (all when empty) in registration order. Unknown
/// names raise UnknownCheckName before anything runs. A check that throws
/// is reported as failed with the message in `detail`.
std::vector<CertReport> run_cert_suite(const std::vector<std::string>& selection = {},
                                       const QuadratureConfig& cfg = {});

bool all_passed(const std::vector<CertReport>& reports);

/// Fixed-width text table, one row per report.
std::string format_report_table(const std::vector<CertReport>& reports);

}  // namespace xapprox
