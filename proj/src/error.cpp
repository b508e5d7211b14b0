#include "xapprox/error.hpp"

namespace xapprox {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSigma: return "InvalidSigma";
    case ErrorCode::InvalidPointMass: return "InvalidPointMass";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFiniteOffset: return "NonFiniteOffset";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::SeriesNonConvergence: return "SeriesNonConvergence";
    case ErrorCode::DivergentAtZero: return "DivergentAtZero";
    case ErrorCode::UnknownCheckName: return "UnknownCheckName";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace xapprox
