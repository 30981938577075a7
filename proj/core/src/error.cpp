#include "gnslab/error.hpp"

namespace gnslab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kEmptyGenerators: return "empty_generators";
    case Errc::kNotCofinite: return "not_cofinite";
    case Errc::kRangeExceeded: return "range_exceeded";
    case Errc::kInvalidArgument: return "invalid_argument";
    case Errc::kNotAMonoid: return "not_a_monoid";
    case Errc::kZeroGap: return "zero_gap";
    case Errc::kDimensionMismatch: return "dimension_mismatch";
    case Errc::kInsufficientSum: return "insufficient_sum";
    case Errc::kNotSorted: return "not_sorted";
    case Errc::kDomainError: return "domain_error";
    case Errc::kInfeasibleBound: return "infeasible_bound";
    case Errc::kUnsupportedDimension: return "unsupported_dimension";
    case Errc::kParseError: return "parse_error";
  }
  return "unknown";
}

}  // namespace gnslab
