#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gnslab {

enum class Errc {
  kEmptyGenerators,
  kNotCofinite,
  kRangeExceeded,
  kInvalidArgument,
  kNotAMonoid,
  kZeroGap,
  kDimensionMismatch,
  kInsufficientSum,
  kNotSorted,
  kDomainError,
  kInfeasibleBound,
  kUnsupportedDimension,
  kParseError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it to an exit status without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gnslab
