#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "gnslab/numerical_semigroup.hpp"

namespace gnslab {

inline constexpr int kMaxEnumGenus = 35;
/// F(S) <= 2g(S) - 1 and m(S) <= g(S) + 1, so every minimal generator of a
/// semigroup of genus <= kMaxEnumGenus is at most 3 * kMaxEnumGenus.
inline constexpr int kFrameWidth = 3 * kMaxEnumGenus + 1;

/// A node of the genus tree. Children remove one minimal generator larger
/// than the Frobenius number; every numerical semigroup appears exactly once
/// below N.
///
/// The frame keeps, for each y < kFrameWidth, the number of ways to write
/// y = a + b with a <= b both in S. y is in S iff the count is positive and
/// y is a minimal generator iff the count is exactly 1 (only 0 + y).
class EnumFrame {
 public:
  /// N itself.
  static EnumFrame root();
  /// {0, m, m+1, ...}, genus m - 1. Requires 1 <= m <= kMaxEnumGenus + 1.
  static EnumFrame ordinary(int m);

  int genus() const noexcept { return genus_; }
  int frobenius() const noexcept { return frobenius_; }
  int multiplicity() const noexcept { return multiplicity_; }

  bool contains(int y) const noexcept {
    if (y > frobenius_) return true;
    if (y < 0) return false;
    return decompositions_[static_cast<std::size_t>(y)] > 0;
  }

  /// Minimal generators above the Frobenius number, increasing.
  std::vector<int> effective_generators() const;
  std::vector<int> minimal_generators() const;
  int embedding_dimension() const;
  int type() const;
  /// m + e - 2(t + 1).
  int margin() const;

  /// Removes the effective generator x.
  EnumFrame child(int x) const;

  NumericalSemigroup to_semigroup() const;

 private:
  EnumFrame() = default;

  std::array<std::uint8_t, kFrameWidth> decompositions_{};
  int frobenius_ = -1;
  int genus_ = 0;
  int multiplicity_ = 1;
};

struct EnumOptions {
  /// Worker count; <= 1 runs everything on the calling thread.
  int threads = 1;
  /// Genus at which the tree is cut into independent subtree tasks. Negative
  /// picks a default from the genus bound.
  int split_genus = -1;
  /// Progress lines to `progress_stream` (std::cerr when null).
  bool progress = false;
  std::ostream* progress_stream = nullptr;
};

/// counts[g] = number of numerical semigroups of genus g, 0 <= g <= g_max.
using GenusCounts = std::vector<std::uint64_t>;

/// Visits every numerical semigroup of genus <= g_max once. With several
/// threads the visitor runs concurrently and must be thread-safe. Throws
/// kRangeExceeded unless 0 <= g_max <= kMaxEnumGenus.
GenusCounts enumerate_by_genus(int g_max, const EnumOptions& options = {},
                               const std::function<void(const EnumFrame&)>& visitor = {});

struct MetViolation {
  std::vector<std::int64_t> generators;
  int genus = 0;
  int multiplicity = 0;
  int embedding_dimension = 0;
  int type = 0;
  int margin = 0;

  friend bool operator==(const MetViolation&, const MetViolation&) = default;
  friend auto operator<=>(const MetViolation& a, const MetViolation& b) {
    if (auto c = a.genus <=> b.genus; c != 0) return c;
    return a.generators <=> b.generators;
  }
};

struct MetScan {
  GenusCounts counts;
  /// Semigroups with e + m < 2t + 2, sorted by (genus, generators).
  std::vector<MetViolation> violations;
};

MetScan scan_met_inequality(int g_max, const EnumOptions& options = {});

/// Minimum of m + e - 2(t + 1) over semigroups of multiplicity exactly m and
/// genus <= genus_bound. This is an upper bound on the infimum over all
/// genera, never the infimum itself.
struct GmScanResult {
  int multiplicity = 0;
  int genus_bound = 0;
  int min_margin = 0;
  /// Attains min_margin; ties broken by smallest generator list.
  std::vector<std::int64_t> witness;
  std::uint64_t scanned_count = 0;
};

struct GmScanOptions : EnumOptions {
  /// Required for m >= 14 with genus_bound > m + 6.
  bool allow_long_run = false;
};

/// Throws kDomainError (m < 2), kInfeasibleBound (genus_bound < m - 1) or
/// kRangeExceeded (genus_bound too large, or a long run not allowed).
GmScanResult gm_scan(int m, int genus_bound, const GmScanOptions& options = {});

/// True when gm_scan(m, genus_bound) needs allow_long_run.
bool gm_scan_is_long_run(int m, int genus_bound);

/// m + e - 2(t + 1) computed through the numerical-semigroup invariants.
std::int64_t margin_of(const NumericalSemigroup& s);

}  // namespace gnslab
