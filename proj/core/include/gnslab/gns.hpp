#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gnslab/error.hpp"
#include "gnslab/numerical_semigroup.hpp"
#include "gnslab/point.hpp"
#include "gnslab/wilf.hpp"

namespace gnslab {

inline constexpr std::size_t kMaxGapCount = 1'000'000;

/// Raised by Gns::from_gaps when the complement is not closed under
/// addition; `lhs + rhs` is a listed gap while both summands are not.
class NotAMonoidError : public Error {
 public:
  NotAMonoidError(Point lhs, Point rhs);
  const Point& lhs() const noexcept { return lhs_; }
  const Point& rhs() const noexcept { return rhs_; }

 private:
  Point lhs_;
  Point rhs_;
};

/// A generalized numerical semigroup S in N^d, given by its finite gap set
/// H(S). Validated on construction and immutable afterwards; membership uses
/// an index built eagerly, so instances can be shared across threads.
class Gns {
 public:
  /// Throws kZeroGap, kDimensionMismatch, kRangeExceeded, or NotAMonoidError.
  static Gns from_gaps(int dim, PointSet gaps);

  int dimension() const noexcept { return dim_; }
  /// Sorted in graded-lex order.
  std::span<const Point> gaps() const noexcept { return gaps_; }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }

  /// Throws kDimensionMismatch if x is not in N^d.
  bool contains(const Point& x) const;
  bool is_gap(const Point& x) const { return !contains(x); }
  /// contains() without the dimension check, for hot loops.
  bool contains_unchecked(const Point& x) const noexcept;

  /// M = max norm over the gaps (0 when there are none).
  std::int64_t max_gap_norm() const noexcept { return max_gap_norm_; }
  /// Least norm of a nonzero element of S.
  std::int64_t min_element_norm() const noexcept { return min_element_norm_; }

  /// Some u <= x with u and x - u both nonzero elements of S; the one of the
  /// pair with the smaller norm is returned.
  std::optional<Point> split(const Point& x) const;

  /// The points lying below some gap.
  struct GapClosure {
    /// Its maximal elements, which are exactly the maximal gaps.
    PointSet maximal;
    std::int64_t size = 0;
    /// Elements of S inside it.
    std::int64_t elements = 0;
  };
  GapClosure gap_closure() const;

 private:
  class Index;

  Gns() = default;

  int dim_ = 0;
  PointSet gaps_;
  std::int64_t max_gap_norm_ = 0;
  std::int64_t min_element_norm_ = 1;
  std::shared_ptr<const Index> index_;
};

/// Minimal generators, searched over the region |x| <= 2M + 1: any element of
/// larger norm splits into two points of norm > M, both in S.
PointSet minimal_generators(const Gns& s);

/// Gaps x with x + g in S for every minimal generator g.
PointSet pseudo_frobenius(const Gns& s, std::span<const Point> generators);
PointSet pseudo_frobenius(const Gns& s);

/// Pseudo-Frobenius elements x with 2x in S.
PointSet special_gaps(const Gns& s, std::span<const Point> pseudo_frobenius_set);
PointSet special_gaps(const Gns& s);

/// FA(S): gaps maximal for the componentwise order.
PointSet frobenius_allowable(const Gns& s);

struct QuasiFlags {
  bool quasi_irreducible = false;
  bool quasi_symmetric = false;
  friend bool operator==(const QuasiFlags&, const QuasiFlags&) = default;
};

/// Everything gns_core computes about one semigroup, computed once.
struct GnsProfile {
  PointSet generators;
  PointSet pseudo_frobenius;
  PointSet special_gaps;
  PointSet frobenius_allowable;
  InvariantRecord invariants;
  QuasiFlags flags;
  GeneralizedWilf wilf;
};

GnsProfile analyze(const Gns& s);

/// g, t, tau, e, n = |{s in S : s <= h for some gap h}|, c = |{x : x <= h}|.
InvariantRecord invariants(const Gns& s);

/// quasi_irreducible iff FA = SG, quasi_symmetric iff tau = t.
QuasiFlags quasi_flags(const Gns& s);

GeneralizedWilf generalized_wilf(const Gns& s);

}  // namespace gnslab
