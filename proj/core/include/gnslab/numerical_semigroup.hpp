#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gnslab/wilf.hpp"

namespace gnslab {

/// Generators above this bound are rejected with Errc::kRangeExceeded.
inline constexpr std::int64_t kMaxGenerator = 1'000'000;
/// Gap sets are materialized; semigroups with more gaps are rejected.
inline constexpr std::int64_t kMaxNumericalGenus = 10'000'000;

/// A cofinite submonoid of N, stored by its minimal generators together with
/// the Apery set with respect to the multiplicity and the sorted gap set.
/// Immutable once built.
class NumericalSemigroup {
 public:
  /// Reduces `generators` to the minimal generating set. Throws
  /// kEmptyGenerators, kNotCofinite (gcd > 1), kInvalidArgument (a
  /// non-positive entry) or kRangeExceeded.
  static NumericalSemigroup from_generators(std::span<const std::int64_t> generators);
  static NumericalSemigroup from_generators(std::initializer_list<std::int64_t> generators) {
    return from_generators(std::span<const std::int64_t>(generators.begin(), generators.size()));
  }

  std::span<const std::int64_t> generators() const noexcept { return generators_; }
  std::span<const std::int64_t> gaps() const noexcept { return gaps_; }
  /// apery()[r] = least element of S congruent to r mod m.
  std::span<const std::int64_t> apery() const noexcept { return apery_; }

  std::int64_t multiplicity() const noexcept { return generators_.front(); }
  std::int64_t embedding_dimension() const noexcept {
    return static_cast<std::int64_t>(generators_.size());
  }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }
  /// Largest gap, -1 for N.
  std::int64_t frobenius() const noexcept { return gaps_.empty() ? -1 : gaps_.back(); }
  bool is_whole_line() const noexcept { return gaps_.empty(); }

  bool contains(std::int64_t x) const noexcept;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> gaps_;
  std::vector<std::int64_t> apery_;
};

/// Invariants of a numerical semigroup or of a GNS. Fields that only make
/// sense in dimension 1 (multiplicity, Frobenius number) are empty for GNSs.
struct InvariantRecord {
  std::int64_t dimension = 1;
  std::int64_t e = 0;
  std::int64_t g = 0;
  std::int64_t t = 0;
  std::int64_t n = 0;
  std::int64_t c = 0;
  std::int64_t tau = 0;
  std::optional<std::int64_t> multiplicity;
  std::optional<std::int64_t> frobenius;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

struct NsClassification {
  bool irreducible = false;
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool max_embedding_dimension = false;

  friend bool operator==(const NsClassification&, const NsClassification&) = default;
};

/// Pseudo-Frobenius numbers, read off the Apery set: the maximal elements
/// under a <=_S b iff b - a in S, shifted by -m. Sorted ascending.
std::vector<std::int64_t> pseudo_frobenius(const NumericalSemigroup& s);

/// Pseudo-Frobenius numbers x with 2x in S.
std::vector<std::int64_t> special_gaps(const NumericalSemigroup& s);

/// m, e, g, F, t, n = |S cap [0, F]|, c = F + 1, tau (1 unless S = N).
InvariantRecord invariants(const NumericalSemigroup& s);

NsClassification classify(const NumericalSemigroup& s);

/// e*n against F + 1. The sufficient condition is e >= t + 1.
WilfReport wilf_check(const NumericalSemigroup& s);

}  // namespace gnslab
