#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gnslab/gns.hpp"
#include "gnslab/numerical_semigroup.hpp"
#include "gnslab/point.hpp"

namespace gnslab {

/// Splits a weakly decreasing alpha into beta <= alpha (componentwise) with
/// sum(beta) = g.
///
/// If some alpha_j >= g the whole amount goes to the first such j. Otherwise
/// the procedure peels layers: each round subtracts 1 from every coordinate
/// still positive, until the remaining amount fits in one partial layer,
/// which is filled from the lowest index up.
///
/// Throws kInsufficientSum (sum(alpha) < g), kNotSorted, kDomainError (g <= 0
/// or a negative entry).
std::vector<std::int64_t> lemma_split(std::span<const std::int64_t> alpha, std::int64_t g);

// ---------------------------------------------------------------------------

/// Complement = {0 < |x| < m(T)} plus the gaps of T on every axis. d >= 2.
struct StripeSpec {
  NumericalSemigroup base;
  int dimension = 2;
};

/// S = {x : |x| in T}. d >= 1 (d = 1 gives T back).
struct GradedSpec {
  NumericalSemigroup base;
  int dimension = 2;
};

/// Complement = gaps of S_i placed on axis i. At least two components.
struct AxisSpec {
  std::vector<NumericalSemigroup> components;
  int dimension() const noexcept { return static_cast<int>(components.size()); }
};

/// Throws kDomainError for T = N, d out of range, or fewer than two axes.
void validate(const StripeSpec& spec);
void validate(const GradedSpec& spec);
void validate(const AxisSpec& spec);

Gns build_stripe(const StripeSpec& spec);
Gns build_graded(const GradedSpec& spec);
Gns build_axis(const AxisSpec& spec);

/// Closed-form description of a construction, computed from the base
/// semigroup(s) alone. The counts are evaluated from binomial formulas, not
/// by measuring the sets, so the two act as separate checks.
struct ClosedForms {
  PointSet generators;
  PointSet pseudo_frobenius;
  PointSet special_gaps;
  PointSet frobenius_allowable;
  std::int64_t e = 0;
  std::int64_t t = 0;
  std::int64_t tau = 0;
  std::int64_t g = 0;
  std::int64_t n = 0;
  std::int64_t c = 0;
};

struct StripeClosedForms : ClosedForms {
  /// K(S): gaps of norm < m off the coordinate axes.
  PointSet k_set;
};

StripeClosedForms stripe_closed_forms(const StripeSpec& spec);
ClosedForms graded_closed_forms(const GradedSpec& spec);
ClosedForms axis_closed_forms(const AxisSpec& spec);

/// Axis(S_1..S_d) is quasi-irreducible iff every S_i is irreducible and
/// quasi-symmetric iff every S_i is symmetric.
QuasiFlags axis_quasi_flags_closed(const AxisSpec& spec);

/// Graded flags mirror T: irreducible / symmetric.
QuasiFlags graded_quasi_flags_closed(const GradedSpec& spec);

}  // namespace gnslab
