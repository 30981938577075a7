#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace gnslab {

// ---------------------------------------------------------------------------
// Exact combinatorics
// ---------------------------------------------------------------------------

/// C(n, k) in 64-bit, throws Errc::kRangeExceeded if the value does not fit.
/// Returns 0 for k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Number of points of N^d with coordinate sum m: C(m + d - 1, d - 1).
/// Requires d >= 1 and m >= 0 (Errc::kDomainError otherwise).
std::int64_t binom_B(std::int64_t d, std::int64_t m);

/// a * b and a + b with overflow checks (Errc::kRangeExceeded).
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// ---------------------------------------------------------------------------
// Wilf reports
// ---------------------------------------------------------------------------

enum class WilfVariant { kClassical, kGeneralized, kEquivalentForm };

std::string_view to_string(WilfVariant v);

/// One side-by-side comparison lhs >= rhs.
///
/// classical:        e*n      vs  F + 1
/// generalized:      e*n      vs  d*c
/// equivalent_form:  (e-d)*n  vs  d*g
///
/// `sufficient_condition` records e >= d(t+1) (d = 1 for the classical
/// report), which implies the inequality.
struct WilfReport {
  WilfVariant variant = WilfVariant::kClassical;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  std::int64_t margin = 0;
  bool sufficient_condition = false;

  friend bool operator==(const WilfReport&, const WilfReport&) = default;
};

WilfReport make_wilf_report(WilfVariant variant, std::int64_t lhs, std::int64_t rhs,
                            bool sufficient_condition);

/// Both forms of the generalized inequality for a GNS in N^d.
struct GeneralizedWilf {
  WilfReport generalized;
  WilfReport equivalent;

  bool agree() const { return generalized.holds == equivalent.holds; }
  friend bool operator==(const GeneralizedWilf&, const GeneralizedWilf&) = default;
};

GeneralizedWilf generalized_wilf_from(std::int64_t d, std::int64_t e, std::int64_t t,
                                      std::int64_t g, std::int64_t n, std::int64_t c);

// ---------------------------------------------------------------------------
// Binomial inequality behind the stripe embedding-dimension bound
// ---------------------------------------------------------------------------

/// lhs   = B_{d+1}(2m-1) - (d+1) B_{d+1}(m-1)
/// theta = d [m - e_T - d (m - 1 - t_T)]
///
/// The lemma verdicts are only meaningful in their stated ranges and are
/// empty outside them (d(d-1) needs m >= 3, d(m-6) needs m >= 7).
struct StripeInequalityRecord {
  std::int64_t m = 0;
  std::int64_t d = 0;
  std::int64_t e_T = 0;
  std::int64_t t_T = 0;
  std::int64_t lhs = 0;
  std::int64_t theta = 0;

  bool lhs_nonnegative = false;
  std::optional<bool> lhs_at_least_d_d_minus_1;
  std::optional<bool> lhs_at_least_d_m_minus_6;
  bool lhs_at_least_theta = false;

  friend bool operator==(const StripeInequalityRecord&, const StripeInequalityRecord&) = default;
};

/// Preconditions: m >= 2, d >= 2, 1 <= e_T <= m, 1 <= t_T <= m - 1
/// (Errc::kDomainError otherwise).
StripeInequalityRecord stripe_inequality(std::int64_t m, std::int64_t d, std::int64_t e_T,
                                         std::int64_t t_T);

struct GridScan {
  std::int64_t m_max = 0;
  std::int64_t d_max = 0;
  std::size_t scanned = 0;
  /// Every record over the grid, ordered by (m, d, e_T, t_T).
  std::vector<StripeInequalityRecord> records;
  /// Records with lhs < theta, same order. Expected empty.
  std::vector<StripeInequalityRecord> violations;
  /// Rows where a lemma bound failed inside its range. Expected empty.
  std::vector<StripeInequalityRecord> lemma_failures;
};

/// Scans 2 <= m <= m_max, 2 <= d <= d_max and every pair 2 <= e_T <= m,
/// 1 <= t_T <= m - 1. Rows are independent; with `threads > 1` the m-range is
/// split across workers and merged back in grid order.
GridScan wilf_grid_scan(std::int64_t m_max, std::int64_t d_max, int threads = 1);

}  // namespace gnslab
