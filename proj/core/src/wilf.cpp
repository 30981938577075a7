#include "gnslab/wilf.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "gnslab/error.hpp"

namespace gnslab {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(Errc::kRangeExceeded, "64-bit overflow in " + std::to_string(a) + " * " +
                                          std::to_string(b));
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(Errc::kRangeExceeded, "64-bit overflow in " + std::to_string(a) + " + " +
                                          std::to_string(b));
  }
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // r_i = C(n - k + i, i) is an integer at every step and increases with i,
  // so a 128-bit intermediate detects overflow exactly.
  __extension__ __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) {
      throw Error(Errc::kRangeExceeded,
                  "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t binom_B(std::int64_t d, std::int64_t m) {
  if (d < 1 || m < 0) {
    throw Error(Errc::kDomainError, "B_d(m) needs d >= 1 and m >= 0");
  }
  return binomial(checked_add(m, d - 1), d - 1);
}

std::string_view to_string(WilfVariant v) {
  switch (v) {
    case WilfVariant::kClassical: return "classical";
    case WilfVariant::kGeneralized: return "generalized";
    case WilfVariant::kEquivalentForm: return "equivalent_form";
  }
  return "?";
}

WilfReport make_wilf_report(WilfVariant variant, std::int64_t lhs, std::int64_t rhs,
                            bool sufficient_condition) {
  WilfReport r;
  r.variant = variant;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.holds = r.margin >= 0;
  r.sufficient_condition = sufficient_condition;
  return r;
}

GeneralizedWilf generalized_wilf_from(std::int64_t d, std::int64_t e, std::int64_t t,
                                      std::int64_t g, std::int64_t n, std::int64_t c) {
  const bool sufficient = e >= checked_mul(d, t + 1);
  GeneralizedWilf w;
  w.generalized =
      make_wilf_report(WilfVariant::kGeneralized, checked_mul(e, n), checked_mul(d, c), sufficient);
  w.equivalent = make_wilf_report(WilfVariant::kEquivalentForm, checked_mul(e - d, n),
                                  checked_mul(d, g), sufficient);
  return w;
}

StripeInequalityRecord stripe_inequality(std::int64_t m, std::int64_t d, std::int64_t e_T,
                                         std::int64_t t_T) {
  if (m < 2 || d < 2) throw Error(Errc::kDomainError, "stripe inequality needs m >= 2, d >= 2");
  if (e_T < 1 || e_T > m) throw Error(Errc::kDomainError, "need 1 <= e_T <= m");
  if (t_T < 1 || t_T > m - 1) throw Error(Errc::kDomainError, "need 1 <= t_T <= m - 1");

  StripeInequalityRecord r;
  r.m = m;
  r.d = d;
  r.e_T = e_T;
  r.t_T = t_T;
  r.lhs = binom_B(d + 1, 2 * m - 1) - checked_mul(d + 1, binom_B(d + 1, m - 1));
  r.theta = checked_mul(d, m - e_T - checked_mul(d, m - 1 - t_T));
  r.lhs_nonnegative = r.lhs >= 0;
  if (m >= 3) r.lhs_at_least_d_d_minus_1 = r.lhs >= d * (d - 1);
  if (m >= 7) r.lhs_at_least_d_m_minus_6 = r.lhs >= d * (m - 6);
  r.lhs_at_least_theta = r.lhs >= r.theta;
  return r;
}

namespace {

void scan_rows(std::int64_t m_lo, std::int64_t m_hi, std::int64_t d_max,
               std::vector<StripeInequalityRecord>& out) {
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    for (std::int64_t d = 2; d <= d_max; ++d) {
      // e_T = 1 only occurs for N itself (multiplicity 1), never with m >= 2.
      for (std::int64_t e = 2; e <= m; ++e) {
        for (std::int64_t t = 1; t <= m - 1; ++t) {
          out.push_back(stripe_inequality(m, d, e, t));
        }
      }
    }
  }
}

}  // namespace

GridScan wilf_grid_scan(std::int64_t m_max, std::int64_t d_max, int threads) {
  if (m_max < 2 || d_max < 2) {
    throw Error(Errc::kDomainError, "grid bounds must be >= 2");
  }
  GridScan scan;
  scan.m_max = m_max;
  scan.d_max = d_max;

  const auto rows = m_max - 1;
  const auto workers = static_cast<std::int64_t>(std::clamp<std::int64_t>(threads, 1, rows));
  std::vector<std::vector<StripeInequalityRecord>> parts(static_cast<std::size_t>(workers));
  if (workers == 1) {
    scan_rows(2, m_max, d_max, parts[0]);
  } else {
    std::vector<std::jthread> pool;
    const auto per = (rows + workers - 1) / workers;
    for (std::int64_t w = 0; w < workers; ++w) {
      const auto lo = 2 + w * per;
      const auto hi = std::min(m_max, lo + per - 1);
      pool.emplace_back([lo, hi, d_max, &part = parts[static_cast<std::size_t>(w)]] {
        if (lo <= hi) scan_rows(lo, hi, d_max, part);
      });
    }
  }
  for (auto& part : parts) {
    scan.records.insert(scan.records.end(), part.begin(), part.end());
  }
  scan.scanned = scan.records.size();
  for (const auto& r : scan.records) {
    if (!r.lhs_at_least_theta) scan.violations.push_back(r);
    if (!r.lhs_nonnegative || r.lhs_at_least_d_d_minus_1 == false ||
        r.lhs_at_least_d_m_minus_6 == false) {
      scan.lemma_failures.push_back(r);
    }
  }
  return scan;
}

}  // namespace gnslab
