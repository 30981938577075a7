#include "gnslab/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gnslab/error.hpp"
#include "gnslab/wilf.hpp"

namespace gnslab {

std::vector<std::int64_t> lemma_split(std::span<const std::int64_t> alpha, std::int64_t g) {
  if (g <= 0) throw Error(Errc::kDomainError, "split amount must be positive");
  if (alpha.empty()) throw Error(Errc::kInsufficientSum, "empty alpha");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) throw Error(Errc::kDomainError, "alpha entries must be non-negative");
    if (i > 0 && alpha[i] > alpha[i - 1]) {
      throw Error(Errc::kNotSorted, "alpha must be weakly decreasing");
    }
    total = checked_add(total, alpha[i]);
  }
  if (total < g) {
    throw Error(Errc::kInsufficientSum, "sum(alpha) = " + std::to_string(total) +
                                            " is less than " + std::to_string(g));
  }

  const auto d = alpha.size();
  std::vector<std::int64_t> beta(d, 0);
  if (alpha.front() >= g) {
    beta.front() = g;
    return beta;
  }

  std::vector<std::int64_t> rest(alpha.begin(), alpha.end());
  auto remaining = g;
  while (true) {
    // rest stays weakly decreasing, so its positive entries form a prefix
    const auto r = static_cast<std::int64_t>(
        std::count_if(rest.begin(), rest.end(), [](std::int64_t a) { return a > 0; }));
    if (r >= remaining) {
      for (std::int64_t i = 0; i < remaining; ++i) ++beta[static_cast<std::size_t>(i)];
      return beta;
    }
    for (std::int64_t i = 0; i < r; ++i) {
      ++beta[static_cast<std::size_t>(i)];
      --rest[static_cast<std::size_t>(i)];
    }
    remaining -= r;
  }
}

// ---------------------------------------------------------------------------

namespace {

void check_base(const NumericalSemigroup& t, const char* what) {
  if (t.is_whole_line()) {
    throw Error(Errc::kDomainError, std::string(what) + " base semigroup must differ from N");
  }
}

void check_dim(int d, int lo, const char* what) {
  if (d < lo || d > kMaxDimension) {
    throw Error(Errc::kDomainError, std::string(what) + " dimension must be in [" +
                                        std::to_string(lo) + ", " +
                                        std::to_string(kMaxDimension) + "]");
  }
}

// All points with lo <= |x| <= hi, optionally restricted to off-axis points.
PointSet norm_band(int d, std::int64_t lo, std::int64_t hi, bool off_axis_only) {
  PointSet out;
  for (auto k = std::max<std::int64_t>(lo, 0); k <= hi; ++k) {
    for (auto& x : points_of_norm(d, k)) {
      if (!off_axis_only || !x.on_axis()) out.push_back(x);
    }
  }
  return out;
}

void add_on_axes(PointSet& out, int d, std::span<const std::int64_t> values) {
  for (int i = 0; i < d; ++i) {
    for (auto v : values) out.push_back(Point::axis(d, i, v));
  }
}

template <class Range>
std::int64_t sum_B(std::int64_t d, const Range& norms) {
  std::int64_t s = 0;
  for (auto k : norms) s = checked_add(s, binom_B(d, k));
  return s;
}

// N(T) = T cap [0, F(T)]
std::vector<std::int64_t> small_elements(const NumericalSemigroup& t) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= t.frobenius(); ++x) {
    if (t.contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

void validate(const StripeSpec& spec) {
  check_base(spec.base, "stripe");
  check_dim(spec.dimension, 2, "stripe");
}

void validate(const GradedSpec& spec) {
  check_base(spec.base, "graded");
  check_dim(spec.dimension, 1, "graded");
}

void validate(const AxisSpec& spec) {
  check_dim(spec.dimension(), 2, "axis");
  for (const auto& s : spec.components) check_base(s, "axis");
}

Gns build_stripe(const StripeSpec& spec) {
  validate(spec);
  const int d = spec.dimension;
  auto gaps = norm_band(d, 1, spec.base.multiplicity() - 1, false);
  add_on_axes(gaps, d, spec.base.gaps());
  return Gns::from_gaps(d, std::move(gaps));
}

Gns build_graded(const GradedSpec& spec) {
  validate(spec);
  PointSet gaps;
  for (auto h : spec.base.gaps()) {
    auto level = points_of_norm(spec.dimension, h);
    gaps.insert(gaps.end(), level.begin(), level.end());
  }
  return Gns::from_gaps(spec.dimension, std::move(gaps));
}

Gns build_axis(const AxisSpec& spec) {
  validate(spec);
  const int d = spec.dimension();
  PointSet gaps;
  for (int i = 0; i < d; ++i) {
    for (auto h : spec.components[static_cast<std::size_t>(i)].gaps()) {
      gaps.push_back(Point::axis(d, i, h));
    }
  }
  return Gns::from_gaps(d, std::move(gaps));
}

// ---------------------------------------------------------------------------

StripeClosedForms stripe_closed_forms(const StripeSpec& spec) {
  validate(spec);
  const auto& t = spec.base;
  const int d = spec.dimension;
  const auto m = t.multiplicity();
  const auto f = t.frobenius();
  const auto pf_t = pseudo_frobenius(t);
  const auto sg_t = special_gaps(t);

  StripeClosedForms cf;
  cf.k_set = norm_band(d, 1, m - 1, true);

  cf.pseudo_frobenius = cf.k_set;
  add_on_axes(cf.pseudo_frobenius, d, pf_t);

  cf.special_gaps.clear();
  for (const auto& x : cf.k_set) {
    if (2 * x.norm() >= m) cf.special_gaps.push_back(x);
  }
  add_on_axes(cf.special_gaps, d, sg_t);

  cf.generators = norm_band(d, m, 2 * m - 1, true);
  add_on_axes(cf.generators, d, t.generators());

  cf.frobenius_allowable = norm_band(d, m - 1, m - 1, true);
  const std::int64_t fa_axis[] = {f};
  add_on_axes(cf.frobenius_allowable, d, fa_axis);

  for (auto* set : {&cf.k_set, &cf.pseudo_frobenius, &cf.special_gaps, &cf.generators,
                    &cf.frobenius_allowable}) {
    normalize(*set);
  }

  const auto h0 = binom_B(d + 1, m - 1) - 1;  // 0 < |x| < m
  const auto t_inv = invariants(t);
  cf.t = h0 - d * (m - 1) + d * t_inv.t;
  std::int64_t band = 0;
  for (auto i = m; i <= 2 * m - 1; ++i) band = checked_add(band, binom_B(d, i));
  cf.e = band - d * (m - t_inv.e);
  cf.tau = binom_B(d, m - 1);
  cf.g = h0 + d * (t_inv.g - (m - 1));
  cf.c = binom_B(d + 1, m - 1) + d * (f - (m - 1));
  cf.n = d * t_inv.n - (d - 1);
  return cf;
}

ClosedForms graded_closed_forms(const GradedSpec& spec) {
  validate(spec);
  const auto& t = spec.base;
  const int d = spec.dimension;
  const auto f = t.frobenius();
  const auto pf_t = pseudo_frobenius(t);
  const auto sg_t = special_gaps(t);
  const auto gens_t = t.generators();

  auto levels = [&](std::span<const std::int64_t> norms) {
    PointSet out;
    for (auto k : norms) {
      auto level = points_of_norm(d, k);
      out.insert(out.end(), level.begin(), level.end());
    }
    normalize(out);
    return out;
  };

  ClosedForms cf;
  cf.generators = levels(gens_t);
  cf.pseudo_frobenius = levels(pf_t);
  cf.special_gaps = levels(sg_t);
  const std::int64_t top[] = {f};
  cf.frobenius_allowable = levels(top);

  if (gens_t.size() == 2) {
    const auto a = gens_t[0];
    const auto b = gens_t[1];
    cf.e = binomial(a + d - 1, d - 1) + binomial(b + d - 1, d - 1);
    cf.t = binomial(a * b - a - b + d - 1, d - 1);
  } else {
    cf.e = sum_B(d, gens_t);
    cf.t = sum_B(d, pf_t);
  }
  cf.tau = binom_B(d, f);
  cf.g = sum_B(d, t.gaps());
  cf.n = sum_B(d, small_elements(t));
  cf.c = binom_B(d + 1, f);
  return cf;
}

ClosedForms axis_closed_forms(const AxisSpec& spec) {
  validate(spec);
  const int d = spec.dimension();
  ClosedForms cf;

  std::int64_t sum_e = 0, sum_m1 = 0, sum_t = 0, sum_g = 0, sum_n = 0, sum_c = 0;
  for (int i = 0; i < d; ++i) {
    const auto& s = spec.components[static_cast<std::size_t>(i)];
    const auto inv = invariants(s);
    sum_e += inv.e;
    sum_m1 += s.multiplicity() - 1;
    sum_t += inv.t;
    sum_g += inv.g;
    sum_n += inv.n;
    sum_c += inv.c;

    for (auto g : s.generators()) cf.generators.push_back(Point::axis(d, i, g));
    for (auto f : pseudo_frobenius(s)) cf.pseudo_frobenius.push_back(Point::axis(d, i, f));
    for (auto f : special_gaps(s)) cf.special_gaps.push_back(Point::axis(d, i, f));
    cf.frobenius_allowable.push_back(Point::axis(d, i, s.frobenius()));
  }

  // e_i + h e_j for 1 <= h <= m(S_j); h = 1 are the pairwise sums e_i + e_j
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const auto mj = spec.components[static_cast<std::size_t>(j)].multiplicity();
      for (std::int64_t h = 1; h <= mj; ++h) {
        cf.generators.push_back(Point::axis(d, i) + Point::axis(d, j, h));
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        cf.generators.push_back(Point::axis(d, i) + Point::axis(d, j) + Point::axis(d, k));
      }
    }
  }
  for (auto* set : {&cf.generators, &cf.pseudo_frobenius, &cf.special_gaps,
                    &cf.frobenius_allowable}) {
    normalize(*set);
  }

  cf.e = sum_e + (d - 1) * sum_m1 + binomial(d, 2) + binomial(d, 3);
  cf.t = sum_t;
  cf.tau = d;
  cf.g = sum_g;
  cf.n = sum_n - (d - 1);
  cf.c = sum_c - (d - 1);
  return cf;
}

QuasiFlags axis_quasi_flags_closed(const AxisSpec& spec) {
  validate(spec);
  QuasiFlags q{true, true};
  for (const auto& s : spec.components) {
    const auto k = classify(s);
    q.quasi_irreducible = q.quasi_irreducible && k.irreducible;
    q.quasi_symmetric = q.quasi_symmetric && k.symmetric;
  }
  return q;
}

QuasiFlags graded_quasi_flags_closed(const GradedSpec& spec) {
  validate(spec);
  const auto k = classify(spec.base);
  return {k.irreducible, k.symmetric};
}

}  // namespace gnslab
