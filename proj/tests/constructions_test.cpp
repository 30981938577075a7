#include <numeric>
#include <random>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "gnslab/constructions.hpp"
#include "gnslab/error.hpp"
#include "oracles.hpp"
#include "reference_sets.hpp"
#include "support.hpp"

namespace gnslab {
namespace {

using ::testing::ElementsAre;
using testing::points;
using testing::to_oracle;

NumericalSemigroup ns(std::initializer_list<std::int64_t> g) {
  return NumericalSemigroup::from_generators(g);
}

PointSet norm_ball(int d, std::int64_t lo, std::int64_t hi) {
  PointSet out;
  for (auto k = lo; k <= hi; ++k) {
    auto level = points_of_norm(d, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  normalize(out);
  return out;
}

Errc split_error(std::vector<std::int64_t> alpha, std::int64_t g) {
  try {
    lemma_split(alpha, g);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::kParseError;
}

TEST(LemmaSplit, WorkedExample) {
  EXPECT_THAT(lemma_split(std::vector<std::int64_t>{8, 7, 3, 2}, 10), ElementsAre(3, 3, 2, 2));
}

TEST(LemmaSplit, SingleLargeCoordinate) {
  EXPECT_THAT(lemma_split(std::vector<std::int64_t>{10, 0, 0}, 10), ElementsAre(10, 0, 0));
}

TEST(LemmaSplit, EvenLayers) {
  const auto beta = lemma_split(std::vector<std::int64_t>{3, 3, 3}, 7);
  EXPECT_THAT(beta, ElementsAre(3, 2, 2));
}

TEST(LemmaSplit, Errors) {
  EXPECT_EQ(split_error({3, 2}, 6), Errc::kInsufficientSum);
  EXPECT_THAT(lemma_split(std::vector<std::int64_t>{3, 2}, 5), ElementsAre(3, 2));
  EXPECT_EQ(split_error({}, 1), Errc::kInsufficientSum);
  EXPECT_EQ(split_error({2, 3}, 1), Errc::kNotSorted);
  EXPECT_EQ(split_error({3, 2}, 0), Errc::kDomainError);
  EXPECT_EQ(split_error({3, -1}, 1), Errc::kDomainError);
}

TEST(LemmaSplit, RandomPostconditions) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<std::int64_t> val(0, 20);
  int checked = 0;
  while (checked < 10'000) {
    std::vector<std::int64_t> alpha(static_cast<std::size_t>(len(rng)));
    for (auto& a : alpha) a = val(rng);
    std::sort(alpha.rbegin(), alpha.rend());
    const auto total = std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
    if (total < 2) continue;
    const auto g = std::uniform_int_distribution<std::int64_t>(1, total - 1)(rng);
    const auto beta = lemma_split(alpha, g);
    ASSERT_EQ(beta.size(), alpha.size());
    ASSERT_EQ(std::accumulate(beta.begin(), beta.end(), std::int64_t{0}), g);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      ASSERT_GE(beta[i], 0);
      ASSERT_LE(beta[i], alpha[i]);
    }
    ++checked;
  }
}

TEST(Stripe, TwoThree) {
  const auto s = build_stripe({ns({2, 3}), 2});
  EXPECT_EQ(PointSet(s.gaps().begin(), s.gaps().end()), points({{1, 0}, {0, 1}}));
}

TEST(Stripe, WorkedExampleGenerators) {
  const auto s = build_stripe({ns({5, 6, 13}), 2});
  EXPECT_EQ(minimal_generators(s), testing::stripe_5613_generators());
  const auto cf = stripe_closed_forms({ns({5, 6, 13}), 2});
  EXPECT_EQ(cf.generators, testing::stripe_5613_generators());
  EXPECT_EQ(cf.e, 36);
  EXPECT_EQ(cf.t, 10);
}

TEST(Stripe, ThreeFourFiveInThreeSpace) {
  const auto s = build_stripe({ns({3, 4, 5}), 3});
  const PointSet gaps(s.gaps().begin(), s.gaps().end());
  EXPECT_EQ(gaps, norm_ball(3, 1, 2));
  EXPECT_EQ(s.genus(), 9);
}

// For <3,4,5> in N^2 the stripe has K = {(1,1)}: PF = K plus 1e_i, 2e_i.
TEST(Stripe, ClosedFormCounts) {
  const auto a = stripe_closed_forms({ns({2, 3}), 2});
  EXPECT_EQ(a.e, 7);
  EXPECT_EQ(a.t, 2);
  const auto b = stripe_closed_forms({ns({3, 4, 5}), 2});
  EXPECT_EQ(b.e, 15);
  EXPECT_EQ(b.t, 5);
  EXPECT_EQ(b.k_set, points({{1, 1}}));
  const auto s = build_stripe({ns({3, 4, 5}), 2});
  const auto o = oracle::monoid(2, to_oracle(s.gaps()));
  EXPECT_EQ(static_cast<std::int64_t>(o.generators.size()), b.e);
  EXPECT_EQ(static_cast<std::int64_t>(o.pseudo_frobenius.size()), b.t);
}

TEST(Stripe, RejectsBadSpecs) {
  EXPECT_THROW(validate(StripeSpec{ns({1}), 2}), Error);
  EXPECT_THROW(validate(StripeSpec{ns({2, 3}), 1}), Error);
  EXPECT_THROW(validate(StripeSpec{ns({2, 3}), 9}), Error);
}

TEST(Graded, WorkedExample) {
  const auto s = build_graded({ns({4, 6, 7}), 2});
  EXPECT_EQ(PointSet(s.gaps().begin(), s.gaps().end()), testing::graded_467_gaps());
  EXPECT_EQ(minimal_generators(s), testing::graded_467_generators());
  const auto cf = graded_closed_forms({ns({4, 6, 7}), 2});
  EXPECT_EQ(cf.e, 20);
  EXPECT_EQ(cf.t, 10);
}

TEST(Graded, SmallCases) {
  const auto s = build_graded({ns({2, 3}), 2});
  EXPECT_EQ(PointSet(s.gaps().begin(), s.gaps().end()), points({{1, 0}, {0, 1}}));
  EXPECT_EQ(build_graded({ns({2, 5}), 3}).genus(), 13);

  const auto a = graded_closed_forms({ns({2, 3}), 2});
  EXPECT_EQ(a.e, 7);
  EXPECT_EQ(a.t, 2);
  const auto b = graded_closed_forms({ns({2, 3}), 1});
  EXPECT_EQ(b.e, 2);
  EXPECT_EQ(b.t, 1);
}

TEST(Axis, Gaps) {
  const auto a = build_axis({{ns({2, 3}), ns({2, 3})}});
  EXPECT_EQ(PointSet(a.gaps().begin(), a.gaps().end()), points({{1, 0}, {0, 1}}));
  const auto b = build_axis({{ns({2, 3}), ns({3, 5})}});
  EXPECT_EQ(PointSet(b.gaps().begin(), b.gaps().end()),
            points({{1, 0}, {0, 1}, {0, 2}, {0, 4}, {0, 7}}));
  const auto c = build_axis({{ns({3, 4, 5}), ns({3, 4, 5}), ns({3, 4, 5})}});
  EXPECT_EQ(c.genus(), 6);
}

TEST(Axis, ClosedForms) {
  const auto a = axis_closed_forms({{ns({2, 3}), ns({2, 3})}});
  EXPECT_EQ(a.e, 7);
  EXPECT_EQ(a.generators, points({{2, 0}, {3, 0}, {0, 2}, {0, 3}, {2, 1}, {1, 2}, {1, 1}}));
  const auto b = axis_closed_forms({{ns({2, 3}), ns({3, 5})}});
  EXPECT_EQ(b.e, 8);
  EXPECT_EQ(b.t, 2);
  EXPECT_EQ(b.n, 4);
  EXPECT_EQ(b.c, 9);
  const auto c = axis_closed_forms({{ns({2, 3}), ns({2, 3}), ns({2, 3})}});
  EXPECT_EQ(c.e, 16);
  const auto s = build_axis({{ns({2, 3}), ns({2, 3}), ns({2, 3})}});
  EXPECT_EQ(static_cast<std::int64_t>(oracle::monoid(3, to_oracle(s.gaps())).generators.size()),
            16);
}

TEST(Axis, RejectsSingleComponent) {
  EXPECT_THROW(validate(AxisSpec{{ns({2, 3})}}), Error);
  EXPECT_THROW(validate(AxisSpec{{ns({2, 3}), ns({1})}}), Error);
}

TEST(Axis, QuasiFlags) {
  const auto sym = ns({4, 6, 7});
  const auto psym = ns({3, 4, 5});
  const auto all_sym = AxisSpec{{sym, ns({2, 3})}};
  EXPECT_EQ(axis_quasi_flags_closed(all_sym), (QuasiFlags{true, true}));
  EXPECT_EQ(quasi_flags(build_axis(all_sym)), (QuasiFlags{true, true}));

  // one pseudo-symmetric component: quasi-irreducible, t = tau + 1
  const auto mixed = AxisSpec{{sym, psym, ns({2, 5})}};
  const auto p = analyze(build_axis(mixed));
  EXPECT_TRUE(p.flags.quasi_irreducible);
  EXPECT_FALSE(p.flags.quasi_symmetric);
  EXPECT_EQ(p.invariants.tau, 3);
  EXPECT_EQ(p.invariants.t, p.invariants.tau + 1);

  // a component that is not irreducible
  const auto bad = ns({4, 5, 11});
  ASSERT_FALSE(classify(bad).irreducible);
  const auto spec = AxisSpec{{bad, ns({2, 3})}};
  EXPECT_FALSE(axis_quasi_flags_closed(spec).quasi_irreducible);
  EXPECT_FALSE(quasi_flags(build_axis(spec)).quasi_irreducible);
}

TEST(Graded, QuasiFlagsFollowBase) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = testing::random_semigroup(rng, 25);
    const GradedSpec spec{t, 2};
    EXPECT_EQ(graded_quasi_flags_closed(spec), quasi_flags(build_graded(spec)));
  }
}

void expect_matches(const ClosedForms& cf, const Gns& s) {
  const auto p = analyze(s);
  EXPECT_EQ(cf.generators, p.generators);
  EXPECT_EQ(cf.pseudo_frobenius, p.pseudo_frobenius);
  EXPECT_EQ(cf.special_gaps, p.special_gaps);
  EXPECT_EQ(cf.frobenius_allowable, p.frobenius_allowable);
  EXPECT_EQ(cf.e, p.invariants.e);
  EXPECT_EQ(cf.t, p.invariants.t);
  EXPECT_EQ(cf.tau, p.invariants.tau);
  EXPECT_EQ(cf.g, p.invariants.g);
  EXPECT_EQ(cf.n, p.invariants.n);
  EXPECT_EQ(cf.c, p.invariants.c);
}

TEST(ClosedForms, MatchMeasuredValuesOnSmallInstances) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = testing::random_semigroup(rng, 20);
    const int d = 2 + trial % 2;
    SCOPED_TRACE(::testing::Message() << "T = " << ::testing::PrintToString(testing::to_vec(t.generators()))
                                      << " d = " << d);
    expect_matches(stripe_closed_forms({t, d}), build_stripe({t, d}));
    expect_matches(graded_closed_forms({t, d}), build_graded({t, d}));
    std::vector<NumericalSemigroup> comps{t};
    for (int i = 1; i < d; ++i) comps.push_back(testing::random_semigroup(rng, 20));
    expect_matches(axis_closed_forms({comps}), build_axis({comps}));
  }
}

}  // namespace
}  // namespace gnslab
