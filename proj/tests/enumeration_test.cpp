#include <mutex>
#include <set>
#include <sstream>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "gnslab/enumeration.hpp"
#include "gnslab/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace gnslab {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(EnumFrame, RootAndOrdinary) {
  const auto root = EnumFrame::root();
  EXPECT_EQ(root.genus(), 0);
  EXPECT_EQ(root.frobenius(), -1);
  EXPECT_THAT(root.effective_generators(), ElementsAre(1));

  const auto o = EnumFrame::ordinary(4);
  EXPECT_EQ(o.genus(), 3);
  EXPECT_EQ(o.frobenius(), 3);
  EXPECT_THAT(o.minimal_generators(), ElementsAre(4, 5, 6, 7));
  EXPECT_THAT(o.effective_generators(), ElementsAre(4, 5, 6, 7));
  EXPECT_TRUE(o.contains(0));
  EXPECT_FALSE(o.contains(2));
}

TEST(EnumFrame, ChildMatchesSemigroup) {
  // <3,5,7> minus 7 = <3,5>
  const auto f = EnumFrame::ordinary(3).child(4).child(7);
  EXPECT_THAT(f.minimal_generators(), ElementsAre(3, 5));
  EXPECT_EQ(f.genus(), 4);
  EXPECT_EQ(f.frobenius(), 7);
  EXPECT_EQ(f.to_semigroup(), NumericalSemigroup::from_generators({3, 5}));
  EXPECT_THROW(f.child(5), Error);
}

TEST(EnumerateByGenus, SmallCounts) {
  EXPECT_THAT(enumerate_by_genus(3), ElementsAre(1, 1, 2, 4));
}

TEST(EnumerateByGenus, MatchesSubsetOracle) {
  const auto naive = oracle::counts_by_genus(8);
  EXPECT_THAT(naive, ElementsAre(1, 1, 2, 4, 7, 12, 23, 39, 67));
  EXPECT_EQ(enumerate_by_genus(8), naive);
}

TEST(EnumerateByGenus, GenusOneIsTwoThree) {
  std::vector<std::vector<std::int64_t>> seen;
  enumerate_by_genus(1, {}, [&](const EnumFrame& f) {
    if (f.genus() == 1) seen.push_back(testing::to_vec(f.to_semigroup().generators()));
  });
  EXPECT_THAT(seen, ElementsAre(ElementsAre(2, 3)));
}

// Every visited frame agrees with a semigroup rebuilt from its generators.
TEST(EnumerateByGenus, FramesAreConsistent) {
  std::set<std::vector<std::int64_t>> distinct;
  std::size_t visits = 0;
  enumerate_by_genus(9, {}, [&](const EnumFrame& f) {
    ++visits;
    const auto s = f.to_semigroup();
    ASSERT_EQ(s.genus(), f.genus());
    ASSERT_EQ(s.frobenius(), f.frobenius());
    ASSERT_EQ(s.multiplicity(), f.multiplicity());
    const auto inv = invariants(s);
    ASSERT_EQ(inv.t, f.type());
    ASSERT_EQ(margin_of(s), f.margin());
    for (int y = 0; y <= f.frobenius() + 1; ++y) ASSERT_EQ(s.contains(y), f.contains(y));
    distinct.insert(testing::to_vec(s.generators()));
  });
  EXPECT_EQ(distinct.size(), visits);
}

TEST(EnumerateByGenus, Bounds) {
  EXPECT_THROW(enumerate_by_genus(36), Error);
  EXPECT_THROW(enumerate_by_genus(-1), Error);
}

TEST(EnumerateByGenus, ThreadsAndSplitGiveSameCounts) {
  const auto seq = enumerate_by_genus(14);
  EnumOptions par;
  par.threads = 4;
  EXPECT_EQ(enumerate_by_genus(14, par), seq);
  EnumOptions split;
  split.split_genus = 6;
  EXPECT_EQ(enumerate_by_genus(14, split), seq);
}

TEST(EnumerateByGenus, ProgressLines) {
  std::ostringstream log;
  EnumOptions o;
  o.threads = 2;
  o.progress = true;
  o.progress_stream = &log;
  enumerate_by_genus(10, o);
  EXPECT_THAT(log.str(), ::testing::HasSubstr("[enum]"));
}

TEST(MetScan, NoViolationsAtSmallGenus) {
  const auto scan = scan_met_inequality(1);
  EXPECT_THAT(scan.violations, IsEmpty());
  EXPECT_THAT(scan.counts, ElementsAre(1, 1));
  EXPECT_THAT(scan_met_inequality(12).violations, IsEmpty());
}

// The first counterexample has genus 27, so nothing may show up through 22.
// Every 97th frame has its margin recomputed by the oracle.
TEST(MetScan, ThroughGenus22) {
  const auto scan = scan_met_inequality(22);
  EXPECT_THAT(scan.violations, IsEmpty());
  EXPECT_EQ(scan.counts[20], 37396U);
  EXPECT_EQ(scan.counts[21], 62194U);
  EXPECT_EQ(scan.counts[22], 103246U);

  std::mutex mu;
  std::vector<std::pair<std::vector<std::int64_t>, int>> sampled;
  std::uint64_t seen = 0;
  enumerate_by_genus(22, {}, [&](const EnumFrame& f) {
    if (seen++ % 97 != 0) return;
    std::lock_guard lock(mu);
    const auto gens = f.minimal_generators();
    sampled.emplace_back(std::vector<std::int64_t>(gens.begin(), gens.end()), f.margin());
  });
  ASSERT_GT(sampled.size(), 2000U);
  for (const auto& [gens, margin] : sampled) {
    if (gens.size() == 1) continue;  // N itself
    const auto o = oracle::numerical(gens);
    const auto t = static_cast<int>(o.pseudo_frobenius.size());
    const auto e = static_cast<int>(o.generators.size());
    EXPECT_EQ(margin, o.multiplicity + e - 2 * (t + 1));
    EXPECT_GE(margin, 0);
  }
}

TEST(Margin, Examples) {
  EXPECT_EQ(margin_of(NumericalSemigroup::from_generators({2, 3})), 0);
  EXPECT_EQ(margin_of(NumericalSemigroup::from_generators({3, 4, 5})), 0);
  EXPECT_EQ(margin_of(NumericalSemigroup::from_generators({17, 18, 20, 22, 24, 25})), -1);
}

TEST(GmScan, MultiplicityTwo) {
  const auto r = gm_scan(2, 10);
  EXPECT_EQ(r.min_margin, 0);
  // <2, 2k+1> for k = 1..10
  EXPECT_EQ(r.scanned_count, 10u);
  EXPECT_THAT(r.witness, ElementsAre(2, 3));
}

TEST(GmScan, MultiplicityThree) {
  const auto r = gm_scan(3, 12);
  EXPECT_EQ(r.min_margin, 0);
  EXPECT_EQ(margin_of(NumericalSemigroup::from_generators(r.witness)), r.min_margin);
}

// Brute force over the full tree restricted to multiplicity m.
TEST(GmScan, MatchesFilteredEnumeration) {
  for (int m = 2; m <= 6; ++m) {
    const int bound = m + 6;
    int best = INT32_MAX;
    std::uint64_t count = 0;
    enumerate_by_genus(bound, {}, [&](const EnumFrame& f) {
      if (f.multiplicity() != m) return;
      ++count;
      best = std::min<int>(best, static_cast<int>(margin_of(f.to_semigroup())));
    });
    const auto r = gm_scan(m, bound);
    EXPECT_EQ(r.scanned_count, count) << m;
    EXPECT_EQ(r.min_margin, best) << m;
    EXPECT_EQ(margin_of(NumericalSemigroup::from_generators(r.witness)), r.min_margin);
  }
}

TEST(GmScan, Errors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kParseError;
  };
  EXPECT_EQ(code([] { gm_scan(1, 5); }), Errc::kDomainError);
  EXPECT_EQ(code([] { gm_scan(5, 3); }), Errc::kInfeasibleBound);
  EXPECT_EQ(code([] { gm_scan(17, 27); }), Errc::kRangeExceeded);
  EXPECT_TRUE(gm_scan_is_long_run(17, 27));
  EXPECT_FALSE(gm_scan_is_long_run(5, 30));
}

TEST(GmScan, ParallelMatchesSequential) {
  GmScanOptions par;
  par.threads = 4;
  const auto a = gm_scan(5, 14);
  const auto b = gm_scan(5, 14, par);
  EXPECT_EQ(a.min_margin, b.min_margin);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.scanned_count, b.scanned_count);
}

}  // namespace
}  // namespace gnslab
