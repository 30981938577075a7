#pragma once

// Slow reference implementations used only by the tests. They work from the
// raw definitions on plain containers and share no code with gnslab_core.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

struct Numerical {
  Vec generators;  // minimal
  Vec gaps;
  Vec pseudo_frobenius;
  Vec special_gaps;
  std::int64_t multiplicity = 0;
  std::int64_t frobenius = -1;
  std::int64_t n = 0;  // |S cap [0, F]|
};

/// Representability by dynamic programming; gcd must be 1.
Numerical numerical(const Vec& generators);

using Pt = std::vector<std::int64_t>;
using PtSet = std::set<Pt>;

struct Monoid {
  PtSet generators;
  PtSet pseudo_frobenius;
  PtSet special_gaps;
  PtSet maximal_gaps;
  std::int64_t n = 0;
  std::int64_t c = 0;
};

/// Everything by definition, scanning the box of points with |x| <= 2M + 1.
/// Small instances only.
Monoid monoid(int dim, const PtSet& gaps);

/// True iff N^d minus `gaps` is closed under addition.
bool is_monoid(int dim, const PtSet& gaps);

/// Number of numerical semigroups of each genus 0..g_max, by checking every
/// subset of [1, 2 g_max + 2] for closure.
std::vector<std::uint64_t> counts_by_genus(int g_max);

}  // namespace oracle
