#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "gnslab/numerical_semigroup.hpp"
#include "gnslab/point.hpp"
#include "oracles.hpp"

namespace gnslab::testing {

inline oracle::PtSet to_oracle(std::span<const Point> points) {
  oracle::PtSet out;
  for (const auto& p : points) {
    oracle::Pt q;
    for (int i = 0; i < p.dim(); ++i) q.push_back(p[i]);
    out.insert(q);
  }
  return out;
}

inline PointSet from_oracle(const oracle::PtSet& points) {
  PointSet out;
  for (const auto& q : points) out.push_back(Point(std::span<const std::int64_t>(q)));
  normalize(out);
  return out;
}

inline std::vector<std::int64_t> to_vec(std::span<const std::int64_t> s) {
  return {s.begin(), s.end()};
}

inline PointSet points(std::initializer_list<std::initializer_list<std::int64_t>> list) {
  PointSet out;
  for (auto p : list) out.push_back(Point(p));
  normalize(out);
  return out;
}

/// A random numerical semigroup with Frobenius number at most f_max and
/// different from N: a few random generators, with gcd fixed by adding a
/// coprime one.
inline NumericalSemigroup random_semigroup(std::mt19937_64& rng, std::int64_t f_max) {
  for (;;) {
    std::uniform_int_distribution<std::int64_t> mult(2, 12);
    const auto m = mult(rng);
    std::uniform_int_distribution<std::int64_t> extra(m + 1, 3 * m + 8);
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<std::int64_t> gens{m};
    for (int k = count(rng); k > 0; --k) gens.push_back(extra(rng));
    std::int64_t g = 0;
    for (auto a : gens) g = std::gcd(g, a);
    if (g != 1) gens.push_back(m + 1);
    auto s = NumericalSemigroup::from_generators(gens);
    if (!s.is_whole_line() && s.frobenius() <= f_max) return s;
  }
}

}  // namespace gnslab::testing
