#include "gnslab/numerical_semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "gnslab/error.hpp"

namespace gnslab {
namespace {

// Least element of <gens> in every residue class mod gens.front(): shortest
// paths on the residue graph with one edge per generator.
std::vector<std::int64_t> apery_by_residues(std::span<const std::int64_t> gens) {
  const auto m = gens.front();
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kInf);
  using Item = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, r] = queue.top();
    queue.pop();
    if (value != dist[static_cast<std::size_t>(r)]) continue;
    for (auto g : gens.subspan(1)) {
      const auto next = value + g;
      const auto nr = static_cast<std::size_t>(next % m);
      if (next < dist[nr]) {
        dist[nr] = next;
        queue.emplace(next, static_cast<std::int64_t>(nr));
      }
    }
  }
  return dist;
}

bool member(std::span<const std::int64_t> apery, std::int64_t x) {
  if (x < 0) return false;
  const auto m = static_cast<std::int64_t>(apery.size());
  return x >= apery[static_cast<std::size_t>(x % m)];
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> input) {
  if (input.empty()) throw Error(Errc::kEmptyGenerators, "at least one generator is required");
  std::vector<std::int64_t> gens(input.begin(), input.end());
  for (auto g : gens) {
    if (g <= 0) {
      throw Error(Errc::kInvalidArgument, "generators must be positive, got " + std::to_string(g));
    }
    if (g > kMaxGenerator) {
      throw Error(Errc::kRangeExceeded, "generator " + std::to_string(g) + " exceeds " +
                                            std::to_string(kMaxGenerator));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::int64_t d = 0;
  for (auto g : gens) d = std::gcd(d, g);
  if (d != 1) {
    throw Error(Errc::kNotCofinite, "gcd must be 1 (generators have gcd " + std::to_string(d) + ")");
  }

  NumericalSemigroup s;
  s.apery_ = apery_by_residues(gens);
  const auto m = gens.front();

  // n is a sum of two nonzero elements iff n - g lies in S for some smaller
  // listed generator g.
  for (auto n : gens) {
    bool decomposable = false;
    for (auto g : gens) {
      if (g >= n) break;
      if (member(s.apery_, n - g)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.generators_.push_back(n);
  }

  std::int64_t genus = 0;
  for (std::int64_t r = 1; r < m; ++r) genus += (s.apery_[static_cast<std::size_t>(r)] - r) / m;
  if (genus > kMaxNumericalGenus) {
    throw Error(Errc::kRangeExceeded, "genus " + std::to_string(genus) + " exceeds " +
                                          std::to_string(kMaxNumericalGenus));
  }
  s.gaps_.reserve(static_cast<std::size_t>(genus));
  for (std::int64_t r = 1; r < m; ++r) {
    for (auto x = r; x < s.apery_[static_cast<std::size_t>(r)]; x += m) s.gaps_.push_back(x);
  }
  std::sort(s.gaps_.begin(), s.gaps_.end());
  return s;
}

bool NumericalSemigroup::contains(std::int64_t x) const noexcept { return member(apery_, x); }

std::vector<std::int64_t> pseudo_frobenius(const NumericalSemigroup& s) {
  std::vector<std::int64_t> out;
  const auto ap = s.apery();
  const auto m = s.multiplicity();
  for (auto w : ap) {
    if (w == 0) continue;
    const bool maximal = std::none_of(ap.begin(), ap.end(), [&](std::int64_t v) {
      return v > w && s.contains(v - w);
    });
    if (maximal) out.push_back(w - m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> special_gaps(const NumericalSemigroup& s) {
  auto pf = pseudo_frobenius(s);
  std::erase_if(pf, [&](std::int64_t x) { return !s.contains(2 * x); });
  return pf;
}

InvariantRecord invariants(const NumericalSemigroup& s) {
  InvariantRecord r;
  r.dimension = 1;
  r.multiplicity = s.multiplicity();
  r.frobenius = s.frobenius();
  r.e = s.embedding_dimension();
  r.g = s.genus();
  r.t = static_cast<std::int64_t>(pseudo_frobenius(s).size());
  r.c = s.frobenius() + 1;
  r.n = r.c - r.g;
  r.tau = s.is_whole_line() ? 0 : 1;
  return r;
}

NsClassification classify(const NumericalSemigroup& s) {
  NsClassification k;
  const auto f = s.frobenius();
  const auto pf = pseudo_frobenius(s);
  const auto sg = special_gaps(s);
  k.irreducible = sg == std::vector<std::int64_t>{f};
  k.symmetric = pf == std::vector<std::int64_t>{f};
  k.pseudo_symmetric = f > 0 && f % 2 == 0 && pf == std::vector<std::int64_t>{f / 2, f};
  k.max_embedding_dimension = s.embedding_dimension() == s.multiplicity();
  return k;
}

WilfReport wilf_check(const NumericalSemigroup& s) {
  const auto inv = invariants(s);
  return make_wilf_report(WilfVariant::kClassical, checked_mul(inv.e, inv.n), inv.c,
                          inv.e >= inv.t + 1);
}

}  // namespace gnslab
