#include "gnslab/gns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <unordered_set>

namespace gnslab {
namespace {

constexpr std::uint64_t kDenseIndexLimit = std::uint64_t{1} << 26;

// Calls f(u) for every u <= x (componentwise) with lo <= |u| <= hi, last
// coordinate fastest. Stops and returns true as soon as f returns true.
template <class F>
bool for_each_below(const Point& x, std::int64_t lo, std::int64_t hi, F&& f) {
  const int d = x.dim();
  Point u(d);
  std::int64_t norm = 0;
  while (true) {
    if (norm >= lo && norm <= hi && f(u)) return true;
    int i = d - 1;
    for (; i >= 0; --i) {
      if (u[i] < x[i] && norm < hi) {
        u.set(i, u[i] + 1);
        ++norm;
        break;
      }
      norm -= u[i];
      u.set(i, 0);
    }
    if (i < 0) return false;
  }
}

// Every point of N^d with norm <= bound.
template <class F>
void for_each_up_to_norm(int d, std::int64_t bound, F&& f) {
  Point box(d);
  for (int i = 0; i < d; ++i) box.set(i, bound);
  for_each_below(box, 0, bound, [&](const Point& u) {
    f(u);
    return false;
  });
}

}  // namespace

// ---------------------------------------------------------------------------

class Gns::Index {
 public:
  Index(int dim, const PointSet& gaps) : dim_(dim) {
    std::uint64_t volume = 1;
    for (const auto& h : gaps) {
      max_norm_ = std::max(max_norm_, h.norm());
      for (int i = 0; i < dim; ++i) extent_[i] = std::max<std::int64_t>(extent_[i], h[i]);
    }
    for (int i = dim - 1; i >= 0; --i) {
      stride_[i] = static_cast<std::int64_t>(volume);
      volume *= static_cast<std::uint64_t>(extent_[i] + 1);
      if (volume > kDenseIndexLimit) break;
    }
    dense_ = volume <= kDenseIndexLimit;
    if (dense_) {
      bits_.assign((volume + 63) / 64, 0);
      for (const auto& h : gaps) {
        const auto k = static_cast<std::uint64_t>(offset(h));
        bits_[k / 64] |= std::uint64_t{1} << (k % 64);
      }
    } else {
      sparse_.reserve(gaps.size());
      sparse_.insert(gaps.begin(), gaps.end());
    }
  }

  bool dense() const noexcept { return dense_; }

  // Looks for u <= x with lo <= |u| <= hi such that u and x - u are both
  // in S. Dense index only. Offsets of u and x - u are updated incrementally
  // as the odometer moves; a point outside the gaps' bounding box is in S.
  bool find_split(const Point& x, std::int64_t lo, std::int64_t hi, Point& witness) const noexcept {
    const int d = dim_;
    std::array<std::int64_t, kMaxDimension> u{}, v{};
    std::int64_t off_u = 0, off_v = 0, norm_u = 0, norm_x = 0;
    int u_out = 0, v_out = 0;
    for (int i = 0; i < d; ++i) {
      v[i] = x[i];
      norm_x += x[i];
      if (v[i] > extent_[i]) ++v_out;
      // linear form even outside the box; only read when v_out == 0
      off_v += v[i] * stride_[i];
    }

    auto in_s = [&](std::int64_t norm, int out, std::int64_t off) {
      if (out > 0 || norm > max_norm_) return true;
      const auto k = static_cast<std::uint64_t>(off);
      return ((bits_[k / 64] >> (k % 64)) & 1U) == 0;
    };
    while (true) {
      if (norm_u >= lo && in_s(norm_u, u_out, off_u) && in_s(norm_x - norm_u, v_out, off_v)) {
        witness = Point(d);
        for (int i = 0; i < d; ++i) witness.set(i, u[i]);
        return true;
      }
      int i = d - 1;
      for (; i >= 0; --i) {
        if (u[i] < x[i] && norm_u < hi) {
          if (u[i] == extent_[i]) ++u_out;
          if (v[i] == extent_[i] + 1) --v_out;
          ++u[i];
          --v[i];
          ++norm_u;
          off_u += stride_[i];
          off_v -= stride_[i];
          break;
        }
        if (u[i] > extent_[i]) --u_out;
        if (v[i] <= extent_[i] && x[i] > extent_[i]) ++v_out;
        norm_u -= u[i];
        off_u -= u[i] * stride_[i];
        off_v += u[i] * stride_[i];
        v[i] = x[i];
        u[i] = 0;
      }
      if (i < 0) return false;
    }
  }

  // Bitmap over the bounding box of the points lying below some gap.
  std::vector<std::uint64_t> down_closure() const {
    std::vector<std::uint64_t> closure(bits_.size(), 0);
    std::uint64_t volume = 1;
    for (int i = 0; i < dim_; ++i) volume *= static_cast<std::uint64_t>(extent_[i] + 1);
    // offsets decrease along every coordinate, so p + e_i is settled before p
    std::array<std::int64_t, kMaxDimension> p{};
    for (int i = 0; i < dim_; ++i) p[i] = extent_[i];
    for (std::uint64_t k = volume; k-- > 0;) {
      bool in = (bits_[k / 64] >> (k % 64)) & 1U;
      for (int i = 0; i < dim_ && !in; ++i) {
        if (p[i] < extent_[i]) {
          const auto up = k + static_cast<std::uint64_t>(stride_[i]);
          in = (closure[up / 64] >> (up % 64)) & 1U;
        }
      }
      if (in) closure[k / 64] |= std::uint64_t{1} << (k % 64);
      for (int i = dim_ - 1; i >= 0; --i) {
        if (p[i] > 0) {
          --p[i];
          break;
        }
        p[i] = extent_[i];
      }
    }
    return closure;
  }

  bool in_box(const Point& x) const noexcept {
    for (int i = 0; i < dim_; ++i) {
      if (x[i] > extent_[i]) return false;
    }
    return true;
  }

  std::int64_t offset(const Point& x) const noexcept {
    std::int64_t k = 0;
    for (int i = 0; i < dim_; ++i) k += x[i] * stride_[i];
    return k;
  }

  bool is_gap(const Point& x) const noexcept {
    if (x.norm() > max_norm_ || x.is_zero()) return false;
    if (!dense_) return sparse_.contains(x);
    for (int i = 0; i < dim_; ++i) {
      if (x[i] > extent_[i]) return false;
    }
    const auto k = static_cast<std::uint64_t>(offset(x));
    return (bits_[k / 64] >> (k % 64)) & 1U;
  }

 private:

  int dim_;
  std::int64_t max_norm_ = 0;
  std::array<std::int64_t, kMaxDimension> extent_{};
  std::array<std::int64_t, kMaxDimension> stride_{};
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<Point, PointHash> sparse_;
};

NotAMonoidError::NotAMonoidError(Point lhs, Point rhs)
    : Error(Errc::kNotAMonoid, "complement is not a monoid: " + lhs.to_string() + " + " +
                                   rhs.to_string() + " = " + (lhs + rhs).to_string() +
                                   " is listed as a gap"),
      lhs_(lhs),
      rhs_(rhs) {}

Gns Gns::from_gaps(int dim, PointSet gaps) {
  if (dim < 1 || dim > kMaxDimension) {
    throw Error(Errc::kRangeExceeded, "dimension must be in [1, " + std::to_string(kMaxDimension) +
                                          "], got " + std::to_string(dim));
  }
  for (const auto& h : gaps) {
    if (h.dim() != dim) {
      throw Error(Errc::kDimensionMismatch, "gap " + h.to_string() + " is not in N^" +
                                                std::to_string(dim));
    }
    if (h.is_zero()) throw Error(Errc::kZeroGap, "0 cannot be a gap");
  }
  normalize(gaps);
  if (gaps.size() > kMaxGapCount) {
    throw Error(Errc::kRangeExceeded, "gap set larger than " + std::to_string(kMaxGapCount));
  }

  Gns s;
  s.dim_ = dim;
  s.gaps_ = std::move(gaps);
  s.index_ = std::make_shared<const Index>(dim, s.gaps_);
  s.max_gap_norm_ = s.gaps_.empty() ? 0 : s.gaps_.back().norm();

  // Smallest k with fewer than B_d(k) gaps of norm k. gaps_ is norm-sorted.
  auto it = s.gaps_.begin();
  for (std::int64_t k = 1;; ++k) {
    std::int64_t count = 0;
    while (it != s.gaps_.end() && it->norm() == k) {
      ++count;
      ++it;
    }
    if (count < binom_B(dim, k)) {
      s.min_element_norm_ = k;
      break;
    }
  }

  // A gap h = u + v with u, v in S \ {0} needs |u|, |v| >= mu.
  const auto mu = s.min_element_norm_;
  for (const auto& h : s.gaps_) {
    const auto norm = h.norm();
    if (norm < 2 * mu) continue;
    if (auto u = s.split(h)) throw NotAMonoidError(*u, h - *u);
  }
  return s;
}

std::optional<Point> Gns::split(const Point& x) const {
  const auto norm = x.norm();
  const auto mu = min_element_norm_;
  if (norm < 2 * mu) return std::nullopt;
  const auto hi = std::min(norm - mu, norm / 2);
  if (index_->dense()) {
    Point u(dim_);
    if (index_->find_split(x, mu, hi, u)) return u;
    return std::nullopt;
  }
  std::optional<Point> found;
  for_each_below(x, mu, hi, [&](const Point& u) {
    if (contains_unchecked(u) && contains_unchecked(x - u)) {
      found = u;
      return true;
    }
    return false;
  });
  return found;
}

Gns::GapClosure Gns::gap_closure() const {
  GapClosure out;
  if (gaps_.empty()) return out;
  if (index_->dense()) {
    const auto bits = index_->down_closure();
    auto in = [&](const Point& x) {
      if (!index_->in_box(x)) return false;
      const auto k = static_cast<std::uint64_t>(index_->offset(x));
      return ((bits[k / 64] >> (k % 64)) & 1U) != 0;
    };
    for (const auto& h : gaps_) {
      bool top = true;
      for (int i = 0; i < dim_ && top; ++i) {
        auto y = h;
        y.set(i, h[i] + 1);
        top = !in(y);
      }
      if (top) out.maximal.push_back(h);
    }
    for (auto word : bits) out.size += std::popcount(word);
  } else {
    // Walk gaps by decreasing norm; a gap below some other gap is below a
    // maximal one already seen.
    for (auto it = gaps_.rbegin(); it != gaps_.rend(); ++it) {
      const auto& x = *it;
      const bool dominated = std::any_of(out.maximal.begin(), out.maximal.end(),
                                         [&](const Point& y) { return leq(x, y); });
      if (!dominated) out.maximal.push_back(x);
    }
    std::unordered_set<Point, PointHash> seen(out.maximal.begin(), out.maximal.end());
    std::vector<Point> stack(out.maximal.begin(), out.maximal.end());
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        auto y = x;
        y.set(i, x[i] - 1);
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    out.size = static_cast<std::int64_t>(seen.size());
  }
  // every gap lies in the closure
  out.elements = out.size - genus();
  normalize(out.maximal);
  return out;
}

bool Gns::contains_unchecked(const Point& x) const noexcept { return !index_->is_gap(x); }

bool Gns::contains(const Point& x) const {
  if (x.dim() != dim_) {
    throw Error(Errc::kDimensionMismatch, "point " + x.to_string() + " is not in N^" +
                                              std::to_string(dim_));
  }
  return contains_unchecked(x);
}

// ---------------------------------------------------------------------------

PointSet minimal_generators(const Gns& s) {
  const auto mu = s.min_element_norm();
  const auto bound = 2 * s.max_gap_norm() + 1;
  const auto genus = s.genus();
  PointSet gens;
  for_each_up_to_norm(s.dimension(), bound, [&](const Point& x) {
    if (x.is_zero() || !s.contains_unchecked(x)) return;
    const auto norm = x.norm();
    if (norm < 2 * mu) {
      gens.push_back(x);
      return;
    }
    // Among the proper nonzero u <= x at most g have u a gap and at most g
    // have x - u a gap; with more candidates than that some split exists.
    std::int64_t candidates = 1;
    for (int i = 0; i < x.dim() && candidates <= 2 * genus + 2; ++i) candidates *= x[i] + 1;
    if (candidates - 2 > 2 * genus) return;
    if (!s.split(x)) gens.push_back(x);
  });
  normalize(gens);
  return gens;
}

PointSet pseudo_frobenius(const Gns& s, std::span<const Point> generators) {
  const auto bound = s.max_gap_norm();
  PointSet out;
  for (const auto& x : s.gaps()) {
    const auto room = bound - x.norm();
    bool pf = true;
    // generators are norm-sorted; sums beyond norm M are in S anyway
    for (const auto& g : generators) {
      if (g.norm() > room) break;
      if (!s.contains_unchecked(x + g)) {
        pf = false;
        break;
      }
    }
    if (pf) out.push_back(x);
  }
  return out;
}

PointSet pseudo_frobenius(const Gns& s) {
  const auto gens = minimal_generators(s);
  return pseudo_frobenius(s, gens);
}

PointSet special_gaps(const Gns& s, std::span<const Point> pseudo_frobenius_set) {
  PointSet out;
  for (const auto& x : pseudo_frobenius_set) {
    if (s.contains_unchecked(x + x)) out.push_back(x);
  }
  return out;
}

PointSet special_gaps(const Gns& s) {
  const auto pf = pseudo_frobenius(s);
  return special_gaps(s, pf);
}

PointSet frobenius_allowable(const Gns& s) { return s.gap_closure().maximal; }

GnsProfile analyze(const Gns& s) {
  GnsProfile p;
  p.generators = minimal_generators(s);
  p.pseudo_frobenius = pseudo_frobenius(s, p.generators);
  p.special_gaps = special_gaps(s, p.pseudo_frobenius);
  auto closure = s.gap_closure();
  p.frobenius_allowable = std::move(closure.maximal);

  auto& r = p.invariants;
  r.dimension = s.dimension();
  r.e = static_cast<std::int64_t>(p.generators.size());
  r.g = s.genus();
  r.t = static_cast<std::int64_t>(p.pseudo_frobenius.size());
  r.tau = static_cast<std::int64_t>(p.frobenius_allowable.size());
  r.n = closure.elements;
  r.c = closure.size;

  p.flags.quasi_irreducible = p.frobenius_allowable == p.special_gaps;
  p.flags.quasi_symmetric = r.tau == r.t;
  p.wilf = generalized_wilf_from(r.dimension, r.e, r.t, r.g, r.n, r.c);
  return p;
}

InvariantRecord invariants(const Gns& s) { return analyze(s).invariants; }

QuasiFlags quasi_flags(const Gns& s) {
  const auto fa = frobenius_allowable(s);
  const auto pf = pseudo_frobenius(s);
  const auto sg = special_gaps(s, pf);
  return {fa == sg, fa.size() == pf.size()};
}

GeneralizedWilf generalized_wilf(const Gns& s) { return analyze(s).wilf; }

}  // namespace gnslab
