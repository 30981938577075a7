#include "gnslab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>

#include "gnslab/error.hpp"

namespace gnslab {

// ---------------------------------------------------------------------------
// EnumFrame

EnumFrame EnumFrame::root() { return ordinary(1); }

EnumFrame EnumFrame::ordinary(int m) {
  if (m < 1 || m > kMaxEnumGenus + 1) {
    throw Error(Errc::kRangeExceeded, "ordinary semigroup multiplicity out of range");
  }
  EnumFrame f;
  f.multiplicity_ = m;
  f.frobenius_ = m - 1 == 0 ? -1 : m - 1;
  f.genus_ = m - 1;
  auto in = [m](int a) { return a == 0 || a >= m; };
  for (int y = 0; y < kFrameWidth; ++y) {
    int count = 0;
    for (int a = 0; 2 * a <= y; ++a) {
      if (in(a) && in(y - a)) ++count;
    }
    f.decompositions_[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(count);
  }
  return f;
}

std::vector<int> EnumFrame::effective_generators() const {
  std::vector<int> out;
  const int hi = genus_ == 0 ? 1 : std::min(frobenius_ + multiplicity_, kFrameWidth - 1);
  for (int y = std::max(frobenius_ + 1, 1); y <= hi; ++y) {
    if (decompositions_[static_cast<std::size_t>(y)] == 1) out.push_back(y);
  }
  return out;
}

std::vector<int> EnumFrame::minimal_generators() const {
  std::vector<int> out;
  const int hi = genus_ == 0 ? 1 : std::min(frobenius_ + multiplicity_, kFrameWidth - 1);
  for (int y = multiplicity_; y <= hi; ++y) {
    if (decompositions_[static_cast<std::size_t>(y)] == 1) out.push_back(y);
  }
  return out;
}

int EnumFrame::embedding_dimension() const {
  return static_cast<int>(minimal_generators().size());
}

namespace {

int type_given(const EnumFrame& f, const std::vector<int>& gens) {
  int t = 0;
  for (int x = 1; x <= f.frobenius(); ++x) {
    if (f.contains(x)) continue;
    const bool pf = std::all_of(gens.begin(), gens.end(), [&](int g) { return f.contains(x + g); });
    if (pf) ++t;
  }
  return t;
}

}  // namespace

int EnumFrame::type() const { return type_given(*this, minimal_generators()); }

int EnumFrame::margin() const {
  const auto gens = minimal_generators();
  return multiplicity_ + static_cast<int>(gens.size()) - 2 * (type_given(*this, gens) + 1);
}

EnumFrame EnumFrame::child(int x) const {
  if (x <= frobenius_ || x >= kFrameWidth || decompositions_[static_cast<std::size_t>(x)] != 1) {
    throw Error(Errc::kInvalidArgument,
                std::to_string(x) + " is not an effective generator of this frame");
  }
  EnumFrame c = *this;
  // drop every pair {x, y - x}
  for (int y = x; y < kFrameWidth; ++y) {
    if (contains(y - x)) --c.decompositions_[static_cast<std::size_t>(y)];
  }
  c.frobenius_ = x;
  c.genus_ = genus_ + 1;
  if (x == multiplicity_) c.multiplicity_ = x + 1;
  return c;
}

NumericalSemigroup EnumFrame::to_semigroup() const {
  const auto gens = minimal_generators();
  std::vector<std::int64_t> wide(gens.begin(), gens.end());
  return NumericalSemigroup::from_generators(wide);
}

// ---------------------------------------------------------------------------
// Tree driver

namespace {

class Progress {
 public:
  explicit Progress(const EnumOptions& o)
      : enabled_(o.progress), os_(o.progress_stream ? *o.progress_stream : std::cerr) {}

  template <class... Args>
  void line(const Args&... args) {
    if (!enabled_) return;
    std::lock_guard lock(mu_);
    os_ << "[enum]";
    ((os_ << ' ' << args), ...);
    os_ << '\n' << std::flush;
  }

  bool enabled() const { return enabled_; }

 private:
  bool enabled_;
  std::ostream& os_;
  std::mutex mu_;
};

// Depth-first below `start`, never removing `protected_gen`.
template <class Acc, class Visit>
void dfs(const EnumFrame& start, int g_max, int protected_gen, Acc& acc, Visit& visit,
         std::uint64_t& frames) {
  std::vector<EnumFrame> stack{start};
  while (!stack.empty()) {
    const EnumFrame f = stack.back();
    stack.pop_back();
    visit(acc, f);
    ++frames;
    if (f.genus() >= g_max) continue;
    const auto kids = f.effective_generators();
    // push in reverse so children are visited in increasing order
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (*it != protected_gen) stack.push_back(f.child(*it));
    }
  }
}

// The tree is walked breadth-first on the calling thread down to a split
// genus; the frames found there become independent tasks handed to workers.
// Each worker folds into its own accumulator; accumulators are merged at the
// end with an associative, commutative `merge`.
template <class Acc, class Visit, class Merge>
Acc run_tree(const EnumFrame& start, int g_max, int protected_gen, const EnumOptions& options,
             Acc init, Visit visit, Merge merge) {
  Progress progress(options);
  Acc total = init;
  std::uint64_t frames = 0;
  const int threads = std::max(1, options.threads);

  std::vector<EnumFrame> frontier{start};
  int level = start.genus();
  if (threads > 1 || options.split_genus >= 0) {
    const int split = options.split_genus >= 0 ? std::clamp(options.split_genus, level, g_max) : g_max;
    const std::size_t wanted = options.split_genus >= 0 ? SIZE_MAX : 8 * static_cast<std::size_t>(threads);
    while (level < split && !frontier.empty() && frontier.size() < wanted) {
      std::vector<EnumFrame> next;
      for (const auto& f : frontier) {
        visit(total, f);
        ++frames;
        for (int x : f.effective_generators()) {
          if (x != protected_gen) next.push_back(f.child(x));
        }
      }
      frontier = std::move(next);
      ++level;
      progress.line("genus", level, "frontier", frontier.size(), "frames", frames);
    }
  }

  const std::size_t tasks = frontier.size();
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), tasks);
  if (workers <= 1) {
    for (const auto& f : frontier) dfs(f, g_max, protected_gen, total, visit, frames);
    progress.line("done frames", frames);
    return total;
  }

  progress.line("split genus", level, "subtrees", tasks, "workers", workers);
  std::vector<Acc> partial(workers, init);
  std::vector<std::uint64_t> partial_frames(workers, 0);
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> finished{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (;;) {
          const auto k = next_task.fetch_add(1);
          if (k >= tasks) break;
          dfs(frontier[k], g_max, protected_gen, partial[w], visit, partial_frames[w]);
          const auto done = finished.fetch_add(1) + 1;
          if (progress.enabled() && (done * 20 / tasks != (done - 1) * 20 / tasks)) {
            progress.line("subtrees", done, "/", tasks);
          }
        }
      });
    }
  }
  for (std::size_t w = 0; w < workers; ++w) {
    merge(total, partial[w]);
    frames += partial_frames[w];
  }
  progress.line("done frames", frames);
  return total;
}

void check_genus_bound(int g_max) {
  if (g_max < 0 || g_max > kMaxEnumGenus) {
    throw Error(Errc::kRangeExceeded, "genus bound must be in [0, " +
                                          std::to_string(kMaxEnumGenus) + "], got " +
                                          std::to_string(g_max));
  }
}

std::vector<std::int64_t> widen(const std::vector<int>& v) { return {v.begin(), v.end()}; }

void add_counts(GenusCounts& into, const GenusCounts& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

}  // namespace

GenusCounts enumerate_by_genus(int g_max, const EnumOptions& options,
                               const std::function<void(const EnumFrame&)>& visitor) {
  check_genus_bound(g_max);
  return run_tree(
      EnumFrame::root(), g_max, 0, options, GenusCounts(static_cast<std::size_t>(g_max) + 1, 0),
      [&](GenusCounts& acc, const EnumFrame& f) {
        ++acc[static_cast<std::size_t>(f.genus())];
        if (visitor) visitor(f);
      },
      add_counts);
}

MetScan scan_met_inequality(int g_max, const EnumOptions& options) {
  check_genus_bound(g_max);
  MetScan init{GenusCounts(static_cast<std::size_t>(g_max) + 1, 0), {}};
  auto scan = run_tree(
      EnumFrame::root(), g_max, 0, options, init,
      [](MetScan& acc, const EnumFrame& f) {
        ++acc.counts[static_cast<std::size_t>(f.genus())];
        const auto gens = f.minimal_generators();
        const int e = static_cast<int>(gens.size());
        const int t = type_given(f, gens);
        const int margin = f.multiplicity() + e - 2 * (t + 1);
        if (margin < 0) {
          acc.violations.push_back({widen(gens), f.genus(), f.multiplicity(), e, t, margin});
        }
      },
      [](MetScan& into, const MetScan& from) {
        add_counts(into.counts, from.counts);
        into.violations.insert(into.violations.end(), from.violations.begin(),
                               from.violations.end());
      });
  std::sort(scan.violations.begin(), scan.violations.end());
  return scan;
}

bool gm_scan_is_long_run(int m, int genus_bound) { return m >= 14 && genus_bound > m + 6; }

GmScanResult gm_scan(int m, int genus_bound, const GmScanOptions& options) {
  if (m < 2) throw Error(Errc::kDomainError, "multiplicity must be at least 2");
  if (genus_bound < m - 1) {
    throw Error(Errc::kInfeasibleBound, "genus bound " + std::to_string(genus_bound) +
                                            " is below m - 1 = " + std::to_string(m - 1) +
                                            "; no semigroup of multiplicity " +
                                            std::to_string(m) + " qualifies");
  }
  check_genus_bound(genus_bound);
  if (gm_scan_is_long_run(m, genus_bound) && !options.allow_long_run) {
    throw Error(Errc::kRangeExceeded, "multiplicity " + std::to_string(m) + " with genus bound " +
                                          std::to_string(genus_bound) +
                                          " is a long run; allow it explicitly");
  }

  struct Acc {
    std::uint64_t count = 0;
    int min_margin = INT_MAX;
    std::vector<int> witness;
  };
  auto better = [](int margin, const std::vector<int>& gens, const Acc& acc) {
    return margin < acc.min_margin || (margin == acc.min_margin && gens < acc.witness);
  };
  const auto acc = run_tree(
      EnumFrame::ordinary(m), genus_bound, m, options, Acc{},
      [&](Acc& a, const EnumFrame& f) {
        ++a.count;
        auto gens = f.minimal_generators();
        const int margin =
            f.multiplicity() + static_cast<int>(gens.size()) - 2 * (type_given(f, gens) + 1);
        if (better(margin, gens, a)) {
          a.min_margin = margin;
          a.witness = std::move(gens);
        }
      },
      [&](Acc& into, const Acc& from) {
        into.count += from.count;
        if (from.count > 0 && better(from.min_margin, from.witness, into)) {
          into.min_margin = from.min_margin;
          into.witness = from.witness;
        }
      });

  GmScanResult r;
  r.multiplicity = m;
  r.genus_bound = genus_bound;
  r.min_margin = acc.min_margin;
  r.witness = widen(acc.witness);
  r.scanned_count = acc.count;
  return r;
}

std::int64_t margin_of(const NumericalSemigroup& s) {
  const auto inv = invariants(s);
  return *inv.multiplicity + inv.e - 2 * (inv.t + 1);
}

}  // namespace gnslab
