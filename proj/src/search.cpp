// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace rado {

std::string to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::BadColoring: return "bad_coloring";
    case OutcomeKind::Forced: return "forced";
    case OutcomeKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<SolutionConstraint> enumerate_constraints(const Polynomial& p, std::uint32_t n,
                                                      bool injective, std::uint64_t max_grid) {
  std::vector<SolutionConstraint> out;
  for (auto& t : solution_tuples(p, n, injective, std::numeric_limits<std::size_t>::max(),
                                 max_grid)) {
    out.push_back(SolutionConstraint{std::move(t), injective});
  }
  return out;
}

namespace {

// Distinct value sets of the constraints, grouped by their largest value.
// by_max[m] holds the other values of each set with maximum m; an empty
// entry means the set is {m}, which is monochromatic under every coloring.
struct ConstraintIndex {
  std::vector<std::vector<std::vector<std::uint32_t>>> by_max;
  std::vector<std::uint64_t> tuples_upto;  // number of tuples with max <= m

  ConstraintIndex(const std::vector<SolutionConstraint>& cs, std::uint32_t n)
      : by_max(n + 1), tuples_upto(n + 1, 0) {
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& c : cs) {
      std::vector<std::uint32_t> s(c.values.begin(), c.values.end());
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      ++tuples_upto[s.back()];
      if (!seen.insert(s).second) continue;
      const auto m = s.back();
      s.pop_back();
      by_max[m].push_back(std::move(s));
    }
    for (std::uint32_t m = 1; m <= n; ++m) tuples_upto[m] += tuples_upto[m - 1];
  }
};

enum class RootStatus { Found, Exhausted, Capped };

struct RootResult {
  RootStatus status = RootStatus::Exhausted;
  std::uint64_t nodes = 0;
  std::vector<std::uint8_t> coloring;
};

class Backtracker {
 public:
  Backtracker(const ConstraintIndex& index, unsigned colors, std::uint32_t n)
      : index_(index), colors_(colors), n_(n), color_(n + 1, 0) {}

  RootResult run(const std::vector<std::uint8_t>& prefix, std::uint64_t cap) {
    cap_ = cap;
    nodes_ = 0;
    capped_ = false;
    unsigned max_used = 0;
    for (std::uint32_t v = 1; v <= prefix.size(); ++v) {
      color_[v] = prefix[v - 1];
      max_used = std::max<unsigned>(max_used, prefix[v - 1]);
      if (!consistent(v)) return {RootStatus::Exhausted, nodes_, {}};
    }
    const bool found = dfs(static_cast<std::uint32_t>(prefix.size()) + 1, max_used);
    if (capped_) return {RootStatus::Capped, nodes_, {}};
    if (!found) return {RootStatus::Exhausted, nodes_, {}};
    return {RootStatus::Found, nodes_, {color_.begin() + 1, color_.end()}};
  }

 private:
  bool consistent(std::uint32_t v) const {
    const auto c = color_[v];
    for (const auto& others : index_.by_max[v]) {
      if (std::all_of(others.begin(), others.end(),
                      [&](std::uint32_t u) { return color_[u] == c; })) {
        return false;
      }
    }
    return true;
  }

  bool dfs(std::uint32_t v, unsigned max_used) {
    if (v > n_) return true;
    const unsigned limit = std::min(colors_ - 1, max_used + 1);
    for (unsigned c = 0; c <= limit; ++c) {
      if (++nodes_ > cap_) {
        capped_ = true;
        return false;
      }
      color_[v] = static_cast<std::uint8_t>(c);
      if (consistent(v) && dfs(v + 1, std::max(max_used, c))) return true;
      if (capped_) return false;
    }
    return false;
  }

  const ConstraintIndex& index_;
  unsigned colors_;
  std::uint32_t n_;
  std::vector<std::uint8_t> color_;
  std::uint64_t cap_ = 0;
  std::uint64_t nodes_ = 0;
  bool capped_ = false;
};

// Consistent canonical color prefixes of length `depth`: color(1) = 0, each
// new color is one more than the largest so far, and no constraint inside
// the prefix is monochromatic. Counts one node per color tried.
class PrefixEnumerator {
 public:
  PrefixEnumerator(const ConstraintIndex& index, unsigned colors, std::uint32_t depth)
      : index_(index), colors_(colors), depth_(depth), color_(depth + 1, 0) {}

  std::vector<std::vector<std::uint8_t>> run() {
    out_.clear();
    nodes_ = 0;
    dfs(1, 0);
    return std::move(out_);
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs(std::uint32_t v, unsigned max_used) {
    if (v > depth_) {
      out_.emplace_back(color_.begin() + 1, color_.end());
      return;
    }
    const unsigned limit = v == 1 ? 0 : std::min(colors_ - 1, max_used + 1);
    for (unsigned c = 0; c <= limit; ++c) {
      ++nodes_;
      color_[v] = static_cast<std::uint8_t>(c);
      bool ok = true;
      for (const auto& others : index_.by_max[v]) {
        if (std::all_of(others.begin(), others.end(),
                        [&](std::uint32_t u) { return color_[u] == c; })) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(v + 1, std::max(max_used, c));
    }
  }

  const ConstraintIndex& index_;
  unsigned colors_;
  std::uint32_t depth_;
  std::vector<std::uint8_t> color_;
  std::vector<std::vector<std::uint8_t>> out_;
  std::uint64_t nodes_ = 0;
};

// The split depth depends only on the constraints, colors and n, never on
// the worker count.
struct Split {
  std::vector<std::vector<std::uint8_t>> roots;
  std::uint64_t nodes = 0;
};

Split split(const ConstraintIndex& index, unsigned colors, std::uint32_t n) {
  constexpr std::size_t kTargetRoots = 64;
  for (std::uint32_t depth = 1;; ++depth) {
    PrefixEnumerator e(index, colors, depth);
    Split s{e.run(), e.nodes()};
    if (s.roots.empty() || s.roots.size() >= kTargetRoots || depth >= n) return s;
  }
}

SearchOutcome search(const ConstraintIndex& index, unsigned colors, std::uint32_t n,
                     bool injective, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  out.colors = colors;
  out.n = n;
  out.injective = injective;
  out.stats.constraints = index.tuples_upto[n];

  const Split sp = split(index, colors, n);
  const auto& roots = sp.roots;
  const std::uint64_t budget = sp.nodes >= options.budget ? 0 : options.budget - sp.nodes;
  std::vector<std::optional<RootResult>> results(roots.size());
  std::mutex mu;
  std::size_t stop = roots.size();  // roots after a found or capped root are not needed
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    Backtracker bt(index, colors, n);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= roots.size()) return;
      std::uint64_t done = 0;
      {
        std::lock_guard lock(mu);
        if (i > stop) return;
        for (std::size_t j = 0; j < i; ++j) {
          if (results[j]) done += results[j]->nodes;
        }
      }
      // Earlier roots count against the budget first; `done` is a lower bound
      // on their total, so a capped root is over budget in every schedule.
      const std::uint64_t cap = done >= budget ? 0 : budget - done;
      RootResult r = bt.run(roots[i], cap);
      std::lock_guard lock(mu);
      if (r.status != RootStatus::Exhausted) stop = std::min(stop, i);
      results[i] = std::move(r);
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::uint64_t total = sp.nodes;
  out.kind = sp.nodes > options.budget ? OutcomeKind::Inconclusive : OutcomeKind::Forced;
  for (std::size_t i = 0; i < roots.size() && out.kind == OutcomeKind::Forced; ++i) {
    const RootResult& r = *results[i];
    total += r.nodes;
    if (r.status == RootStatus::Capped || total > options.budget) {
      out.kind = OutcomeKind::Inconclusive;
      break;
    }
    if (r.status == RootStatus::Found) {
      out.kind = OutcomeKind::BadColoring;
      out.coloring = Coloring{n, r.coloring};
      break;
    }
  }
  out.stats.nodes = out.kind == OutcomeKind::Inconclusive ? options.budget : total;
  out.stats.ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                std::chrono::steady_clock::now() - start)
                                                .count());

  if (out.coloring) {
    for (std::uint32_t m = 1; m <= n; ++m) {
      for (const auto& others : index.by_max[m]) {
        if (std::all_of(others.begin(), others.end(),
                        [&](std::uint32_t u) { return (*out.coloring)(u) == (*out.coloring)(m); })) {
          throw std::logic_error("search: returned coloring has a monochromatic solution");
        }
      }
    }
  }
  return out;
}

void check_colors(unsigned colors, std::uint32_t n) {
  if (colors < 1 || colors > 255) throw std::invalid_argument("colors must be in [1..255]");
  if (n < 1) throw std::invalid_argument("N must be at least 1");
}

}  // namespace

SearchOutcome find_bad_coloring(const Polynomial& p, unsigned colors, std::uint32_t n,
                                bool injective, const SearchOptions& options) {
  check_colors(colors, n);
  ConstraintIndex index(enumerate_constraints(p, n, injective, options.max_grid), n);
  return search(index, colors, n, injective, options);
}

ThresholdResult rado_number(const Polynomial& p, unsigned colors, std::uint32_t max_n,
                            bool injective, const SearchOptions& options) {
  check_colors(colors, max_n);
  // Solutions in [1..N] are exactly the solutions in [1..max_n] with max <= N.
  ConstraintIndex index(enumerate_constraints(p, max_n, injective, options.max_grid), max_n);
  ThresholdResult result;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    result.outcomes.push_back(search(index, colors, n, injective, options));
    const auto kind = result.outcomes.back().kind;
    if (kind == OutcomeKind::Forced) {
      result.threshold = n;
      break;
    }
    if (kind == OutcomeKind::Inconclusive) {
      result.inconclusive_at = n;
      break;
    }
  }
  return result;
}

std::optional<SolutionConstraint> monochromatic_solution(const Polynomial& p, const Coloring& c,
                                                         bool injective) {
  for (auto& s : enumerate_constraints(p, c.n, injective)) {
    const auto first = c(s.values.front());
    if (std::all_of(s.values.begin(), s.values.end(),
                    [&](std::uint32_t v) { return c(v) == first; })) {
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace rado
