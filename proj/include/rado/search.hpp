// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Finite coloring search.
//
// find_bad_coloring backtracks over colorings of [1..N], assigning colors to
// 1, 2, ..., N in order and pruning as soon as some solution of P becomes
// monochromatic. Results are finite statements only: a bad coloring at N,
// or a proof that every r-coloring of [1..N] has a monochromatic solution.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rado/polynomial.hpp"
#include "rado/witness.hpp"

namespace rado {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// colors[v - 1] is the color of v.
struct Coloring {
  std::uint32_t n = 0;
  std::vector<std::uint8_t> colors;

  std::uint8_t operator()(std::uint32_t v) const { return colors[v - 1]; }
  bool operator==(const Coloring&) const = default;
};

struct SolutionConstraint {
  Tuple values;  // variables in name order
  bool injective = false;
  bool operator==(const SolutionConstraint&) const = default;
};

enum class OutcomeKind { BadColoring, Forced, Inconclusive };

std::string to_string(OutcomeKind k);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t constraints = 0;
  std::uint64_t ms = 0;
};

struct SearchOutcome {
  OutcomeKind kind = OutcomeKind::Inconclusive;
  unsigned colors = 0;
  std::uint32_t n = 0;
  bool injective = false;
  std::optional<Coloring> coloring;  // set for BadColoring
  SearchStats stats;
};

struct SearchOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  unsigned workers = 1;
  std::uint64_t max_grid = kDefaultMaxGrid;
};

/// All solutions in [1..N], lexicographic.
std::vector<SolutionConstraint> enumerate_constraints(const Polynomial& p, std::uint32_t n,
                                                      bool injective,
                                                      std::uint64_t max_grid = kDefaultMaxGrid);

/// Colors 1 and up to 255 are accepted. The outcome is independent of
/// options.workers, statistics included (except wall time).
SearchOutcome find_bad_coloring(const Polynomial& p, unsigned colors, std::uint32_t n,
                                bool injective, const SearchOptions& options = {});

struct ThresholdResult {
  std::optional<std::uint32_t> threshold;      // smallest forced N
  std::optional<std::uint32_t> inconclusive_at;  // first N the budget did not settle
  std::vector<SearchOutcome> outcomes;         // one per N tried, in order
};

/// Smallest N <= max_n at which every coloring is forced. Stops at the first
/// inconclusive N, since a later forced N would not bound the threshold from below.
ThresholdResult rado_number(const Polynomial& p, unsigned colors, std::uint32_t max_n,
                            bool injective, const SearchOptions& options = {});

/// First constraint, in lexicographic order, whose values share one color.
std::optional<SolutionConstraint> monochromatic_solution(const Polynomial& p, const Coloring& c,
                                                         bool injective);

}  // namespace rado
