// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Slow, obviously-correct reference implementations used only by tests.
// None of these call into the code they are compared against.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rado/polynomial.hpp"
#include "rado/witness.hpp"

namespace rado::oracle {

/// Smallest nonempty subset with the given sum, ties broken by the
/// lexicographically smallest sorted index list. Plain bitmask scan.
inline std::optional<std::vector<std::size_t>> subset_with_sum(const std::vector<BigInt>& a,
                                                               const BigInt& target) {
  const std::size_t k = a.size();
  std::optional<std::vector<std::size_t>> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    BigInt s = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        s += a[i];
        idx.push_back(i);
      }
    }
    if (s != target) continue;
    if (!best || idx.size() < best->size() || (idx.size() == best->size() && idx < *best)) {
      best = idx;
    }
  }
  return best;
}

/// Every point of [1..N]^n checked with evaluate(), variables in name order.
inline std::vector<Tuple> grid_solutions(const Polynomial& p, std::uint32_t n, bool injective) {
  const auto& vars = p.variables();
  std::vector<Tuple> out;
  Tuple x(vars.size(), 1);
  Assignment a;
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = x[i];
    if (evaluate(p, a) == 0) {
      Tuple s = x;
      std::sort(s.begin(), s.end());
      if (!injective || std::adjacent_find(s.begin(), s.end()) == s.end()) out.push_back(x);
    }
    std::size_t k = x.size();
    while (k > 0 && x[k - 1] == n) x[--k] = 1;
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

/// Whether some r-coloring of [1..N] leaves every solution non-monochromatic,
/// by enumerating all r^N colorings.
inline bool bad_coloring_exists(const std::vector<Tuple>& solutions, unsigned r, std::uint32_t n) {
  std::vector<unsigned> c(n + 1, 0);
  for (;;) {
    bool bad = true;
    for (const auto& s : solutions) {
      if (std::all_of(s.begin(), s.end(), [&](std::uint32_t v) { return c[v] == c[s[0]]; })) {
        bad = false;
        break;
      }
    }
    if (bad) return true;
    std::uint32_t k = n;
    while (k > 0 && c[k] == r - 1) c[k--] = 0;
    if (k == 0) return false;
    ++c[k];
  }
}

/// Smallest N <= max_n with no bad coloring, by full enumeration.
inline std::optional<std::uint32_t> threshold(const Polynomial& p, unsigned r, std::uint32_t max_n,
                                              bool injective) {
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    if (!bad_coloring_exists(grid_solutions(p, n, injective), r, n)) return n;
  }
  return std::nullopt;
}

}  // namespace rado::oracle
