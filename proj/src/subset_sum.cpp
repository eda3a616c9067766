// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/subset_sum.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rado {

namespace {

constexpr std::int64_t kMaxTableCells = 50'000'000;
constexpr std::uint16_t kUnreachable = std::numeric_limits<std::uint16_t>::max();

std::vector<std::int64_t> to_small(std::span<const BigInt> values, std::int64_t& abs_total) {
  BigInt total = 0;
  for (const auto& v : values) total += abs(v);
  if (!total.fits_slong_p() || values.size() >= kUnreachable) {
    throw std::length_error("subset-sum range too large: " + total.get_str());
  }
  abs_total = total.get_si();
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_si());
  return out;
}

}  // namespace

std::optional<IndexSet> smallest_subset_with_sum(std::span<const BigInt> values,
                                                 const BigInt& target) {
  const std::size_t k = values.size();
  if (k == 0) return std::nullopt;
  std::int64_t range = 0;
  const auto a = to_small(values, range);
  if (abs(target) > range) return std::nullopt;
  const std::int64_t want = target.get_si();
  const std::int64_t width = 2 * range + 1;
  if (width * static_cast<std::int64_t>(k + 1) > kMaxTableCells) {
    throw std::length_error("subset-sum table too large");
  }
  // fewest[i][s + range]: fewest elements of a[i..k) summing to s (0 for s = 0).
  std::vector<std::vector<std::uint16_t>> fewest(k + 1, std::vector<std::uint16_t>(width, kUnreachable));
  fewest[k][range] = 0;
  for (std::size_t i = k; i-- > 0;) {
    const auto& next = fewest[i + 1];
    auto& cur = fewest[i];
    cur = next;
    for (std::int64_t s = -range; s <= range; ++s) {
      std::int64_t rest = s - a[i];
      if (rest < -range || rest > range) continue;
      std::uint16_t c = next[rest + range];
      if (c != kUnreachable && c + 1 < cur[s + range]) cur[s + range] = c + 1;
    }
  }
  auto with_first = [&](std::size_t i, std::int64_t t) -> std::uint16_t {
    std::int64_t rest = t - a[i];
    if (rest < -range || rest > range) return kUnreachable;
    std::uint16_t c = fewest[i + 1][rest + range];
    return c == kUnreachable ? kUnreachable : c + 1;
  };
  std::uint16_t best = kUnreachable;
  for (std::size_t i = 0; i < k; ++i) best = std::min(best, with_first(i, want));
  if (best == kUnreachable) return std::nullopt;

  // Greedy reconstruction: the earliest usable index keeps the list lexicographically smallest.
  IndexSet chosen;
  std::int64_t t = want;
  std::size_t left = best;
  for (std::size_t i = 0; i < k && left > 0; ++i) {
    if (with_first(i, t) == left) {
      chosen.push_back(i);
      t -= a[i];
      --left;
    }
  }
  return chosen;
}

std::optional<IndexSet> rado_condition(std::span<const BigInt> coefficients) {
  return smallest_subset_with_sum(coefficients, 0);
}

namespace {

std::set<std::int64_t> nonempty_sums(const std::vector<std::int64_t>& a) {
  std::set<std::int64_t> sums;
  for (std::int64_t v : a) {
    std::vector<std::int64_t> add{v};
    for (std::int64_t s : sums) add.push_back(s + v);
    sums.insert(add.begin(), add.end());
  }
  return sums;
}

}  // namespace

std::optional<EqualSums> equal_subset_sums(std::span<const BigInt> left,
                                           std::span<const BigInt> right) {
  for (const auto* side : {&left, &right}) {
    for (const auto& v : *side) {
      if (v <= 0) throw std::invalid_argument("equal_subset_sums expects positive values");
    }
  }
  std::int64_t r1 = 0, r2 = 0;
  const auto a = to_small(left, r1);
  const auto b = to_small(right, r2);
  const auto sa = nonempty_sums(a);
  const auto sb = nonempty_sums(b);
  for (std::int64_t s : sa) {
    if (!sb.contains(s)) continue;
    BigInt sum = static_cast<long>(s);
    auto i1 = smallest_subset_with_sum(left, sum);
    auto i2 = smallest_subset_with_sum(right, sum);
    return EqualSums{*i1, *i2, sum};
  }
  return std::nullopt;
}

}  // namespace rado
