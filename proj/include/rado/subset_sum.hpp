// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Exact subset-sum decisions by dynamic programming over achievable sums.
// Selected subsets are canonical: smallest size first, then the
// lexicographically smallest sorted index list.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rado/polynomial.hpp"

namespace rado {

using IndexSet = std::vector<std::size_t>;

/// Smallest nonempty subset of `values` whose sum is `target`.
/// Throws std::length_error if the sum range is too wide for the table.
std::optional<IndexSet> smallest_subset_with_sum(std::span<const BigInt> values,
                                                 const BigInt& target);

/// Rado's Condition: a nonempty index subset with zero coefficient sum.
std::optional<IndexSet> rado_condition(std::span<const BigInt> coefficients);

struct EqualSums {
  IndexSet left;
  IndexSet right;
  BigInt sum;
};

/// Nonempty I1, I2 with equal sums; picks the smallest common sum.
/// Both lists must be positive.
std::optional<EqualSums> equal_subset_sums(std::span<const BigInt> left,
                                           std::span<const BigInt> right);

}  // namespace rado
