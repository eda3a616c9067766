// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Explicit integer solutions.
//
// reduct_lift and nlp_lift turn a solution of a simpler polynomial (the
// reduct, or P with its nonlinear variables set to 1) into a solution of P
// by multiplying in products of auxiliary values. Both verify their
// algebraic identities in exact arithmetic before returning.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rado/classifier.hpp"
#include "rado/polynomial.hpp"
#include "rado/term_sum.hpp"

namespace rado {

enum class Provenance { ReductLift, NlpLift, BruteForce, Negation };

std::string to_string(Provenance p);

/// Intermediate quantities of a lift. Keys are (monomial, slot), both 0-based.
struct LiftTrace {
  BigInt eta;
  std::vector<BigInt> eta_i;
  std::map<std::pair<std::size_t, std::size_t>, BigInt> gamma;
  std::map<std::pair<std::size_t, std::size_t>, IndexSet> index_sets;
};

struct Witness {
  Assignment assignment;
  BigInt value;
  Provenance provenance = Provenance::BruteForce;
  std::optional<LiftTrace> trace;

  /// All assigned values pairwise distinct.
  bool injective() const;
};

class NoExclusiveSet : public Error {
 public:
  NoExclusiveSet() : Error("some monomial has no exclusive variable") {}
};
class NotAReductSolution : public Error {
 public:
  using Error::Error;
};
class NotAPTildeSolution : public Error {
 public:
  using Error::Error;
};
class GValuesNotDistinct : public Error {
 public:
  using Error::Error;
};
class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

/// P = sum_i a_i x_i Q_{F_i}(y_1..y_m) after renaming.
struct LevForm {
  Polynomial source;
  std::vector<BigInt> coefficients;
  std::vector<Variable> linear;    // x_i
  std::vector<Variable> product;   // y_j
  std::vector<IndexSet> families;  // F_i, indices into `product`
};

LevForm to_lev_form(const Polynomial& p, const ExclusiveAssignment& exclusives);

/// x_i := alpha_i * prod_{j not in F_i} y_j, y_j := y_values[j].
Witness reduct_lift(const LevForm& form, std::span<const BigInt> alpha,
                    std::span<const BigInt> y_values);

/// P(x(y), y) - (prod_j y_j) * (sum_i a_i alpha_i) with the y_j kept symbolic.
/// Zero for every alpha.
TermSum reduct_lift_residual(const LevForm& form, std::span<const BigInt> alpha);

/// P with every variable in `nonlinear` replaced by 1.
Polynomial reduced_polynomial(const Polynomial& p, std::span<const Variable> nonlinear);

/// Lift a solution of the reduced polynomial through the nonlinear variables.
/// `g` holds one value per variable of cert.nonlinear, pairwise distinct, each >= 2.
Witness nlp_lift(const Polynomial& p, const NonlinearLiftPayload& cert,
                 const Assignment& alpha_beta, std::span<const BigInt> g);

/// P(x(g), z, g) - eta(g) * Ptilde(alpha, beta), with g named after the
/// nonlinear variables and kept symbolic. Zero for every alpha_beta.
TermSum nlp_lift_residual(const Polynomial& p, const NonlinearLiftPayload& cert,
                          const Assignment& alpha_beta);

struct NegatedWitness {
  Polynomial polynomial;  // P(-x)
  Witness witness;
};

NegatedWitness negate_transform(const Polynomial& p, const Witness& w);

/// A positive solution of sum a_i alpha_i = 0. Prefers values >= 2 that are
/// pairwise distinct, searching [1..bound]^k, then falls back to a direct
/// construction from a zero-sum subset. None when Rado's Condition fails.
std::optional<std::vector<BigInt>> find_reduct_solution(std::span<const BigInt> coefficients,
                                                        unsigned bound = 20);

/// `count` distinct primes, all greater than `above`.
std::vector<BigInt> primes_above(const BigInt& above, std::size_t count);

/// Complete witness pipelines used by the CLI.
Witness lev_witness(const Polynomial& p, unsigned bound = 20);
Witness nlp_witness(const Polynomial& p, const NonlinearLiftPayload& cert, unsigned bound = 20);

using Tuple = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultMaxGrid = 50'000'000;

/// Solutions of P = 0 in [1..N]^|V(P)|, variables in name order, listed
/// lexicographically. A variable occurring in a single monomial is solved
/// for instead of enumerated.
std::vector<Tuple> solution_tuples(const Polynomial& p, std::uint32_t n, bool injective,
                                   std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                   std::uint64_t max_grid = kDefaultMaxGrid);

std::vector<Witness> brute_force_solutions(
    const Polynomial& p, std::uint32_t n, bool injective,
    std::size_t limit = std::numeric_limits<std::size_t>::max(),
    std::uint64_t max_grid = kDefaultMaxGrid);

}  // namespace rado
