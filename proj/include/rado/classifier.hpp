// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Partition-regularity classification.
//
// Each classify_* entry point checks the hypotheses of one known
// condition and either returns a Verdict with a re-checkable certificate or
// nothing (leaving a reason in the optional trace). classify() runs them in
// a fixed order and falls back to Unknown.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rado/polynomial.hpp"
#include "rado/subset_sum.hpp"

namespace rado {

enum class Status { PartitionRegular, NotPartitionRegular, Unknown };
enum class Injectivity { Yes, No, Unknown };
enum class Ring { Naturals, Integers };

enum class Theorem {
  None,
  RadoLinear,            // linear: zero-sum subset, equivalence
  LinearNecessity,       // linear: no zero-sum subset
  RadoAffine,            // linear plus nonzero constant, equivalence
  MultiplicativeRado,    // prod x^a - prod y^b with equal subset sums
  ProductLift,           // l.e.v. with exclusive variables and Rado's Condition
  NonlinearLift,         // m_i degree-1 exclusive variables per monomial
  TwoMonomial,           // D*(Q1 - Q2) reduction
  HomogeneousNecessity,  // homogeneous without Rado's Condition
  UnitSolution,          // coefficients sum to zero, so (1, ..., 1) solves P
  NegationTransform,     // integers: P(-x) or P itself is PR on N
};

struct Certificate;

struct SubsetPayload {
  std::vector<BigInt> coefficients;
  IndexSet subset;  // J
};

struct NecessityPayload {
  std::vector<BigInt> coefficients;
  unsigned degree = 1;
};

struct AffinePayload {
  std::vector<BigInt> coefficients;
  BigInt constant;
  std::optional<BigInt> diagonal_root;  // t with P(t, ..., t) = 0
  std::optional<IndexSet> subset;
};

struct MultiplicativePayload {
  std::vector<Variable> left;
  std::vector<BigInt> left_exponents;
  std::vector<Variable> right;
  std::vector<BigInt> right_exponents;
  std::optional<EqualSums> sums;  // I1, I2; absent when no equal sums exist
};

struct UnitPayload {
  std::vector<BigInt> coefficients;
};

/// P = sum a_i x_i Q_{F_i}(y) after renaming.
struct ProductLiftPayload {
  std::vector<Variable> linear;        // x_i, one exclusive variable per monomial
  std::vector<Variable> product;       // y_1..y_m
  std::vector<IndexSet> families;      // F_i as indices into `product`
  IndexSet subset;                     // J
};

struct NonlinearLiftPayload {
  std::vector<std::vector<Variable>> exclusive;  // x_{i,1..m_i}
  std::vector<Variable> nonlinear;               // y_1..y_h = NL(P)
  std::vector<Variable> remaining;               // z_1..z_r
  std::vector<unsigned> levels;
  std::vector<unsigned> multiplicities;
  IndexSet subset;
};

struct TwoMonomialPayload {
  BigInt scale;       // P = scale * D * (Q1 - Q2)
  Exponents common;   // D
  Exponents left;     // Q1
  Exponents right;    // Q2
  bool difference_of_variables = false;
  std::shared_ptr<const Certificate> reduced;  // certificate for R = Q1 - Q2
};

struct NegationPayload {
  std::map<Variable, int> signs;
  std::string transformed;
  std::shared_ptr<const Certificate> inner;
};

using Payload = std::variant<std::monostate, SubsetPayload, NecessityPayload, AffinePayload,
                             MultiplicativePayload, UnitPayload, ProductLiftPayload,
                             NonlinearLiftPayload, TwoMonomialPayload, NegationPayload>;

struct Certificate {
  Theorem theorem = Theorem::None;
  Payload payload;
};

struct Verdict {
  Status status = Status::Unknown;
  Injectivity injective = Injectivity::Unknown;
  Certificate certificate;
  std::vector<std::string> trace;
  std::vector<std::string> notes;
};

using Trace = std::vector<std::string>;

class NotLinear : public Error {
 public:
  NotLinear() : Error("polynomial is not linear") {}
};
class NoConstantTerm : public Error {
 public:
  NoConstantTerm() : Error("polynomial has no constant term; use the linear classifier") {}
};
class NotLEV : public Error {
 public:
  NotLEV() : Error("polynomial is not linear in each variable") {}
};
class NotTwoMonomials : public Error {
 public:
  NotTwoMonomials() : Error("polynomial does not have exactly two monomials") {}
};

/// Per monomial, the variables occurring in that monomial and no other.
struct ExclusiveAssignment {
  std::vector<std::vector<Variable>> exclusive;
  std::vector<std::vector<Variable>> degree_one;  // the exclusive ones with exponent 1

  bool complete() const;
};

ExclusiveAssignment exclusive_table(const Polynomial& p);
/// The table when every monomial has an exclusive variable.
std::optional<ExclusiveAssignment> exclusive_variables(const Polynomial& p);

Verdict classify_linear(const Polynomial& p);
Verdict classify_affine(const AffineForm& f);
std::optional<Verdict> classify_multiplicative(const Polynomial& p, Trace* trace = nullptr);
std::optional<Verdict> classify_lev(const Polynomial& p, Trace* trace = nullptr);
std::optional<Verdict> classify_nonlinear(const Polynomial& p, Trace* trace = nullptr);
std::optional<Verdict> classify_two_monomial(const Polynomial& p, Trace* trace = nullptr);

Verdict classify(const Polynomial& p, Ring ring = Ring::Naturals);

std::string to_string(Status s);
std::string to_string(Injectivity i);
std::string to_string(Theorem t);
std::optional<Status> parse_status(std::string_view s);
std::optional<Injectivity> parse_injectivity(std::string_view s);
std::optional<Theorem> parse_theorem(std::string_view s);

/// P(-x_1, ..., -x_n): monomials of odd total degree change sign.
Polynomial negated(const Polynomial& p);

}  // namespace rado
