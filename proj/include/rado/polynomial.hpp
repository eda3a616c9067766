// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Canonical multivariate integer polynomials with zero constant term.
//
// A Polynomial is an immutable, canonically ordered list of monomials with
// arbitrary-precision coefficients. Canonical order is graded
// lexicographic: ascending total degree, then lexicographic on exponent
// vectors with variables ordered by name (x before y, so x*y before x*z).
// Monomial indices used throughout the library refer to this order.

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rado {

using BigInt = mpz_class;

class TermSum;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected, std::string_view text);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class ConstantTermError : public Error {
 public:
  explicit ConstantTermError(const BigInt& constant);
  const BigInt& constant() const { return constant_; }

 private:
  BigInt constant_;
};

class EmptyPolynomial : public Error {
 public:
  EmptyPolynomial() : Error("polynomial is identically zero after cancellation") {}
};

class MissingVariable : public Error {
 public:
  explicit MissingVariable(const std::string& name)
      : Error("assignment has no value for variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A variable name: a letter followed by letters, digits or underscores.
class Variable {
 public:
  explicit Variable(std::string name);
  const std::string& name() const { return name_; }
  auto operator<=>(const Variable&) const = default;
  static bool is_valid_name(std::string_view name);

 private:
  std::string name_;
};

/// Exponent map of a monic monomial. Never holds a zero exponent.
using Exponents = std::map<Variable, unsigned>;

unsigned total_degree(const Exponents& e);

/// Three-way comparison in canonical (graded lexicographic) order.
std::strong_ordering canonical_compare(const Exponents& a, const Exponents& b);

struct CanonicalLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return canonical_compare(a, b) < 0;
  }
};

struct Monomial {
  BigInt coefficient;
  Exponents exponents;

  unsigned degree() const { return total_degree(exponents); }
  unsigned degree_in(const Variable& v) const;
  bool operator==(const Monomial& o) const {
    return coefficient == o.coefficient && exponents == o.exponents;
  }
};

class Polynomial {
 public:
  /// Combines like terms, drops zero coefficients and sorts canonically.
  /// Throws ConstantTermError or EmptyPolynomial.
  static Polynomial from_terms(std::vector<Monomial> terms);

  std::span<const Monomial> monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::size_t size() const { return monomials_.size(); }

  /// V(P), sorted by name.
  const std::vector<Variable>& variables() const { return variables_; }
  std::vector<BigInt> coefficients() const;
  /// Index of the monomial with exactly these exponents, if present.
  std::optional<std::size_t> find(const Exponents& e) const;

  bool operator==(const Polynomial& o) const { return monomials_ == o.monomials_; }

 private:
  friend class TermSum;
  Polynomial() = default;
  std::vector<Monomial> monomials_;
  std::vector<Variable> variables_;
};

/// Linear part plus a constant, for the affine classifier.
struct AffineForm {
  Polynomial terms;
  BigInt constant;
};

Polynomial parse(std::string_view text);
/// Like parse() but splits off a constant term instead of rejecting it.
AffineForm parse_with_constant(std::string_view text);

std::string to_string(const Exponents& e);
std::string print(const Polynomial& p);
std::string print(const AffineForm& f);

using Assignment = std::map<Variable, BigInt>;

BigInt evaluate(const Polynomial& p, const Assignment& values);

struct DegreeProfile {
  std::map<Variable, unsigned> degree;  // d(x), max exponent over monomials
  unsigned partial_degree = 0;
  std::vector<Variable> nonlinear;       // NL(P), sorted
  std::vector<unsigned> levels;          // l_i per monomial
  std::vector<unsigned> multiplicities;  // m_i = max(1, l_i)
};

DegreeProfile degree_profile(const Polynomial& p);

/// Red(P): one fresh linear variable y1..yk per monomial.
struct ReductForm {
  std::vector<BigInt> coefficients;
  std::vector<Variable> variables;

  Polynomial as_polynomial() const;
};

ReductForm reduct(const Polynomial& p);

/// Exponent-wise minimum of two monic monomials.
Exponents monomial_gcd(const Exponents& a, const Exponents& b);
/// a / b for b dividing a exponent-wise; throws std::invalid_argument otherwise.
Exponents monomial_quotient(const Exponents& a, const Exponents& b);
bool divides(const Exponents& divisor, const Exponents& e);

bool is_homogeneous(const Polynomial& p);
bool is_lev(const Polynomial& p);
bool is_linear(const Polynomial& p);

/// Indices of the monomials in which v occurs.
std::vector<std::size_t> support(const Polynomial& p, const Variable& v);

}  // namespace rado
