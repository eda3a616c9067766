// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "rado/polynomial.hpp"

namespace rado {

// Unrestricted sparse sum of monomials: may be zero or carry a constant.
// Used for symbolic identity checks, where the expected result is the
// zero polynomial, which Polynomial deliberately cannot represent.
class TermSum {
 public:
  TermSum() = default;
  explicit TermSum(const Polynomial& p);

  void add(const Exponents& e, const BigInt& c);
  void add(const Monomial& m) { add(m.exponents, m.coefficient); }

  TermSum operator-(const TermSum& o) const;
  TermSum& operator+=(const TermSum& o);

  bool is_zero() const { return terms_.empty(); }
  BigInt constant() const;
  const std::map<Exponents, BigInt, CanonicalLess>& terms() const { return terms_; }

  /// Throws EmptyPolynomial / ConstantTermError like Polynomial::from_terms.
  Polynomial to_polynomial() const;
  std::string to_string() const;

  bool operator==(const TermSum& o) const { return terms_ == o.terms_; }

 private:
  std::map<Exponents, BigInt, CanonicalLess> terms_;
};

Monomial multiply(const Monomial& a, const Monomial& b);
Monomial power(const Monomial& m, unsigned e);

/// Replaces each mapped variable by a monomial (a constant when the
/// exponent map is empty) and expands. Unmapped variables stay symbolic.
TermSum substitute(const Polynomial& p, const std::map<Variable, Monomial>& images);

}  // namespace rado
