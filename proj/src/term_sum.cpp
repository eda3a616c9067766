// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/term_sum.hpp"

namespace rado {

TermSum::TermSum(const Polynomial& p) {
  for (const auto& m : p.monomials()) add(m);
}

void TermSum::add(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

TermSum& TermSum::operator+=(const TermSum& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

TermSum TermSum::operator-(const TermSum& o) const {
  TermSum out = *this;
  for (const auto& [e, c] : o.terms_) out.add(e, -c);
  return out;
}

BigInt TermSum::constant() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? BigInt(0) : it->second;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out{a.coefficient * b.coefficient, a.exponents};
  for (const auto& [v, k] : b.exponents) out.exponents[v] += k;
  return out;
}

Monomial power(const Monomial& m, unsigned e) {
  Monomial out{0, {}};
  mpz_pow_ui(out.coefficient.get_mpz_t(), m.coefficient.get_mpz_t(), e);
  if (e == 0) return out;
  for (const auto& [v, k] : m.exponents) out.exponents[v] = k * e;
  return out;
}

TermSum substitute(const Polynomial& p, const std::map<Variable, Monomial>& images) {
  TermSum out;
  for (const auto& m : p.monomials()) {
    Monomial acc{m.coefficient, {}};
    for (const auto& [v, k] : m.exponents) {
      auto it = images.find(v);
      if (it == images.end()) {
        acc.exponents[v] += k;
      } else {
        acc = multiply(acc, power(it->second, k));
      }
    }
    // images may carry zero coefficients; drop exponents of vanished terms
    if (acc.coefficient == 0) continue;
    out.add(acc);
  }
  return out;
}

}  // namespace rado
