// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Certificate replay: re-checks the hypotheses a certificate claims, directly
// from the monomials, without calling the classifier. Returns an empty
// string when the certificate holds, otherwise the first failed check.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "rado/classifier.hpp"

namespace rado::replay {

namespace detail {

inline unsigned deg(const Monomial& m, const Variable& v) {
  auto it = m.exponents.find(v);
  return it == m.exponents.end() ? 0 : it->second;
}

inline std::size_t occurrences(const Polynomial& p, const Variable& v) {
  std::size_t n = 0;
  for (const auto& m : p.monomials()) n += m.exponents.contains(v);
  return n;
}

inline bool zero_sum(const Polynomial& p, const IndexSet& j) {
  if (j.empty() || !std::is_sorted(j.begin(), j.end())) return false;
  if (std::adjacent_find(j.begin(), j.end()) != j.end() || j.back() >= p.size()) return false;
  BigInt s = 0;
  for (auto i : j) s += p[i].coefficient;
  return s == 0;
}

inline bool coefficients_match(const Polynomial& p, const std::vector<BigInt>& c) {
  if (c.size() != p.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].coefficient != c[i]) return false;
  }
  return true;
}

inline unsigned max_degree(const Polynomial& p, const Variable& v) {
  unsigned d = 0;
  for (const auto& m : p.monomials()) d = std::max(d, deg(m, v));
  return d;
}

inline std::string check(const Polynomial& p, const Certificate& c);

inline std::string check_product_lift(const Polynomial& p, const ProductLiftPayload& c) {
  if (c.linear.size() != p.size() || c.families.size() != p.size()) return "sizes";
  for (const auto& v : p.variables()) {
    if (max_degree(p, v) > 1) return "not linear in " + v.name();
  }
  std::set<Variable> xs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& x = c.linear[i];
    if (deg(p[i], x) != 1 || occurrences(p, x) != 1) return x.name() + " is not exclusive";
    xs.insert(x);
  }
  std::vector<Variable> ys;
  for (const auto& v : p.variables()) {
    if (!xs.contains(v)) ys.push_back(v);
  }
  if (ys != c.product) return "product variables differ";
  for (std::size_t i = 0; i < p.size(); ++i) {
    IndexSet f;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (p[i].exponents.contains(ys[j])) f.push_back(j);
    }
    if (f != c.families[i]) return "F_" + std::to_string(i + 1) + " differs";
  }
  if (p.size() == 2 && c.families[0].empty() && c.families[1].empty()) {
    return "two monomials need a product variable";
  }
  if (!zero_sum(p, c.subset)) return "J is not a zero-sum subset";
  return {};
}

inline std::string check_nonlinear_lift(const Polynomial& p, const NonlinearLiftPayload& c) {
  if (c.exclusive.size() != p.size()) return "sizes";
  std::vector<Variable> nl;
  for (const auto& v : p.variables()) {
    if (max_degree(p, v) >= 2) nl.push_back(v);
  }
  if (nl != c.nonlinear || nl.empty()) return "NL differs";
  std::set<Variable> used(nl.begin(), nl.end());
  for (std::size_t i = 0; i < p.size(); ++i) {
    unsigned l = 0;
    for (const auto& y : nl) l = std::max(l, max_degree(p, y) - deg(p[i], y));
    if (c.levels[i] != l || c.multiplicities[i] != std::max(1u, l)) return "l or m differs";
    if (c.exclusive[i].size() != std::max(1u, l)) return "wrong number of exclusive variables";
    for (const auto& x : c.exclusive[i]) {
      if (deg(p[i], x) != 1 || occurrences(p, x) != 1) return x.name() + " is not exclusive";
      if (!used.insert(x).second) return x.name() + " used twice";
    }
  }
  std::vector<Variable> rest;
  for (const auto& v : p.variables()) {
    if (!used.contains(v)) rest.push_back(v);
  }
  if (rest != c.remaining) return "remaining variables differ";
  if (!zero_sum(p, c.subset)) return "J is not a zero-sum subset";
  return {};
}

inline std::string check_two_monomial(const Polynomial& p, const TwoMonomialPayload& c) {
  if (p.size() != 2) return "not two monomials";
  if (p[0].coefficient != c.scale || p[1].coefficient != -c.scale) return "coefficients";
  Exponents d;
  for (const auto& [v, e] : p[0].exponents) {
    unsigned f = deg(p[1], v);
    if (f) d[v] = std::min(e, f);
  }
  if (d != c.common) return "D is not the gcd";
  for (int s = 0; s < 2; ++s) {
    Exponents q = p[s].exponents;
    for (const auto& [v, e] : d) {
      if ((q[v] -= e) == 0) q.erase(v);
    }
    if (q != (s == 0 ? c.left : c.right)) return "quotient differs";
  }
  if (c.left.empty() || c.right.empty()) return "empty quotient";
  if (!c.reduced) return "missing reduced certificate";
  Polynomial r = Polynomial::from_terms({Monomial{1, c.left}, Monomial{-1, c.right}});
  return check(r, *c.reduced);
}

inline std::string check(const Polynomial& p, const Certificate& c) {
  return std::visit(
      [&](const auto& pl) -> std::string {
        using T = std::decay_t<decltype(pl)>;
        const bool linear = std::all_of(p.monomials().begin(), p.monomials().end(),
                                        [](const Monomial& m) { return m.degree() == 1; });
        if constexpr (std::is_same_v<T, SubsetPayload>) {
          if (c.theorem != Theorem::RadoLinear) return "payload/theorem mismatch";
          if (!linear) return "not linear";
          if (!coefficients_match(p, pl.coefficients)) return "coefficients";
          return zero_sum(p, pl.subset) ? "" : "J is not a zero-sum subset";
        } else if constexpr (std::is_same_v<T, NecessityPayload>) {
          if (!coefficients_match(p, pl.coefficients)) return "coefficients";
          if (oracle::subset_with_sum(pl.coefficients, 0)) return "a zero-sum subset exists";
          if (c.theorem == Theorem::LinearNecessity) return linear ? "" : "not linear";
          if (c.theorem != Theorem::HomogeneousNecessity) return "payload/theorem mismatch";
          for (const auto& m : p.monomials()) {
            if (m.degree() != pl.degree) return "not homogeneous of the stated degree";
          }
          return {};
        } else if constexpr (std::is_same_v<T, MultiplicativePayload>) {
          if (p.size() != 2 || p[0].coefficient != -p[1].coefficient) return "not c*(A - B)";
          for (const auto& [v, e] : p[0].exponents) {
            if (p[1].exponents.contains(v)) return "shared variable " + v.name();
          }
          auto side = [](const Monomial& m, const std::vector<Variable>& vs,
                         const std::vector<BigInt>& es) {
            if (vs.size() != m.exponents.size() || es.size() != vs.size()) return false;
            for (std::size_t i = 0; i < vs.size(); ++i) {
              if (deg(m, vs[i]) != es[i]) return false;
            }
            return true;
          };
          if (!side(p[0], pl.left, pl.left_exponents) && !side(p[1], pl.left, pl.left_exponents)) {
            return "left side differs";
          }
          if (!pl.sums) return "no equal subset sums recorded";
          BigInt s1 = 0, s2 = 0;
          for (auto i : pl.sums->left) s1 += pl.left_exponents.at(i);
          for (auto i : pl.sums->right) s2 += pl.right_exponents.at(i);
          if (pl.sums->left.empty() || pl.sums->right.empty() || s1 != s2 || s1 != pl.sums->sum) {
            return "I_1, I_2 sums differ";
          }
          return {};
        } else if constexpr (std::is_same_v<T, UnitPayload>) {
          Assignment ones;
          for (const auto& v : p.variables()) ones[v] = 1;
          return evaluate(p, ones) == 0 ? "" : "(1, ..., 1) is not a solution";
        } else if constexpr (std::is_same_v<T, ProductLiftPayload>) {
          return check_product_lift(p, pl);
        } else if constexpr (std::is_same_v<T, NonlinearLiftPayload>) {
          return check_nonlinear_lift(p, pl);
        } else if constexpr (std::is_same_v<T, TwoMonomialPayload>) {
          return check_two_monomial(p, pl);
        } else if constexpr (std::is_same_v<T, NegationPayload>) {
          std::vector<Monomial> terms;
          for (const auto& m : p.monomials()) {
            int sign = 1;
            for (const auto& [v, e] : m.exponents) {
              if (pl.signs.at(v) < 0 && e % 2 == 1) sign = -sign;
            }
            terms.push_back(Monomial{m.coefficient * sign, m.exponents});
          }
          Polynomial q = Polynomial::from_terms(std::move(terms));
          if (print(q) != pl.transformed) return "transformed polynomial differs";
          if (!pl.inner) return "missing inner certificate";
          return check(q, *pl.inner);
        } else {
          return "no payload";
        }
      },
      c.payload);
}

}  // namespace detail

/// Empty when the verdict's certificate re-validates against p.
inline std::string check(const Polynomial& p, const Verdict& v) {
  if (v.status == Status::Unknown) {
    return v.certificate.theorem == Theorem::None ? "" : "unknown verdict with a certificate";
  }
  return detail::check(p, v.certificate);
}

}  // namespace rado::replay
