// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/witness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rado {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ReductLift: return "ReductLift";
    case Provenance::NlpLift: return "NlpLift";
    case Provenance::BruteForce: return "BruteForce";
    case Provenance::Negation: return "Negation";
  }
  return "?";
}

bool Witness::injective() const {
  std::set<BigInt> seen;
  for (const auto& [v, x] : assignment) {
    if (!seen.insert(x).second) return false;
  }
  return true;
}

namespace {

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt pow(const BigInt& b, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

std::string join(std::span<const BigInt> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].get_str();
  }
  return out + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Reduct lift

LevForm to_lev_form(const Polynomial& p, const ExclusiveAssignment& exclusives) {
  if (!exclusives.complete() || exclusives.exclusive.size() != p.size()) throw NoExclusiveSet();
  if (!is_lev(p)) throw NotLEV();
  LevForm form{p, p.coefficients(), {}, {}, {}};
  std::set<Variable> chosen;
  for (const auto& xs : exclusives.exclusive) {
    const Variable& x = *std::min_element(xs.begin(), xs.end());
    form.linear.push_back(x);
    chosen.insert(x);
  }
  for (const auto& v : p.variables()) {
    if (!chosen.contains(v)) form.product.push_back(v);
  }
  for (const auto& m : p.monomials()) {
    IndexSet f;
    for (std::size_t j = 0; j < form.product.size(); ++j) {
      if (m.exponents.contains(form.product[j])) f.push_back(j);
    }
    form.families.push_back(std::move(f));
  }
  return form;
}

Witness reduct_lift(const LevForm& form, std::span<const BigInt> alpha,
                    std::span<const BigInt> y_values) {
  if (alpha.size() != form.linear.size()) {
    throw std::invalid_argument("reduct_lift: need one alpha per monomial");
  }
  if (y_values.size() != form.product.size()) {
    throw std::invalid_argument("reduct_lift: need one y value per product variable");
  }
  for (const auto& y : y_values) {
    if (y < 1) throw std::invalid_argument("reduct_lift: y values must be positive");
  }
  const BigInt s = dot(form.coefficients, alpha);
  if (s != 0) {
    throw NotAReductSolution("alpha = " + join(alpha) + " gives sum a_i*alpha_i = " + s.get_str());
  }

  Witness w;
  w.provenance = Provenance::ReductLift;
  BigInt all = 1;
  for (std::size_t j = 0; j < y_values.size(); ++j) {
    w.assignment[form.product[j]] = y_values[j];
    all *= y_values[j];
  }
  for (std::size_t i = 0; i < form.linear.size(); ++i) {
    BigInt x = alpha[i];
    const auto& f = form.families[i];
    for (std::size_t j = 0; j < y_values.size(); ++j) {
      if (!std::binary_search(f.begin(), f.end(), j)) x *= y_values[j];
    }
    w.assignment[form.linear[i]] = x;
  }
  w.value = evaluate(form.source, w.assignment);
  if (w.value != all * s) throw std::logic_error("reduct_lift: product identity failed");
  return w;
}

TermSum reduct_lift_residual(const LevForm& form, std::span<const BigInt> alpha) {
  std::map<Variable, Monomial> images;
  Exponents all;
  for (const auto& y : form.product) all[y] = 1;
  for (std::size_t i = 0; i < form.linear.size(); ++i) {
    Monomial m{alpha[i], {}};
    for (std::size_t j = 0; j < form.product.size(); ++j) {
      const auto& f = form.families[i];
      if (!std::binary_search(f.begin(), f.end(), j)) m.exponents[form.product[j]] = 1;
    }
    images.emplace(form.linear[i], std::move(m));
  }
  TermSum rhs;
  rhs.add(all, dot(form.coefficients, alpha));
  return substitute(form.source, images) - rhs;
}

// ---------------------------------------------------------------------------
// Nonlinear lift

Polynomial reduced_polynomial(const Polynomial& p, std::span<const Variable> nonlinear) {
  std::map<Variable, Monomial> ones;
  for (const auto& y : nonlinear) ones.emplace(y, Monomial{1, {}});
  return substitute(p, ones).to_polynomial();
}

namespace {

struct LiftPlan {
  std::vector<unsigned> d;                  // d(y_s)
  std::vector<std::vector<unsigned>> diff;  // d(y_s) - d_i(y_s)
};

LiftPlan plan_lift(const Polynomial& p, const NonlinearLiftPayload& cert) {
  if (cert.exclusive.size() != p.size()) {
    throw std::invalid_argument("nlp_lift: certificate does not match the polynomial");
  }
  LiftPlan plan;
  const auto prof = degree_profile(p);
  for (const auto& y : cert.nonlinear) plan.d.push_back(prof.degree.at(y));
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<unsigned> row;
    unsigned l = 0;
    for (std::size_t s = 0; s < cert.nonlinear.size(); ++s) {
      row.push_back(plan.d[s] - p[i].degree_in(cert.nonlinear[s]));
      l = std::max(l, row.back());
    }
    // m_i exclusive slots are guaranteed by the certificate; never pad.
    if (cert.exclusive[i].size() != std::max(1u, l)) {
      throw std::logic_error("nlp_lift: monomial " + std::to_string(i + 1) + " has " +
                             std::to_string(cert.exclusive[i].size()) +
                             " exclusive slots, needs " + std::to_string(std::max(1u, l)));
    }
    plan.diff.push_back(std::move(row));
  }
  return plan;
}

IndexSet level_set(const std::vector<unsigned>& diff, unsigned j) {
  IndexSet out;
  for (std::size_t s = 0; s < diff.size(); ++s) {
    if (diff[s] >= j) out.push_back(s);
  }
  return out;
}

}  // namespace

Witness nlp_lift(const Polynomial& p, const NonlinearLiftPayload& cert,
                 const Assignment& alpha_beta, std::span<const BigInt> g) {
  if (g.size() != cert.nonlinear.size()) {
    throw std::invalid_argument("nlp_lift: need one g value per nonlinear variable");
  }
  for (const auto& x : g) {
    if (x < 2) throw std::invalid_argument("nlp_lift: g values must be at least 2");
  }
  if (std::set<BigInt>(g.begin(), g.end()).size() != g.size()) {
    throw GValuesNotDistinct("nlp_lift: g values " + join(g) + " are not pairwise distinct");
  }
  const LiftPlan plan = plan_lift(p, cert);
  const Polynomial reduced = reduced_polynomial(p, cert.nonlinear);
  const BigInt base = evaluate(reduced, alpha_beta);
  if (base != 0) {
    throw NotAPTildeSolution("reduced polynomial " + print(reduced) + " evaluates to " +
                             base.get_str());
  }

  LiftTrace t;
  t.eta = 1;
  for (std::size_t s = 0; s < g.size(); ++s) t.eta *= pow(g[s], plan.d[s]);

  Witness w;
  w.provenance = Provenance::NlpLift;
  for (std::size_t s = 0; s < g.size(); ++s) w.assignment[cert.nonlinear[s]] = g[s];
  for (const auto& z : cert.remaining) {
    auto it = alpha_beta.find(z);
    if (it == alpha_beta.end()) throw MissingVariable(z.name());
    w.assignment[z] = it->second;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    BigInt eta_i = 1, mono = 1;
    for (std::size_t s = 0; s < g.size(); ++s) {
      eta_i *= pow(g[s], plan.diff[i][s]);
      mono *= pow(g[s], p[i].degree_in(cert.nonlinear[s]));
    }
    BigInt product = 1;
    for (std::size_t j = 0; j < cert.exclusive[i].size(); ++j) {
      IndexSet set = level_set(plan.diff[i], static_cast<unsigned>(j + 1));
      BigInt gamma = 1;
      for (auto s : set) gamma *= g[s];
      product *= gamma;

      const Variable& x = cert.exclusive[i][j];
      auto it = alpha_beta.find(x);
      if (it == alpha_beta.end()) throw MissingVariable(x.name());
      w.assignment[x] = it->second * gamma;
      t.gamma[{i, j}] = gamma;
      t.index_sets[{i, j}] = std::move(set);
    }
    if (product != eta_i) throw std::logic_error("nlp_lift: gamma product differs from eta_i");
    if (product * mono != t.eta) throw std::logic_error("nlp_lift: eta_i * M_i differs from eta");
    t.eta_i.push_back(eta_i);
  }
  w.value = evaluate(p, w.assignment);
  if (w.value != t.eta * base) throw std::logic_error("nlp_lift: final identity failed");
  w.trace = std::move(t);
  return w;
}

TermSum nlp_lift_residual(const Polynomial& p, const NonlinearLiftPayload& cert,
                          const Assignment& alpha_beta) {
  const LiftPlan plan = plan_lift(p, cert);
  std::map<Variable, Monomial> images;
  for (const auto& z : cert.remaining) images.emplace(z, Monomial{alpha_beta.at(z), {}});
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < cert.exclusive[i].size(); ++j) {
      const Variable& x = cert.exclusive[i][j];
      Monomial m{alpha_beta.at(x), {}};
      for (auto s : level_set(plan.diff[i], static_cast<unsigned>(j + 1))) {
        m.exponents[cert.nonlinear[s]] = 1;
      }
      images.emplace(x, std::move(m));
    }
  }
  Exponents eta;
  for (std::size_t s = 0; s < cert.nonlinear.size(); ++s) eta[cert.nonlinear[s]] = plan.d[s];
  TermSum rhs;
  rhs.add(eta, evaluate(reduced_polynomial(p, cert.nonlinear), alpha_beta));
  return substitute(p, images) - rhs;
}

// ---------------------------------------------------------------------------
// Negation

NegatedWitness negate_transform(const Polynomial& p, const Witness& w) {
  if (evaluate(p, w.assignment) != 0) {
    throw std::invalid_argument("negate_transform: assignment does not solve the polynomial");
  }
  NegatedWitness out{negated(p), Witness{}};
  out.witness.provenance = Provenance::Negation;
  for (const auto& [v, x] : w.assignment) out.witness.assignment[v] = -x;
  out.witness.value = evaluate(out.polynomial, out.witness.assignment);
  if (out.witness.value != 0) throw std::logic_error("negate_transform: sign flip failed");
  return out;
}

// ---------------------------------------------------------------------------
// Reduct solutions

namespace {

// Depth-first search for sum a_i alpha_i = 0 with alpha_i in [lo..hi],
// optionally pairwise distinct. The last coordinate is solved for.
class AlphaSearch {
 public:
  AlphaSearch(std::span<const BigInt> a, long lo, long hi, bool distinct)
      : a_(a), lo_(lo), hi_(hi), distinct_(distinct), alpha_(a.size()) {
    // Suffix bounds of sum_{i >= k} a_i alpha_i over the box.
    min_.assign(a.size() + 1, 0);
    max_.assign(a.size() + 1, 0);
    for (std::size_t k = a.size(); k-- > 0;) {
      BigInt x = a[k] * lo, y = a[k] * hi;
      min_[k] = min_[k + 1] + std::min(x, y);
      max_[k] = max_[k + 1] + std::max(x, y);
    }
  }

  std::optional<std::vector<BigInt>> run() {
    if (a_.empty() || !dfs(0, 0)) return std::nullopt;
    return alpha_;
  }

 private:
  static constexpr std::uint64_t kNodeCap = 2'000'000;

  bool used(const BigInt& v, std::size_t k) const {
    return distinct_ && std::find(alpha_.begin(), alpha_.begin() + k, v) != alpha_.begin() + k;
  }

  bool dfs(std::size_t k, const BigInt& partial) {
    if (++nodes_ > kNodeCap) return false;
    if (partial + min_[k] > 0 || partial + max_[k] < 0) return false;
    if (k + 1 == a_.size()) {
      BigInt rest = -partial;
      if (rest % a_[k] != 0) return false;
      BigInt v = rest / a_[k];
      if (v < lo_ || v > hi_ || used(v, k)) return false;
      alpha_[k] = v;
      return true;
    }
    for (long v = lo_; v <= hi_; ++v) {
      BigInt bv = v;
      if (used(bv, k)) continue;
      alpha_[k] = bv;
      if (dfs(k + 1, partial + a_[k] * bv)) return true;
      if (nodes_ > kNodeCap) return false;
    }
    return false;
  }

  std::span<const BigInt> a_;
  long lo_, hi_;
  bool distinct_;
  std::vector<BigInt> alpha_;
  std::vector<BigInt> min_, max_;
  std::uint64_t nodes_ = 0;
};

// alpha = g off J, and on J an extended-gcd solution of sum_J a_j w_j = -S
// shifted by a constant until positive (sum_J a_j = 0 keeps the sum).
std::vector<BigInt> construct_alpha(std::span<const BigInt> a, const IndexSet& j) {
  BigInt g = 0;
  for (auto i : j) g = gcd(g, a[i]);
  std::vector<BigInt> alpha(a.size(), g);
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::binary_search(j.begin(), j.end(), i)) s += a[i] * g;
  }
  // Bezout coefficients: sum_J a_j u_j = g.
  std::vector<BigInt> u(j.size(), 0);
  BigInt cur = 0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    BigInt d, x, y;
    mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), cur.get_mpz_t(), a[j[k]].get_mpz_t());
    for (std::size_t t = 0; t < k; ++t) u[t] *= x;
    u[k] = y;
    cur = d;
  }
  if (cur < 0) {
    cur = -cur;
    for (auto& x : u) x = -x;
  }
  const BigInt factor = -s / cur;
  BigInt low = 0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    alpha[j[k]] = u[k] * factor;
    low = std::min(low, alpha[j[k]]);
  }
  BigInt shift = 1 - low;
  for (auto i : j) alpha[i] += shift;
  return alpha;
}

}  // namespace

std::optional<std::vector<BigInt>> find_reduct_solution(std::span<const BigInt> coefficients,
                                                        unsigned bound) {
  auto j = rado_condition(coefficients);
  if (!j) return std::nullopt;
  const long b = std::max(2u, bound);
  if (auto a = AlphaSearch(coefficients, 2, b, true).run()) return a;
  if (auto a = AlphaSearch(coefficients, 1, b, true).run()) return a;
  if (auto a = AlphaSearch(coefficients, 1, b, false).run()) return a;
  auto alpha = construct_alpha(coefficients, *j);
  if (dot(coefficients, alpha) != 0) throw std::logic_error("construct_alpha: not a solution");
  return alpha;
}

std::vector<BigInt> primes_above(const BigInt& above, std::size_t count) {
  std::vector<BigInt> out;
  BigInt p = above;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    out.push_back(p);
  }
  return out;
}

namespace {

BigInt max_of(std::span<const BigInt> xs) {
  BigInt m = 1;
  for (const auto& x : xs) m = std::max(m, BigInt(abs(x)));
  return m;
}

}  // namespace

Witness lev_witness(const Polynomial& p, unsigned bound) {
  if (!is_lev(p)) throw NotLEV();
  auto ex = exclusive_variables(p);
  if (!ex) throw NoExclusiveSet();
  LevForm form = to_lev_form(p, *ex);
  auto alpha = find_reduct_solution(form.coefficients, bound);
  if (!alpha) {
    throw NotAReductSolution("no nonempty subset of the coefficients sums to zero");
  }
  auto ys = primes_above(max_of(*alpha), form.product.size());
  return reduct_lift(form, *alpha, ys);
}

Witness nlp_witness(const Polynomial& p, const NonlinearLiftPayload& cert, unsigned bound) {
  const Polynomial reduced = reduced_polynomial(p, cert.nonlinear);
  Witness base = lev_witness(reduced, bound);
  std::vector<BigInt> values;
  for (const auto& [v, x] : base.assignment) values.push_back(x);
  auto g = primes_above(max_of(values), cert.nonlinear.size());
  return nlp_lift(p, cert, base.assignment, g);
}

// ---------------------------------------------------------------------------
// Brute-force enumeration

namespace {

__extension__ typedef __int128 i128;

struct CompiledTerm {
  BigInt coefficient;
  std::vector<std::pair<std::size_t, unsigned>> factors;  // (variable index, exponent)
};

struct Compiled {
  std::size_t n = 0;
  std::vector<CompiledTerm> terms;
  // Isolation: solve C * v^e = -R where the monomial of v is `isolated_term`.
  std::optional<std::size_t> isolated;
  std::size_t isolated_term = 0;
  unsigned isolated_exp = 0;
};

Compiled compile(const Polynomial& p) {
  Compiled c;
  const auto& vars = p.variables();
  c.n = vars.size();
  for (const auto& m : p.monomials()) {
    CompiledTerm t{m.coefficient, {}};
    for (const auto& [v, k] : m.exponents) {
      auto idx = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) -
                                          vars.begin());
      t.factors.emplace_back(idx, k);
    }
    c.terms.push_back(std::move(t));
  }
  if (c.n >= 2) {
    for (std::size_t v = c.n; v-- > 0;) {
      auto sup = support(p, vars[v]);
      if (sup.size() == 1) {
        c.isolated = v;
        c.isolated_term = sup.front();
        c.isolated_exp = p[sup.front()].degree_in(vars[v]);
        break;
      }
    }
  }
  return c;
}

bool mul(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool add(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }

class Enumerator {
 public:
  Enumerator(const Polynomial& p, std::uint32_t n, bool injective)
      : c_(compile(p)), n_(n), injective_(injective) {
    for (const auto& t : c_.terms) {
      coef_fits_.push_back(t.coefficient.fits_slong_p());
      coef_.push_back(coef_fits_.back() ? t.coefficient.get_si() : 0);
    }
    if (c_.isolated) {
      // v^e for v in 1..N, saturating at "infinity".
      pow_.assign(n + 1, 0);
      for (std::uint32_t v = 1; v <= n; ++v) {
        i128 r = 1;
        bool ok = true;
        for (unsigned k = 0; k < c_.isolated_exp && ok; ++k) ok = mul(r, v, r);
        pow_[v] = ok ? r : kInf;
      }
    }
  }

  std::uint64_t grid() const {
    const std::size_t free = c_.n - (c_.isolated ? 1 : 0);
    std::uint64_t g = 1;
    for (std::size_t i = 0; i < free; ++i) {
      if (g > std::numeric_limits<std::uint64_t>::max() / n_) return std::numeric_limits<std::uint64_t>::max();
      g *= n_;
    }
    return g;
  }

  std::vector<Tuple> run(std::size_t limit) {
    std::vector<Tuple> out;
    if (limit == 0 || c_.n == 0) return out;
    const bool streaming = !c_.isolated || *c_.isolated == c_.n - 1;
    Tuple x(c_.n, 1);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < c_.n; ++i) {
      if (!c_.isolated || i != *c_.isolated) free.push_back(i);
    }
    for (;;) {
      if (check(x)) {
        if (!injective_ || distinct(x)) {
          out.push_back(x);
          if (streaming && out.size() >= limit) return out;
        }
      }
      // odometer over the free coordinates, last one fastest
      std::size_t k = free.size();
      while (k > 0) {
        auto i = free[k - 1];
        if (x[i] < n_) {
          ++x[i];
          break;
        }
        x[i] = 1;
        --k;
      }
      if (k == 0) break;
    }
    if (!streaming) {
      std::sort(out.begin(), out.end());
      if (out.size() > limit) out.resize(limit);
    }
    return out;
  }

 private:
  static constexpr i128 kInf = -1;

  static bool distinct(const Tuple& x) {
    Tuple s = x;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }

  // Fills the isolated coordinate if it can; returns whether x solves P.
  bool check(Tuple& x) {
    if (auto r = check_fast(x)) return *r;
    return check_exact(x);
  }

  std::optional<bool> check_fast(Tuple& x) {
    i128 rest = 0, lead = 0;
    for (std::size_t t = 0; t < c_.terms.size(); ++t) {
      if (!coef_fits_[t]) return std::nullopt;
      i128 v = coef_[t];
      for (const auto& [idx, e] : c_.terms[t].factors) {
        if (c_.isolated && idx == *c_.isolated) continue;
        for (unsigned k = 0; k < e; ++k) {
          if (!mul(v, x[idx], v)) return std::nullopt;
        }
      }
      if (c_.isolated && t == c_.isolated_term) {
        lead = v;
      } else if (!add(rest, v, rest)) {
        return std::nullopt;
      }
    }
    if (!c_.isolated) return rest == 0;
    // lead * v^e = -rest
    if (rest == 0 || (rest > 0) == (lead > 0)) return false;
    i128 neg = -rest;
    if (neg % lead != 0) return false;
    i128 q = neg / lead;
    auto it = std::lower_bound(pow_.begin() + 1, pow_.end(), q, [](i128 a, i128 b) {
      return a != kInf && a < b;
    });
    if (it == pow_.end() || *it != q) return false;
    x[*c_.isolated] = static_cast<std::uint32_t>(it - pow_.begin());
    return true;
  }

  bool check_exact(Tuple& x) {
    BigInt rest = 0, lead = 0, f;
    for (std::size_t t = 0; t < c_.terms.size(); ++t) {
      BigInt v = c_.terms[t].coefficient;
      for (const auto& [idx, e] : c_.terms[t].factors) {
        if (c_.isolated && idx == *c_.isolated) continue;
        mpz_ui_pow_ui(f.get_mpz_t(), x[idx], e);
        v *= f;
      }
      if (c_.isolated && t == c_.isolated_term) {
        lead = v;
      } else {
        rest += v;
      }
    }
    if (!c_.isolated) return rest == 0;
    BigInt neg = -rest;
    if (neg == 0 || !mpz_divisible_p(neg.get_mpz_t(), lead.get_mpz_t())) return false;
    BigInt q = neg / lead;
    if (q <= 0) return false;
    BigInt r;
    if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), c_.isolated_exp) == 0) return false;
    if (r < 1 || r > n_) return false;
    x[*c_.isolated] = static_cast<std::uint32_t>(r.get_ui());
    return true;
  }

  Compiled c_;
  std::uint32_t n_;
  bool injective_;
  std::vector<bool> coef_fits_;
  std::vector<long> coef_;
  std::vector<i128> pow_;
};

}  // namespace

std::vector<Tuple> solution_tuples(const Polynomial& p, std::uint32_t n, bool injective,
                                   std::size_t limit, std::uint64_t max_grid) {
  if (n < 1) throw std::invalid_argument("brute force: N must be at least 1");
  Enumerator e(p, n, injective);
  if (e.grid() > max_grid) {
    std::ostringstream os;
    os << "brute force over [1.." << n << "] needs more than " << max_grid
       << " assignments; lower N or raise the grid bound";
    throw SearchSpaceTooLarge(os.str());
  }
  return e.run(limit);
}

std::vector<Witness> brute_force_solutions(const Polynomial& p, std::uint32_t n, bool injective,
                                           std::size_t limit, std::uint64_t max_grid) {
  std::vector<Witness> out;
  for (const auto& t : solution_tuples(p, n, injective, limit, max_grid)) {
    Witness w;
    w.provenance = Provenance::BruteForce;
    for (std::size_t i = 0; i < t.size(); ++i) w.assignment[p.variables()[i]] = t[i];
    w.value = evaluate(p, w.assignment);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace rado
