// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/classifier.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <utility>

#include "rado/term_sum.hpp"

namespace rado {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 11> kTheoremNames{{
    {Theorem::None, "none"},
    {Theorem::RadoLinear, "RadoLinear"},
    {Theorem::LinearNecessity, "LinearNecessity"},
    {Theorem::RadoAffine, "RadoAffine"},
    {Theorem::MultiplicativeRado, "MultiplicativeRado"},
    {Theorem::ProductLift, "ProductLift"},
    {Theorem::NonlinearLift, "NonlinearLift"},
    {Theorem::TwoMonomial, "TwoMonomial"},
    {Theorem::HomogeneousNecessity, "HomogeneousNecessity"},
    {Theorem::UnitSolution, "UnitSolution"},
    {Theorem::NegationTransform, "NegationTransform"},
}};

std::string join(const std::vector<BigInt>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].get_str();
  }
  return out + ")";
}

std::string join(const std::vector<Variable>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].name();
  }
  return out + "}";
}

std::string join_indices(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

void note(Trace* trace, std::string line) {
  if (trace) trace->push_back(std::move(line));
}

std::string monomial_label(const Polynomial& p, std::size_t i) {
  return "monomial " + std::to_string(i + 1) + " (" + to_string(p[i].exponents) + ")";
}

BigInt coefficient_sum(const Polynomial& p) {
  BigInt s = 0;
  for (const auto& m : p.monomials()) s += m.coefficient;
  return s;
}

Verdict make(Status s, Injectivity inj, Theorem t, Payload payload) {
  Verdict v;
  v.status = s;
  v.injective = inj;
  v.certificate = Certificate{t, std::move(payload)};
  return v;
}

// Facts from the literature about specific polynomials. Reported, never used as proof.
void add_literature_notes(const Polynomial& p, Verdict& v) {
  static const std::array<std::pair<std::string_view, std::string_view>, 3> kKnown{{
      {"x*y + x*z - y*z",
       "literature: x*y + x*z - y*z is partition regular (injectively), although it admits no "
       "set of exclusive variables; not used as a certificate"},
      {"x + y - z^2",
       "literature: x + y - z^2 is not partition regular on N even though it satisfies "
       "Rado's Condition; not used as a certificate"},
      {"x1*y1 + x2*y2 + x3",
       "literature: x1*y1 + x2*y2 + x3 has no solutions in N but is injectively partition "
       "regular on Z (try --ring Z)"},
  }};
  const std::string canonical = print(p);
  for (const auto& [poly, text] : kKnown) {
    if (canonical == poly) v.notes.emplace_back(text);
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::PartitionRegular: return "PR";
    case Status::NotPartitionRegular: return "NOT_PR";
    case Status::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(Injectivity i) {
  switch (i) {
    case Injectivity::Yes: return "yes";
    case Injectivity::No: return "no";
    case Injectivity::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Theorem t) {
  for (const auto& [tag, name] : kTheoremNames)
    if (tag == t) return std::string(name);
  return "none";
}

std::optional<Status> parse_status(std::string_view s) {
  for (auto st : {Status::PartitionRegular, Status::NotPartitionRegular, Status::Unknown})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

std::optional<Injectivity> parse_injectivity(std::string_view s) {
  for (auto i : {Injectivity::Yes, Injectivity::No, Injectivity::Unknown})
    if (to_string(i) == s) return i;
  return std::nullopt;
}

std::optional<Theorem> parse_theorem(std::string_view s) {
  for (const auto& [tag, name] : kTheoremNames)
    if (name == s) return tag;
  return std::nullopt;
}

Polynomial negated(const Polynomial& p) {
  std::vector<Monomial> terms(p.monomials().begin(), p.monomials().end());
  for (auto& m : terms) {
    if (m.degree() % 2 == 1) m.coefficient = -m.coefficient;
  }
  return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Exclusive variables

bool ExclusiveAssignment::complete() const {
  return std::all_of(exclusive.begin(), exclusive.end(), [](const auto& xs) { return !xs.empty(); });
}

ExclusiveAssignment exclusive_table(const Polynomial& p) {
  ExclusiveAssignment t;
  t.exclusive.resize(p.size());
  t.degree_one.resize(p.size());
  for (const auto& v : p.variables()) {
    auto sup = support(p, v);
    if (sup.size() != 1) continue;
    const std::size_t i = sup.front();
    t.exclusive[i].push_back(v);
    if (p[i].degree_in(v) == 1) t.degree_one[i].push_back(v);
  }
  return t;
}

std::optional<ExclusiveAssignment> exclusive_variables(const Polynomial& p) {
  auto t = exclusive_table(p);
  if (!t.complete()) return std::nullopt;
  return t;
}

// ---------------------------------------------------------------------------
// Linear and affine

Verdict classify_linear(const Polynomial& p) {
  if (!is_linear(p)) throw NotLinear();
  auto coeffs = p.coefficients();
  if (auto j = rado_condition(coeffs)) {
    // x - y (up to scaling) is the only linear PR polynomial without injective solutions.
    auto inj = p.size() == 2 ? Injectivity::No : Injectivity::Yes;
    Verdict v = make(Status::PartitionRegular, inj, Theorem::RadoLinear,
                     SubsetPayload{coeffs, *j});
    v.trace.push_back("linear: coefficients " + join(coeffs) + " have zero-sum subset J = " +
                      join_indices(*j));
    if (inj == Injectivity::No) v.trace.push_back("linear: two variables, solutions force x = y");
    return v;
  }
  Verdict v = make(Status::NotPartitionRegular, Injectivity::No, Theorem::LinearNecessity,
                   NecessityPayload{coeffs, 1});
  v.trace.push_back("linear: no nonempty subset of " + join(coeffs) + " sums to zero");
  return v;
}

Verdict classify_affine(const AffineForm& f) {
  if (f.constant == 0) throw NoConstantTerm();
  if (!is_linear(f.terms)) throw NotLinear();
  auto coeffs = f.terms.coefficients();
  BigInt total = 0;
  for (const auto& a : coeffs) total += a;

  AffinePayload payload{coeffs, f.constant, std::nullopt, rado_condition(coeffs)};
  Verdict v;
  // (sum a_i) * t + c = 0
  if (total != 0 && BigInt(-f.constant) % total == 0) {
    payload.diagonal_root = BigInt(-f.constant / total);
  }
  const auto& root = payload.diagonal_root;
  if (!root) {
    v.trace.push_back("affine: P(t, ..., t) = " + total.get_str() + "*t + " + f.constant.get_str() +
                      " has no integer root");
  } else {
    v.trace.push_back("affine: diagonal root t = " + root->get_str());
  }
  const bool natural = root && *root >= 1;
  const bool integer_with_rado = root && payload.subset.has_value();
  if (root && !natural) {
    v.trace.push_back(payload.subset ? "affine: Rado's Condition holds with J = " +
                                           join_indices(*payload.subset)
                                     : "affine: root is not positive and Rado's Condition fails");
  }
  if (natural || integer_with_rado) {
    v.status = Status::PartitionRegular;
    v.injective = Injectivity::Unknown;
  } else {
    v.status = Status::NotPartitionRegular;
    v.injective = Injectivity::No;
  }
  v.certificate = Certificate{Theorem::RadoAffine, std::move(payload)};
  return v;
}

// ---------------------------------------------------------------------------
// Two-monomial shapes

std::optional<Verdict> classify_multiplicative(const Polynomial& p, Trace* trace) {
  if (p.size() != 2) {
    note(trace, "multiplicative: needs exactly two monomials, has " + std::to_string(p.size()));
    return std::nullopt;
  }
  if (p[0].coefficient != -p[1].coefficient) {
    note(trace, "multiplicative: coefficients " + join(p.coefficients()) + " are not (c, -c)");
    return std::nullopt;
  }
  for (const auto& [v, k] : p[0].exponents) {
    if (p[1].exponents.contains(v)) {
      note(trace, "multiplicative: variable " + v.name() + " occurs in both monomials");
      return std::nullopt;
    }
  }
  MultiplicativePayload payload;
  for (const auto& [v, k] : p[0].exponents) {
    payload.left.push_back(v);
    payload.left_exponents.emplace_back(k);
  }
  for (const auto& [v, k] : p[1].exponents) {
    payload.right.push_back(v);
    payload.right_exponents.emplace_back(k);
  }
  payload.sums = equal_subset_sums(payload.left_exponents, payload.right_exponents);
  const std::size_t nvars = p.variables().size();
  if (payload.sums) {
    std::string line = "multiplicative: I1 = " + join_indices(payload.sums->left) + ", I2 = " +
                       join_indices(payload.sums->right) + " with common exponent sum " +
                       payload.sums->sum.get_str();
    Verdict v = make(Status::PartitionRegular, nvars >= 3 ? Injectivity::Yes : Injectivity::No,
                     Theorem::MultiplicativeRado, std::move(payload));
    v.trace.push_back(std::move(line));
    if (nvars < 3) v.trace.push_back("multiplicative: two variables, solutions force x = y");
    return v;
  }
  // No equal subset sums: no injective solutions survive every coloring, but the
  // coefficients cancel, so (1, ..., 1) is a monochromatic solution.
  Verdict v = make(Status::PartitionRegular, Injectivity::No, Theorem::UnitSolution,
                   UnitPayload{p.coefficients()});
  v.trace.push_back("multiplicative: exponent lists " + join(payload.left_exponents) + " and " +
                    join(payload.right_exponents) +
                    " have no nonempty subsets with equal sums, so P is not injectively "
                    "partition regular");
  v.trace.push_back("unit: coefficients sum to zero, (1, ..., 1) is a solution");
  return v;
}

std::optional<Verdict> classify_two_monomial(const Polynomial& p, Trace* trace) {
  if (p.size() != 2) throw NotTwoMonomials();
  if (p[0].coefficient != -p[1].coefficient) {
    note(trace, "two-monomial: coefficients " + join(p.coefficients()) + " are not (c, -c)");
    return std::nullopt;
  }
  TwoMonomialPayload payload;
  payload.scale = p[0].coefficient;
  payload.common = monomial_gcd(p[0].exponents, p[1].exponents);
  payload.left = monomial_quotient(p[0].exponents, payload.common);
  payload.right = monomial_quotient(p[1].exponents, payload.common);
  if (payload.left.empty() || payload.right.empty()) {
    note(trace, "two-monomial: one monomial divides the other, Q1 - Q2 has a constant term");
    return std::nullopt;
  }
  const std::string reduced_text = to_string(payload.left) + " - " + to_string(payload.right);
  auto is_single = [](const Exponents& e) { return e.size() == 1 && e.begin()->second == 1; };

  Verdict v;
  if (is_single(payload.left) && is_single(payload.right)) {
    payload.difference_of_variables = true;
    v = make(Status::PartitionRegular, Injectivity::No, Theorem::TwoMonomial, std::move(payload));
    v.trace.push_back("two-monomial: R = " + reduced_text +
                      " is a difference of two variables: PR, never injectively");
  } else {
    // Q1, Q2 are coprime, so R always has the multiplicative shape.
    Polynomial r = Polynomial::from_terms({Monomial{1, payload.left}, Monomial{-1, payload.right}});
    auto inner = classify_multiplicative(r, trace);
    if (!inner) return std::nullopt;
    payload.reduced = std::make_shared<const Certificate>(inner->certificate);
    v = make(inner->status, inner->injective, Theorem::TwoMonomial, std::move(payload));
    v.trace = inner->trace;
  }
  v.notes.push_back("P = " + (p[0].coefficient == 1 ? std::string() : p[0].coefficient.get_str() + "*") +
                    to_string(monomial_gcd(p[0].exponents, p[1].exponents)) + "*(" + reduced_text +
                    "); P is (injectively) partition regular iff R = " + reduced_text + " is");
  return v;
}

// ---------------------------------------------------------------------------
// Exclusive-variable conditions

std::optional<Verdict> classify_lev(const Polynomial& p, Trace* trace) {
  if (!is_lev(p)) throw NotLEV();
  if (p.size() == 1) {
    note(trace, "l.e.v.: a single monomial never vanishes on N");
    return std::nullopt;
  }
  if (p.size() == 2) return classify_multiplicative(p, trace);

  auto table = exclusive_table(p);
  bool ok = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (table.exclusive[i].empty()) {
      note(trace, "l.e.v.: " + monomial_label(p, i) + " has no exclusive variable");
      ok = false;
    }
  }
  auto coeffs = p.coefficients();
  auto j = rado_condition(coeffs);
  if (!j) {
    note(trace, "l.e.v.: Rado's Condition fails for " + join(coeffs));
    ok = false;
  }
  if (!ok) return std::nullopt;

  ProductLiftPayload payload;
  std::set<Variable> linear;
  for (const auto& xs : table.exclusive) {
    payload.linear.push_back(xs.front());
    linear.insert(xs.front());
  }
  for (const auto& v : p.variables()) {
    if (!linear.contains(v)) payload.product.push_back(v);
  }
  for (const auto& m : p.monomials()) {
    IndexSet f;
    for (std::size_t s = 0; s < payload.product.size(); ++s) {
      if (m.exponents.contains(payload.product[s])) f.push_back(s);
    }
    payload.families.push_back(std::move(f));
  }
  payload.subset = *j;
  Verdict v = make(Status::PartitionRegular, Injectivity::Yes, Theorem::ProductLift, payload);
  v.trace.push_back("l.e.v.: exclusive variables " + join(payload.linear) +
                    ", Rado's Condition with J = " + join_indices(*j));
  return v;
}

std::optional<Verdict> classify_nonlinear(const Polynomial& p, Trace* trace) {
  if (p.size() < 3) {
    note(trace, "nonlinear: needs at least three monomials, has " + std::to_string(p.size()));
    return std::nullopt;
  }
  const auto prof = degree_profile(p);
  const auto table = exclusive_table(p);
  auto coeffs = p.coefficients();
  auto j = rado_condition(coeffs);
  bool ok = true;
  if (!j) {
    note(trace, "nonlinear: Rado's Condition fails for " + join(coeffs));
    ok = false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto have = table.degree_one[i].size();
    if (have < prof.multiplicities[i]) {
      std::ostringstream os;
      os << "nonlinear: " << monomial_label(p, i) << " needs m = " << prof.multiplicities[i]
         << " (l = " << prof.levels[i] << ") exclusive variables of degree 1, has " << have;
      if (table.exclusive[i].size() > have) {
        os << "; exclusive " << join(table.exclusive[i]) << " but not all of degree 1";
      }
      note(trace, os.str());
      ok = false;
    }
  }
  if (!ok) return std::nullopt;

  NonlinearLiftPayload payload;
  std::set<Variable> used(prof.nonlinear.begin(), prof.nonlinear.end());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& deg1 = table.degree_one[i];
    payload.exclusive.emplace_back(deg1.begin(), deg1.begin() + prof.multiplicities[i]);
    used.insert(payload.exclusive.back().begin(), payload.exclusive.back().end());
  }
  payload.nonlinear = prof.nonlinear;
  for (const auto& v : p.variables()) {
    if (!used.contains(v)) payload.remaining.push_back(v);
  }
  payload.levels = prof.levels;
  payload.multiplicities = prof.multiplicities;
  payload.subset = *j;

  std::ostringstream os;
  os << "nonlinear: NL = " << join(prof.nonlinear) << ", m = (";
  for (std::size_t i = 0; i < prof.multiplicities.size(); ++i) {
    os << (i ? ", " : "") << prof.multiplicities[i];
  }
  os << "), Rado's Condition with J = " << join_indices(*j);
  Verdict v = make(Status::PartitionRegular, Injectivity::Yes, Theorem::NonlinearLift,
                   std::move(payload));
  v.trace.push_back(os.str());
  return v;
}

// ---------------------------------------------------------------------------
// Dispatcher

namespace {

Verdict classify_naturals(const Polynomial& p) {
  if (is_linear(p)) return classify_linear(p);

  Trace trace;
  auto finish = [&](Verdict v) {
    trace.insert(trace.end(), v.trace.begin(), v.trace.end());
    v.trace = std::move(trace);
    return v;
  };
  // The two-monomial reduction already delegates to the multiplicative check,
  // which only engages on two monomials; l.e.v. with k = 2 does the same.
  if (p.size() == 2) {
    if (auto v = classify_two_monomial(p, &trace)) return finish(std::move(*v));
  } else if (is_lev(p)) {
    if (auto v = classify_lev(p, &trace)) return finish(std::move(*v));
  }
  if (auto v = classify_nonlinear(p, &trace)) return finish(std::move(*v));

  auto coeffs = p.coefficients();
  if (coefficient_sum(p) == 0) {
    trace.push_back("unit: coefficients sum to zero, (1, ..., 1) is a solution");
    return finish(make(Status::PartitionRegular, Injectivity::Unknown, Theorem::UnitSolution,
                       UnitPayload{coeffs}));
  }
  if (is_homogeneous(p) && !rado_condition(coeffs)) {
    trace.push_back("homogeneous of degree " + std::to_string(p[0].degree()) +
                    " and no nonempty subset of " + join(coeffs) + " sums to zero");
    return finish(make(Status::NotPartitionRegular, Injectivity::No,
                       Theorem::HomogeneousNecessity, NecessityPayload{coeffs, p[0].degree()}));
  }
  trace.push_back("no implemented condition decides this polynomial");
  return finish(Verdict{});
}

Verdict classify_integers(const Polynomial& p) {
  Verdict direct = classify_naturals(p);
  Trace trace;
  auto wrap = [&](const Verdict& inner, int sign, const Polynomial& q) {
    NegationPayload payload;
    for (const auto& v : p.variables()) payload.signs.emplace(v, sign);
    payload.transformed = print(q);
    payload.inner = std::make_shared<const Certificate>(inner.certificate);
    Verdict v = make(Status::PartitionRegular, inner.injective, Theorem::NegationTransform,
                     std::move(payload));
    v.trace = trace;
    v.trace.insert(v.trace.end(), inner.trace.begin(), inner.trace.end());
    v.notes = inner.notes;
    return v;
  };
  if (direct.status == Status::PartitionRegular) {
    trace.push_back("integers: P itself is partition regular on N");
    return wrap(direct, +1, p);
  }
  trace.push_back("integers: P is " + to_string(direct.status) + " on N");
  Polynomial q = negated(p);
  Verdict flipped = classify_naturals(q);
  if (flipped.status == Status::PartitionRegular) {
    trace.push_back("integers: P(-x) = " + print(q) + " is partition regular on N");
    return wrap(flipped, -1, q);
  }
  trace.push_back("integers: P(-x) = " + print(q) + " is " + to_string(flipped.status) + " on N");
  Verdict v;
  v.trace = std::move(trace);
  v.notes.push_back("integers: only the sign-flip transfer from N is implemented");
  return v;
}

}  // namespace

Verdict classify(const Polynomial& p, Ring ring) {
  Verdict v = ring == Ring::Integers ? classify_integers(p) : classify_naturals(p);
  add_literature_notes(p, v);
  return v;
}

}  // namespace rado
