// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rado/term_sum.hpp"

namespace rado {

SyntaxError::SyntaxError(std::size_t position, std::string expected, std::string_view text)
    : Error([&] {
        std::ostringstream os;
        os << "syntax error at position " << position << ": expected " << expected << "\n  "
           << text << "\n  " << std::string(position, ' ') << '^';
        return os.str();
      }()),
      position_(position),
      expected_(std::move(expected)) {}

ConstantTermError::ConstantTermError(const BigInt& constant)
    : Error("polynomial has nonzero constant term " + constant.get_str() +
            " (use --allow-constant for the affine classifier)"),
      constant_(constant) {}

bool Variable::is_valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) throw std::invalid_argument("invalid variable name '" + name_ + "'");
}

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (const auto& [v, k] : e) d += k;
  return d;
}

std::strong_ordering canonical_compare(const Exponents& a, const Exponents& b) {
  if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) return std::strong_ordering::less;
    if (ib->first < ia->first) return std::strong_ordering::greater;
    if (ia->second != ib->second) {
      return ia->second > ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    ++ia;
    ++ib;
  }
  if (ia != a.end()) return std::strong_ordering::less;
  if (ib != b.end()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

unsigned Monomial::degree_in(const Variable& v) const {
  auto it = exponents.find(v);
  return it == exponents.end() ? 0 : it->second;
}

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
  TermSum sum;
  for (auto& m : terms) sum.add(m);
  return sum.to_polynomial();
}

std::vector<BigInt> Polynomial::coefficients() const {
  std::vector<BigInt> out;
  out.reserve(monomials_.size());
  for (const auto& m : monomials_) out.push_back(m.coefficient);
  return out;
}

std::optional<std::size_t> Polynomial::find(const Exponents& e) const {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i].exponents == e) return i;
  }
  return std::nullopt;
}

// TermSum::to_polynomial is the only producer of canonical polynomials.
Polynomial TermSum::to_polynomial() const {
  if (auto c = constant(); c != 0) throw ConstantTermError(c);
  if (terms_.empty()) throw EmptyPolynomial();
  Polynomial p;
  std::set<Variable> vars;
  for (const auto& [e, c] : terms_) {
    p.monomials_.push_back(Monomial{c, e});
    for (const auto& [v, k] : e) vars.insert(v);
  }
  p.variables_.assign(vars.begin(), vars.end());
  return p;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermSum parse() {
    TermSum sum;
    skip_ws();
    if (at_end()) fail("a term");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    sum.add(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("'+', '-' or end of input");
      ++pos_;
      sum.add(term(c == '-'));
    }
    return sum;
  }

 private:
  Monomial term(bool negative) {
    skip_ws();
    Monomial m{1, {}};
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      m.coefficient = integer();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
      } else if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
        need_factor = false;  // bare integer: a constant term
      }
    }
    if (need_factor) {
      factor(m.exponents);
      for (;;) {
        skip_ws();
        if (at_end() || peek() != '*') break;
        ++pos_;
        factor(m.exponents);
      }
    }
    if (negative) m.coefficient = -m.coefficient;
    return m;
  }

  void factor(Exponents& into) {
    skip_ws();
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("a variable");
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    Variable v{std::string(text_.substr(start, pos_ - start))};
    unsigned e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      BigInt k = integer();
      if (!k.fits_uint_p() || k > 1'000'000) fail("an exponent below 10^6");
      e = static_cast<unsigned>(k.get_ui());
    }
    if (e > 0) into[v] += e;
  }

  BigInt integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("an unsigned integer");
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(pos_, expected, text_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text) { return Parser(text).parse().to_polynomial(); }

AffineForm parse_with_constant(std::string_view text) {
  TermSum sum = Parser(text).parse();
  BigInt c = sum.constant();
  sum.add(Exponents{}, -c);
  return AffineForm{sum.to_polynomial(), c};
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Exponents& e) {
  if (e.empty()) return "1";
  std::string out;
  for (const auto& [v, k] : e) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

namespace {

void append_term(std::string& out, const BigInt& c, const Exponents& e) {
  BigInt mag = abs(c);
  if (out.empty()) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (e.empty()) {
    out += mag.get_str();
    return;
  }
  if (mag != 1) out += mag.get_str() + '*';
  out += to_string(e);
}

}  // namespace

std::string print(const Polynomial& p) {
  std::string out;
  for (const auto& m : p.monomials()) append_term(out, m.coefficient, m.exponents);
  return out;
}

std::string print(const AffineForm& f) {
  std::string out = print(f.terms);
  if (f.constant != 0) append_term(out, f.constant, {});
  return out;
}

std::string TermSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // constants sort first in canonical order; print them last
  for (const auto& [e, c] : terms_)
    if (!e.empty()) append_term(out, c, e);
  if (auto c = constant(); c != 0) append_term(out, c, {});
  return out;
}

// ---------------------------------------------------------------------------
// Queries

BigInt evaluate(const Polynomial& p, const Assignment& values) {
  BigInt total = 0;
  BigInt term, factor;
  for (const auto& m : p.monomials()) {
    term = m.coefficient;
    for (const auto& [v, k] : m.exponents) {
      auto it = values.find(v);
      if (it == values.end()) throw MissingVariable(v.name());
      mpz_pow_ui(factor.get_mpz_t(), it->second.get_mpz_t(), k);
      term *= factor;
    }
    total += term;
  }
  return total;
}

DegreeProfile degree_profile(const Polynomial& p) {
  DegreeProfile prof;
  for (const auto& m : p.monomials()) {
    for (const auto& [v, k] : m.exponents) {
      unsigned& d = prof.degree[v];
      d = std::max(d, k);
    }
  }
  for (const auto& [v, d] : prof.degree) {
    prof.partial_degree = std::max(prof.partial_degree, d);
    if (d >= 2) prof.nonlinear.push_back(v);
  }
  for (const auto& m : p.monomials()) {
    unsigned l = 0;
    for (const auto& y : prof.nonlinear) l = std::max(l, prof.degree.at(y) - m.degree_in(y));
    prof.levels.push_back(l);
    prof.multiplicities.push_back(std::max(1u, l));
  }
  return prof;
}

Polynomial ReductForm::as_polynomial() const {
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    terms.push_back(Monomial{coefficients[i], {{variables[i], 1}}});
  }
  return Polynomial::from_terms(std::move(terms));
}

ReductForm reduct(const Polynomial& p) {
  ReductForm r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    r.coefficients.push_back(p[i].coefficient);
    r.variables.emplace_back("y" + std::to_string(i + 1));
  }
  return r;
}

Exponents monomial_gcd(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (const auto& [v, k] : a) {
    auto it = b.find(v);
    if (it != b.end()) out[v] = std::min(k, it->second);
  }
  return out;
}

bool divides(const Exponents& divisor, const Exponents& e) {
  return std::all_of(divisor.begin(), divisor.end(), [&](const auto& vk) {
    auto it = e.find(vk.first);
    return it != e.end() && it->second >= vk.second;
  });
}

Exponents monomial_quotient(const Exponents& a, const Exponents& b) {
  if (!divides(b, a)) throw std::invalid_argument(to_string(b) + " does not divide " + to_string(a));
  Exponents out = a;
  for (const auto& [v, k] : b) {
    auto it = out.find(v);
    it->second -= k;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

bool is_homogeneous(const Polynomial& p) {
  const unsigned d = p[0].degree();
  return std::all_of(p.monomials().begin(), p.monomials().end(),
                     [d](const Monomial& m) { return m.degree() == d; });
}

bool is_lev(const Polynomial& p) { return degree_profile(p).partial_degree <= 1; }

bool is_linear(const Polynomial& p) {
  return std::all_of(p.monomials().begin(), p.monomials().end(),
                     [](const Monomial& m) { return m.degree() == 1; });
}

std::vector<std::size_t> support(const Polynomial& p, const Variable& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].exponents.contains(v)) out.push_back(i);
  }
  return out;
}

}  // namespace rado
