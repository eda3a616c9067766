// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "generators.hpp"
#include "rado/polynomial.hpp"
#include "rado/term_sum.hpp"

namespace rado {
namespace {

Exponents ex(std::initializer_list<std::pair<const char*, unsigned>> xs) {
  Exponents e;
  for (const auto& [n, k] : xs) e[Variable(n)] = k;
  return e;
}

BigInt coefficient_of(const Polynomial& p, const Exponents& e) {
  auto i = p.find(e);
  if (!i) throw std::out_of_range("monomial " + to_string(e) + " not in " + print(p));
  return p[*i].coefficient;
}

Assignment assign(std::initializer_list<std::pair<const char*, long>> xs) {
  Assignment a;
  for (const auto& [n, v] : xs) a[Variable(n)] = v;
  return a;
}

constexpr const char* kWorked = "x11*y1^2*y2^2 + x21*x22*z1*y2^2 - 2*x31*x32*z2*y1 + x41*x42";

TEST(Parse, IntroductoryExample) {
  auto p = parse("2*x1 + 3*x2*y1*y2 - 5*x3*y1 + x4*y2*y3");
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(coefficient_of(p, ex({{"x1", 1}})), 2);
  EXPECT_EQ(coefficient_of(p, ex({{"x2", 1}, {"y1", 1}, {"y2", 1}})), 3);
  EXPECT_EQ(coefficient_of(p, ex({{"x3", 1}, {"y1", 1}})), -5);
  EXPECT_EQ(coefficient_of(p, ex({{"x4", 1}, {"y2", 1}, {"y3", 1}})), 1);
}

TEST(Parse, Cancellation) {
  auto p = parse("x - x + y - z");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(coefficient_of(p, ex({{"y", 1}})), 1);
  EXPECT_EQ(coefficient_of(p, ex({{"z", 1}})), -1);
}

TEST(Parse, SquareTerm) {
  auto p = parse("x + y - z^2");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(degree_profile(p).degree.at(Variable("z")), 2u);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("x - x"), EmptyPolynomial);
  EXPECT_THROW(parse("x + 3"), ConstantTermError);
}

TEST(Parse, ConstantThatCancelsIsAccepted) {
  auto p = parse("x + 3 - 3");
  EXPECT_EQ(print(p), "x");
}

TEST(Parse, SyntaxErrorPosition) {
  try {
    parse("x + * y");
    FAIL() << "no exception";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_EQ(e.expected(), "a variable");
  }
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("x +"), SyntaxError);
  EXPECT_THROW(parse("x y"), SyntaxError);
  EXPECT_THROW(parse("x^"), SyntaxError);
  EXPECT_THROW(parse("1x^-2"), SyntaxError);
  EXPECT_THROW(parse("_x"), SyntaxError);
}

TEST(Parse, JuxtaposedCoefficientAndZeroExponent) {
  EXPECT_EQ(parse("3x + y"), parse("3*x + y"));
  EXPECT_EQ(print(parse("x^0*y + z")), "y + z");
  EXPECT_EQ(print(parse("-x + y")), "-x + y");
}

TEST(Parse, AffineSplitsConstant) {
  auto f = parse_with_constant("x + y + 3");
  EXPECT_EQ(f.constant, 3);
  EXPECT_EQ(print(f.terms), "x + y");
  EXPECT_EQ(print(f), "x + y + 3");
}

TEST(Print, CanonicalOrder) {
  EXPECT_EQ(print(parse("y+x")), "x + y");
  EXPECT_EQ(print(parse("x*x*y")), "x^2*y");
  EXPECT_EQ(print(parse("x*z + x*y")), "x*y + x*z");
  EXPECT_EQ(print(parse("x^2 + y")), "y + x^2");
  EXPECT_EQ(print(parse("2*x1+3*x2*y1*y2-5*x3*y1+x4*y2*y3")),
            "2*x1 - 5*x3*y1 + 3*x2*y1*y2 + x4*y2*y3");
}

TEST(Print, RoundTripAndIdempotence) {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = i % 2 ? gen::lev_polynomial(rng) : gen::nonlinear_lift_polynomial(rng);
    EXPECT_EQ(parse(print(p)), p);
    EXPECT_EQ(print(parse(print(p))), print(p));
    EXPECT_EQ(parse(gen::shuffled_text(p, rng)), p);
  }
}

TEST(DegreeProfile, WorkedExample) {
  auto p = parse(kWorked);
  auto prof = degree_profile(p);
  EXPECT_EQ(prof.nonlinear, (std::vector<Variable>{Variable("y1"), Variable("y2")}));
  // (l, m) keyed by monomial: x11-term (0,1), x21-term (2,2), x31-term (2,2), x41-term (2,2)
  const std::pair<Exponents, std::pair<unsigned, unsigned>> expected[] = {
      {ex({{"x11", 1}, {"y1", 2}, {"y2", 2}}), {0, 1}},
      {ex({{"x21", 1}, {"x22", 1}, {"z1", 1}, {"y2", 2}}), {2, 2}},
      {ex({{"x31", 1}, {"x32", 1}, {"z2", 1}, {"y1", 1}}), {2, 2}},
      {ex({{"x41", 1}, {"x42", 1}}), {2, 2}},
  };
  for (const auto& [e, lm] : expected) {
    auto i = p.find(e);
    ASSERT_TRUE(i) << to_string(e);
    EXPECT_EQ(prof.levels[*i], lm.first) << to_string(e);
    EXPECT_EQ(prof.multiplicities[*i], lm.second) << to_string(e);
  }
}

TEST(DegreeProfile, LinearAndSquare) {
  auto lin = degree_profile(parse("x + y - z"));
  EXPECT_TRUE(lin.nonlinear.empty());
  EXPECT_EQ(lin.levels, (std::vector<unsigned>{0, 0, 0}));
  EXPECT_EQ(lin.multiplicities, (std::vector<unsigned>{1, 1, 1}));

  auto p = parse("x + y - z^2");
  auto sq = degree_profile(p);
  EXPECT_EQ(sq.nonlinear, std::vector<Variable>{Variable("z")});
  EXPECT_EQ(sq.levels[*p.find(ex({{"x", 1}}))], 2u);
  EXPECT_EQ(sq.levels[*p.find(ex({{"y", 1}}))], 2u);
  EXPECT_EQ(sq.levels[*p.find(ex({{"z", 2}}))], 0u);
}

TEST(DegreeProfile, NonlinearEmptyIffLev) {
  gen::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = i % 2 ? gen::lev_polynomial(rng) : gen::nonlinear_lift_polynomial(rng);
    auto prof = degree_profile(p);
    EXPECT_EQ(prof.nonlinear.empty(), prof.partial_degree <= 1);
    EXPECT_EQ(prof.nonlinear.empty(), is_lev(p));
  }
}

TEST(Reduct, Coefficients) {
  auto p = parse("x1*x2 + 4*x2*x3 - 2*x4 + x2*x5");
  auto r = reduct(p);
  ASSERT_EQ(r.coefficients.size(), 4u);
  EXPECT_EQ(r.coefficients[*p.find(ex({{"x1", 1}, {"x2", 1}}))], 1);
  EXPECT_EQ(r.coefficients[*p.find(ex({{"x2", 1}, {"x3", 1}}))], 4);
  EXPECT_EQ(r.coefficients[*p.find(ex({{"x4", 1}}))], -2);
  EXPECT_EQ(r.coefficients[*p.find(ex({{"x2", 1}, {"x5", 1}}))], 1);

  auto lin = parse("3*a - 2*b + c");
  EXPECT_EQ(reduct(lin).coefficients, lin.coefficients());
  EXPECT_EQ(reduct(parse("x*y + x*z - y*z")).coefficients, (std::vector<BigInt>{1, 1, -1}));
}

TEST(Reduct, OfReductKeepsCoefficientMultiset) {
  gen::Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    auto p = gen::nonlinear_lift_polynomial(rng);
    auto a = reduct(p).coefficients;
    auto b = reduct(reduct(p).as_polynomial()).coefficients;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(parse("x + y - z"), assign({{"x", 1}, {"y", 1}, {"z", 2}})), 0);
  EXPECT_EQ(evaluate(parse("x1+x2-y1*y2"), assign({{"x1", 10}, {"x2", 20}, {"y1", 3}, {"y2", 10}})),
            0);
  EXPECT_EQ(evaluate(parse(kWorked), assign({{"x11", 2},
                                              {"x21", 2},
                                              {"x22", 2},
                                              {"z1", 2},
                                              {"x31", 6},
                                              {"x32", 9},
                                              {"z2", 1},
                                              {"x41", 6},
                                              {"x42", 12},
                                              {"y1", 2},
                                              {"y2", 3}})),
            0);
  EXPECT_THROW(evaluate(parse("x + y"), assign({{"x", 1}})), MissingVariable);
}

TEST(Evaluate, MatchesIndependentSum) {
  gen::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto p = gen::nonlinear_lift_polynomial(rng);
    Assignment a;
    for (const auto& v : p.variables()) a[v] = gen::uniform(rng, -50, 50);
    BigInt total = 0;
    for (const auto& m : p.monomials()) {
      BigInt t = m.coefficient;
      for (const auto& [v, k] : m.exponents) {
        for (unsigned j = 0; j < k; ++j) t *= a[v];
      }
      total += t;
    }
    EXPECT_EQ(evaluate(p, a), total);
  }
}

TEST(Evaluate, HomogeneousScaling) {
  gen::Rng rng(8);
  const char* polys[] = {"t1*t2*x^2 + t3*t4*y^2 - t5*t6*z^2", "x + y - z", "x*y + x*z - y*z",
                         "2*x^2 - 3*y^2"};
  for (const char* s : polys) {
    auto p = parse(s);
    ASSERT_TRUE(is_homogeneous(p));
    const unsigned d = p[0].degree();
    for (int i = 0; i < 20; ++i) {
      Assignment v, tv;
      const long t = gen::uniform(rng, -9, 9);
      for (const auto& x : p.variables()) {
        v[x] = gen::uniform(rng, -1000, 1000);
        tv[x] = v[x] * t;
      }
      BigInt td;
      mpz_pow_ui(td.get_mpz_t(), BigInt(t).get_mpz_t(), d);
      EXPECT_EQ(evaluate(p, tv), td * evaluate(p, v));
    }
  }
}

TEST(MonomialGcd, Examples) {
  EXPECT_EQ(monomial_gcd(ex({{"x", 1}, {"y", 2}}), ex({{"y", 1}, {"z", 1}})), ex({{"y", 1}}));
  EXPECT_EQ(monomial_gcd(ex({{"x", 1}}), ex({{"y", 1}})), Exponents{});
  EXPECT_EQ(monomial_gcd(ex({{"x", 2}, {"y", 1}}), ex({{"x", 1}, {"y", 1}})),
            ex({{"x", 1}, {"y", 1}}));
  EXPECT_EQ(monomial_quotient(ex({{"x", 2}, {"y", 1}}), ex({{"x", 1}})), ex({{"x", 1}, {"y", 1}}));
  EXPECT_THROW(monomial_quotient(ex({{"x", 1}}), ex({{"y", 1}})), std::invalid_argument);
}

TEST(MonomialGcd, DividesBoth) {
  gen::Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    auto p = gen::nonlinear_lift_polynomial(rng);
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto g = monomial_gcd(p[a].exponents, p[b].exponents);
        EXPECT_TRUE(divides(g, p[a].exponents));
        EXPECT_TRUE(divides(g, p[b].exponents));
      }
    }
  }
}

TEST(Predicates, Examples) {
  auto t = parse("t1*t2*x^2 + t3*t4*y^2 - t5*t6*z^2");
  EXPECT_TRUE(is_homogeneous(t));
  EXPECT_EQ(t[0].degree(), 4u);
  EXPECT_FALSE(is_lev(t));

  auto s = parse("x + y - z");
  EXPECT_TRUE(is_linear(s));
  EXPECT_TRUE(is_lev(s));
  EXPECT_TRUE(is_homogeneous(s));

  auto a = parse("x1*y1 + x2*y1*y2 - x3");
  EXPECT_TRUE(is_lev(a));
  EXPECT_FALSE(is_homogeneous(a));
  EXPECT_FALSE(is_linear(a));
}

TEST(TermSum, SubstituteAndCancel) {
  auto p = parse("x*y - z");
  std::map<Variable, Monomial> images{{Variable("x"), Monomial{2, ex({{"a", 1}})}},
                                      {Variable("z"), Monomial{2, ex({{"a", 1}, {"y", 1}})}}};
  EXPECT_TRUE(substitute(p, images).is_zero());
  TermSum t(p);
  EXPECT_EQ(t.to_string(), "-z + x*y");
  EXPECT_EQ((t - t).to_string(), "0");
  EXPECT_EQ(t.to_polynomial(), p);
}

TEST(Variable, Names) {
  EXPECT_TRUE(Variable::is_valid_name("x_1"));
  EXPECT_FALSE(Variable::is_valid_name("1x"));
  EXPECT_FALSE(Variable::is_valid_name(""));
  EXPECT_THROW(Variable("a-b"), std::invalid_argument);
  EXPECT_LT(Variable("x"), Variable("y"));
}

}  // namespace
}  // namespace rado
