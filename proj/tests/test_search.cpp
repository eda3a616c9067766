// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rado/search.hpp"
#include "rado/serialize.hpp"

namespace rado {
namespace {

std::string stable(const SearchOutcome& o) {
  auto j = outcome_json(o, "");
  j["stats"].erase("ms");
  return j.dump();
}

TEST(Constraints, Schur) {
  auto p = parse("x + y - z");
  auto cs = enumerate_constraints(p, 4, false);
  ASSERT_EQ(cs.size(), 6u);
  EXPECT_EQ(cs.front().values, (Tuple{1, 1, 2}));
  EXPECT_EQ(cs.back().values, (Tuple{3, 1, 4}));
  EXPECT_TRUE(enumerate_constraints(p, 2, true).empty());
}

TEST(BadColoring, Schur) {
  auto p = parse("x + y - z");
  auto o = find_bad_coloring(p, 2, 4, false);
  ASSERT_EQ(o.kind, OutcomeKind::BadColoring);
  EXPECT_EQ(o.coloring->colors, (std::vector<std::uint8_t>{0, 1, 1, 0}));
  EXPECT_FALSE(monochromatic_solution(p, *o.coloring, false));

  EXPECT_EQ(find_bad_coloring(p, 2, 5, false).kind, OutcomeKind::Forced);
  EXPECT_EQ(find_bad_coloring(p, 1, 1, false).kind, OutcomeKind::BadColoring);
  EXPECT_EQ(find_bad_coloring(p, 1, 2, false).kind, OutcomeKind::Forced);
}

TEST(BadColoring, InvalidArguments) {
  auto p = parse("x + y - z");
  EXPECT_THROW(find_bad_coloring(p, 0, 4, false), std::invalid_argument);
  EXPECT_THROW(find_bad_coloring(p, 2, 0, false), std::invalid_argument);
}

TEST(Monochromatic, Examples) {
  auto p = parse("x + y - z");
  Coloring all_zero{5, std::vector<std::uint8_t>(5, 0)};
  auto s = monochromatic_solution(p, all_zero, false);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->values, (Tuple{1, 1, 2}));
  auto t = monochromatic_solution(p, all_zero, true);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->values, (Tuple{1, 2, 3}));
}

TEST(RadoNumber, Schur) {
  auto p = parse("x + y - z");
  auto r = rado_number(p, 2, 10, false);
  EXPECT_EQ(r.threshold, 5u);
  EXPECT_EQ(r.outcomes.size(), 5u);
  EXPECT_EQ(rado_number(p, 2, 12, true).threshold, 9u);
  EXPECT_EQ(rado_number(p, 3, 20, false).threshold, 14u);
  auto none = rado_number(p, 2, 4, false);
  EXPECT_FALSE(none.threshold);
  EXPECT_FALSE(none.inconclusive_at);
}

TEST(RadoNumber, AgreesWithFullEnumeration) {
  for (auto s : {"x + y - z", "x + 2*y - z", "x - y", "x1 + x2 - y1*y2", "x + y - 2*z"}) {
    auto p = parse(s);
    for (bool inj : {false, true}) {
      auto r = rado_number(p, 2, 12, inj);
      EXPECT_EQ(r.threshold, oracle::threshold(p, 2, 12, inj)) << s << " injective " << inj;
    }
  }
}

TEST(RadoNumber, MonotoneInColors) {
  for (auto s : {"x + y - z", "x + 2*y - z"}) {
    auto p = parse(s);
    auto two = rado_number(p, 2, 30, false).threshold;
    auto one = rado_number(p, 1, 30, false).threshold;
    ASSERT_TRUE(one && two);
    EXPECT_LE(*one, *two);
  }
}

TEST(RadoNumber, InjectiveAtLeastPlain) {
  for (auto s : {"x + y - z", "x1 + x2 - y1*y2", "x + 2*y - z"}) {
    auto p = parse(s);
    auto plain = rado_number(p, 2, 14, false).threshold;
    auto inj = rado_number(p, 2, 14, true).threshold;
    ASSERT_TRUE(plain);
    if (inj) {
      EXPECT_GE(*inj, *plain);
    }
  }
}

TEST(BadColoring, AgreesWithFullEnumeration) {
  for (auto s : {"x + y - z", "x + y - 3*z", "x^2 - y*z", "x + y - z^2", "x*y - z"}) {
    auto p = parse(s);
    for (std::uint32_t n = 1; n <= 12; ++n) {
      for (bool inj : {false, true}) {
        auto o = find_bad_coloring(p, 2, n, inj);
        ASSERT_NE(o.kind, OutcomeKind::Inconclusive);
        bool expected = oracle::bad_coloring_exists(oracle::grid_solutions(p, n, inj), 2, n);
        EXPECT_EQ(o.kind == OutcomeKind::BadColoring, expected) << s << " N=" << n;
      }
    }
  }
}

TEST(BadColoring, DeterministicAcrossWorkers) {
  for (auto [s, r, n] : {std::tuple{"x + y - z", 3u, 13u}, std::tuple{"x + y - z", 3u, 14u},
                         std::tuple{"x + y - 3*z", 3u, 40u}, std::tuple{"x + 2*y - z", 2u, 9u}}) {
    auto p = parse(s);
    const auto base = stable(find_bad_coloring(p, r, n, false, {.workers = 1}));
    for (unsigned w : {2u, 8u}) {
      EXPECT_EQ(stable(find_bad_coloring(p, r, n, false, {.workers = w})), base) << s << " " << n;
    }
  }
}

TEST(BadColoring, BudgetGivesInconclusive) {
  auto p = parse("x + y - z");
  auto o = find_bad_coloring(p, 3, 14, false, {.budget = 100});
  EXPECT_EQ(o.kind, OutcomeKind::Inconclusive);
  EXPECT_EQ(o.stats.nodes, 100u);
  for (unsigned w : {2u, 8u}) {
    EXPECT_EQ(stable(find_bad_coloring(p, 3, 14, false, {.budget = 100, .workers = w})), stable(o));
  }
  auto r = rado_number(p, 3, 20, false, {.budget = 100});
  EXPECT_TRUE(r.inconclusive_at);
  EXPECT_FALSE(r.threshold);
}

}  // namespace
}  // namespace rado
