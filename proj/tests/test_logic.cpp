// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "forget/logic.hpp"
#include "forget/meter.hpp"
#include "support.hpp"

namespace forget {
namespace {

using testing::C;
using testing::F;
using testing::var;

TEST(Variable, InternsByName) {
  EXPECT_EQ(Variable("a"), var('a'));
  EXPECT_EQ(Variable("long_name"), Variable("long_name"));
  EXPECT_NE(Variable("long_name"), Variable("other"));
  EXPECT_EQ(Variable("long_name").name(), "long_name");
  EXPECT_THROW(Variable(""), ContractError);
}

TEST(Literal, NegationFlipsPolarityOnly) {
  const Literal a(var('a'), true);
  EXPECT_FALSE((~a).positive());
  EXPECT_EQ((~a).variable(), var('a'));
  EXPECT_EQ(~~a, a);
}

TEST(Clause, IsASetOfLiterals) {
  const Literal a(var('a'), true);
  const Literal b(var('b'), false);
  EXPECT_EQ(Clause({a, b, a}), Clause({b, a}));
  EXPECT_EQ(Clause({a, b}).size(), 2u);
  EXPECT_TRUE(Clause().empty());
  EXPECT_TRUE(Clause({a, b}).contains(b));
  EXPECT_FALSE(Clause({a, b}).contains(~b));
  EXPECT_TRUE(Clause({a, b}).mentions(var('b')));
  EXPECT_EQ(Clause({a, b}).literal_of(var('b')), b);
  EXPECT_EQ(Clause({a, b}).literal_of(var('c')), std::nullopt);
}

TEST(Formula, IsASetOfClauses) {
  EXPECT_EQ(F("ab ba ab"), F("ab"));
  EXPECT_EQ(F("ab -c").size(), 2u);
  EXPECT_TRUE(F("").empty());
  EXPECT_TRUE(F("a !").has_empty_clause());
  EXPECT_FALSE(F("a b").has_empty_clause());
  EXPECT_EQ(F("ab -c").literal_count(), 3u);
  EXPECT_EQ(F("ab -c").variables(), testing::V("abc"));
}

TEST(VarSet, SetAlgebra) {
  const VarSet abc = testing::V("abc");
  const VarSet bd = testing::V("bd");
  EXPECT_EQ(abc.minus(bd), testing::V("ac"));
  EXPECT_EQ(abc.intersect(bd), testing::V("b"));
  EXPECT_EQ(abc.unite(bd), testing::V("abcd"));
  EXPECT_TRUE(abc.contains(var('c')));
  EXPECT_FALSE(abc.contains(var('d')));
  EXPECT_FALSE(VarSet().contains(var('a')));
}

TEST(PartialModel, StaysConsistent) {
  PartialModel m{Literal(var('a'), true)};
  m.assign(Literal(var('a'), true));
  EXPECT_EQ(m.size(), 1u);
  EXPECT_THROW(m.assign(Literal(var('a'), false)), ContractError);
  m.assign(Literal(var('b'), false));
  EXPECT_EQ(m.value(var('b')), false);
  EXPECT_EQ(m.value(var('c')), std::nullopt);
  EXPECT_TRUE(m.satisfies(Literal(var('b'), false)));
  EXPECT_TRUE(m.falsifies(Literal(var('a'), false)));
  EXPECT_EQ(m.negation(), C("-ab"));
  EXPECT_EQ(m.negation([](Variable v) { return v == Variable("b"); }), C("b"));
}

TEST(Resolve, WorkedExample) { EXPECT_EQ(resolve(C("ab"), C("-bc"), var('b')), C("ac")); }

TEST(Resolve, EmptyResolvent) {
  const auto r = resolve(C("x"), C("-x"), var('x'));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->empty());
}

TEST(Resolve, TautologyIsReported) {
  EXPECT_EQ(resolve(C("ab"), C("-a-b"), var('b')), std::nullopt);
}

TEST(Resolve, RequiresAClash) {
  EXPECT_THROW((void)resolve(C("ab"), C("bc"), var('b')), ContractError);
  EXPECT_THROW((void)resolve(C("ab"), C("-bc"), var('a')), ContractError);
}

TEST(Resolve, MergesSharedLiterals) { EXPECT_EQ(resolve(C("ab"), C("a-b"), var('b')), C("a")); }

TEST(Resolve, PremiseTautologicalOnPivot) {
  EXPECT_EQ(resolve(C("c-c"), C("a-c"), var('c')), std::nullopt);
  EXPECT_EQ(resolve(C("a-c"), C("c-c"), var('c')), std::nullopt);
}

TEST(Tautology, Examples) {
  EXPECT_TRUE(is_tautology(C("a-a")));
  EXPECT_TRUE(is_tautology(C("ba-b")));
  EXPECT_FALSE(is_tautology(C("ab")));
  EXPECT_FALSE(is_tautology(Clause()));
}

TEST(Subsumes, Examples) {
  EXPECT_TRUE(subsumes(C("a"), C("ab")));
  EXPECT_FALSE(subsumes(C("ab"), C("a")));
  EXPECT_TRUE(subsumes(Clause(), C("xyz")));
  EXPECT_TRUE(subsumes(Clause(), Clause()));
  EXPECT_TRUE(subsumes(C("ab"), C("ab")));
  EXPECT_FALSE(subsumes(C("a"), C("-ab")));
}

TEST(Minimize, Examples) {
  EXPECT_EQ(minimize(F("a ab")), F("a"));
  EXPECT_EQ(minimize(F("ab -ab")), F("ab -ab"));
  EXPECT_EQ(minimize(F("! a -b")), F("!"));
  EXPECT_EQ(minimize(F("")), F(""));
}

TEST(Minimize, ChargesOneUnitPerComparison) {
  Meter meter;
  // Sizes 1, 2, 2: the two pairs are each compared with the unit clause.
  (void)minimize(F("a bc -bd"), meter, Deadline::none());
  EXPECT_EQ(meter.time_total(), 2u);
}

TEST(Eval, Examples) {
  const PartialModel a_true_b_false{Literal(var('a'), true), Literal(var('b'), false)};
  EXPECT_TRUE(eval(F("ab"), a_true_b_false));
  EXPECT_FALSE(eval(F("a -a"), PartialModel{Literal(var('a'), true)}));
  EXPECT_FALSE(eval(F("a -a"), PartialModel{Literal(var('a'), false)}));
  EXPECT_TRUE(eval(F(""), PartialModel{}));
  EXPECT_THROW((void)eval(F("ac"), a_true_b_false), ContractError);
}

TEST(Entails, Examples) {
  EXPECT_TRUE(entails(F("ab -bc"), C("ac")));
  EXPECT_FALSE(entails(F("a"), C("b")));
  EXPECT_TRUE(entails(F("ab -bc -cd"), C("ad")));
  EXPECT_TRUE(entails(F("a -a"), Clause()));
  EXPECT_FALSE(entails(F(""), Clause()));
}

TEST(Entails, GuardsEnumeration) {
  std::string big;
  for (int i = 0; i < 25; ++i) big += "&v" + std::to_string(i) + ";";
  EXPECT_THROW((void)entails(F(big), C("a")), EnumerationLimitError);
}

// ---------------------------------------------------------------------------
// Properties on random inputs

class LogicProperties : public ::testing::TestWithParam<int> {};

TEST_P(LogicProperties, MinimizeMatchesAllPairsCheck) {
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 40; ++i) {
    const Formula f = testing::random_formula(rng, 5, 10);
    EXPECT_EQ(minimize(f), testing::all_pairs_minimize(f)) << serialize_formula(f);
  }
}

TEST_P(LogicProperties, MinimizeIsEquivalentIdempotentAntichain) {
  std::mt19937_64 rng(GetParam() + 1000);
  for (int i = 0; i < 25; ++i) {
    const Formula f = testing::random_formula(rng, 1 + static_cast<unsigned>(rng() % 10), 12);
    const Formula m = minimize(f);
    EXPECT_TRUE(testing::same_models(f, m)) << serialize_formula(f);
    EXPECT_EQ(minimize(m), m);
    for (const Clause& c : m)
      for (const Clause& d : m)
        if (!(c == d)) {
          EXPECT_FALSE(subsumes(c, d));
        }
  }
}

TEST_P(LogicProperties, ResolventIsEntailedAndSymmetric) {
  std::mt19937_64 rng(GetParam() + 2000);
  int resolved = 0;
  while (resolved < 50) {
    const Formula pair = testing::random_clean_formula(rng, 4, 2, 4);
    if (pair.size() != 2) continue;
    const Clause& c1 = pair.clauses()[0];
    const Clause& c2 = pair.clauses()[1];
    for (Literal l : c1) {
      if (!c2.contains(~l)) continue;
      const auto r = resolve(c1, c2, l.variable());
      EXPECT_EQ(r, resolve(c2, c1, l.variable()));
      if (r) {
        EXPECT_FALSE(is_tautology(*r));
        EXPECT_TRUE(entails(pair, *r));
      }
      ++resolved;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LogicProperties, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace forget
