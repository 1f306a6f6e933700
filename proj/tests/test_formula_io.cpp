// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "forget/formula_io.hpp"
#include "forget/trace.hpp"
#include "support.hpp"

namespace forget {
namespace {

using testing::C;
using testing::F;
using testing::var;

Literal pos(char c) { return Literal(var(c), true); }
Literal neg(char c) { return Literal(var(c), false); }

TEST(Parse, PlainSequenceIsOneClause) {
  EXPECT_EQ(parse_formula("abc"), Formula({Clause({pos('a'), pos('b'), pos('c')})}));
}

TEST(Parse, MinusNegates) {
  EXPECT_EQ(parse_formula("-a"), Formula({Clause({neg('a')})}));
  EXPECT_EQ(parse_formula("a-b"), Formula({Clause({pos('a'), neg('b')})}));
}

TEST(Parse, TokensAreClauses) {
  EXPECT_EQ(parse_formula("ab -bc\n\t-cd  "), Formula({C("ab"), C("-bc"), C("-cd")}));
  EXPECT_TRUE(parse_formula("").empty());
  EXPECT_TRUE(parse_formula("  \n\n ").empty());
}

TEST(Parse, CommentLines) {
  EXPECT_EQ(parse_formula("# a header line\nab\n   # indented comment\n-c"), F("ab -c"));
}

TEST(Parse, Entities) {
  const Formula f = parse_formula("&long;-&x1;a");
  ASSERT_EQ(f.size(), 1u);
  const Clause& c = *f.begin();
  EXPECT_TRUE(c.contains(Literal(Variable("long"), true)));
  EXPECT_TRUE(c.contains(Literal(Variable("x1"), false)));
  EXPECT_TRUE(c.contains(pos('a')));
}

TEST(Parse, EmptyClauseToken) {
  EXPECT_TRUE(parse_formula("!").has_empty_clause());
  EXPECT_EQ(parse_formula("!").size(), 1u);
}

TEST(Parse, ImplicationIsOneClause) {
  const Formula f = parse_formula("ab->cd");
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(*f.begin(), Clause({neg('a'), neg('b'), pos('c'), pos('d')}));
  EXPECT_EQ(parse_formula("-a->b"), F("ab"));
}

// The implication clause must be false exactly when a, b hold and c, d do
// not. Checked by enumeration rather than by reading the clause back.
TEST(Parse, ImplicationTruthTable) {
  const Formula f = parse_formula("ab->cd");
  const testing::Table table("abcd");
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    const bool a = bits & 1u, b = bits & 2u, c = bits & 4u, d = bits & 8u;
    EXPECT_EQ(table.eval(f, bits), !(a && b && !c && !d)) << bits;
  }
}

TEST(Parse, EquivalenceIsTwoClauses) {
  EXPECT_EQ(parse_formula("ef=gh"), F("ef->gh gh->ef"));
  EXPECT_EQ(parse_formula("ef=gh").size(), 2u);
  EXPECT_EQ(parse_formula("a=b"), F("-ab a-b"));
}

TEST(Parse, ErrorsCarryTokenIndex) {
  const auto index_of = [](const std::string& text) -> std::ptrdiff_t {
    try {
      (void)parse_formula(text);
    } catch (const ParseError& e) {
      return static_cast<std::ptrdiff_t>(e.token_index());
    }
    return -1;
  };
  EXPECT_EQ(index_of("ab &foo"), 1);         // unterminated entity
  EXPECT_EQ(index_of("ab c-"), 1);           // stray '-' at end
  EXPECT_EQ(index_of("->b"), 0);             // missing left side
  EXPECT_EQ(index_of("a b c a->"), 3);       // missing right side
  EXPECT_EQ(index_of("a= b"), 0);            // missing right side
  EXPECT_EQ(index_of("a->b->c"), 0);         // two connectives
  EXPECT_EQ(index_of("a=b=c"), 0);
  EXPECT_EQ(index_of("a &;"), 1);            // empty entity name
  EXPECT_EQ(index_of("a --b"), 1);           // double negation
  EXPECT_EQ(index_of("a; b"), 0);            // reserved character
  EXPECT_EQ(index_of("a!"), 0);              // '!' is a token on its own
  EXPECT_EQ(index_of("ab -cd"), -1);
}

TEST(ParseVariables, Lists) {
  EXPECT_EQ(parse_variables("bd"), testing::V("b d"));
  EXPECT_TRUE(parse_variables("").empty());
  EXPECT_EQ(parse_variables("&v1;&v2;").size(), 2u);
  EXPECT_THROW((void)parse_variables("-b"), ParseError);
  EXPECT_THROW((void)parse_variables("a->b"), ParseError);
  EXPECT_THROW((void)parse_variables("!"), ParseError);
}

TEST(ParseVariables, SequenceKeepsOrder) {
  const auto seq = parse_variable_sequence("dbdc");
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[0], var('d'));
  EXPECT_EQ(seq[1], var('b'));
  EXPECT_EQ(seq[2], var('c'));
}

TEST(Serialize, Examples) {
  EXPECT_EQ(serialize_formula(F("abc")), "abc\n");
  EXPECT_EQ(serialize_formula(Formula()), "");
  EXPECT_EQ(serialize_formula(F("!")), "!\n");
  EXPECT_EQ(serialize_clause(C("c-ab")), "-abc");
  EXPECT_EQ(serialize_clause(C("&long;a")), "a&long;");
  EXPECT_EQ(serialize_formula(F("-cd ac")), "ac\n-cd\n");
}

TEST(Serialize, PositiveBeforeNegativeOnTies) {
  EXPECT_EQ(serialize_formula(F("-a a")), "a\n-a\n");
}

TEST(Serialize, RoundTripsRandomFormulas) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Formula f = testing::random_formula(rng, 1 + static_cast<unsigned>(rng() % 8), static_cast<unsigned>(rng() % 12));
    if (rng() % 5 == 0) {
      std::vector<Clause> cs(f.begin(), f.end());
      cs.emplace_back();
      cs.push_back(C("&multi;-&x2;"));
      f = Formula(std::move(cs));
    }
    EXPECT_EQ(parse_formula(serialize_formula(f)), f) << serialize_formula(f);
  }
}

TEST(Trace, LineFormats) {
  EXPECT_EQ(format_trace_line(TraceKind::Time, {}, 42), "#T=42");
  EXPECT_EQ(format_trace_line(TraceKind::Memory, {}, 0), "#M=0");
  EXPECT_EQ(format_trace_line(TraceKind::Trace, "resolving"), "# resolving");
  EXPECT_EQ(format_trace_line(TraceKind::Result, "ac"), "ac");
}

TEST(Trace, EmitToSinks) {
  VectorSink sink;
  emit_trace(sink, TraceKind::Time, std::uint64_t{7});
  emit_trace(sink, TraceKind::Trace, "x");
  emit_trace(sink, TraceKind::Result, "-ab");
  EXPECT_EQ(sink.lines(), (std::vector<std::string>{"#T=7", "# x", "-ab"}));

  std::ostringstream out;
  StreamSink stream(out);
  emit_trace(stream, TraceKind::Memory, std::uint64_t{3});
  EXPECT_EQ(out.str(), "#M=3\n");
}

TEST(Trace, StreamFailureIsReported) {
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  StreamSink stream(out);
  EXPECT_THROW(emit_trace(stream, TraceKind::Time, std::uint64_t{1}), std::ios_base::failure);
}

TEST(Trace, MeterLinePattern) {
  EXPECT_TRUE(is_meter_line("#T=0"));
  EXPECT_TRUE(is_meter_line("#M=123"));
  EXPECT_FALSE(is_meter_line("#T="));
  EXPECT_FALSE(is_meter_line("#T=1 "));
  EXPECT_FALSE(is_meter_line("#X=1"));
  EXPECT_FALSE(is_meter_line("# T=1"));
  EXPECT_FALSE(is_meter_line("#T=-1"));
}

}  // namespace
}  // namespace forget
