#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <set>

#include "anamorph/error.hpp"
#include "anamorph/pattern.hpp"
#include "fixtures.hpp"
#include "ipa.hpp"
#include "oracle.hpp"

namespace {

using anamorph::Bindings;
using anamorph::ErrorKind;
using anamorph::PhonemeSeq;

class PatternTest : public ::testing::Test {
 protected:
  fixtures::Ipa ipa;
};

TEST_F(PatternTest, BapOfWorkedPairs) {
  EXPECT_EQ(ipa.bap("aptai̯lən", "apɡətai̯lt"), "++ən/+ɡə+t");
  EXPECT_EQ(ipa.bap("wɜrk", "wɜrks"), "+/+s");
  EXPECT_EQ(ipa.bap("anʃpiːlən", "anʃpiːlənt"), "+/+t");
  EXPECT_EQ(ipa.bap("aplɔxən", "apɡəlɔxt"), "++ən/+ɡə+t");
}

TEST_F(PatternTest, DisjointFormsGiveTrivialPattern) {
  const auto p = anamorph::bap(ipa.seq("kæt"), ipa.seq("dɔɡ"));
  EXPECT_TRUE(p.is_trivial());
  EXPECT_EQ(ipa.render(p), "kæt/dɔɡ");
}

TEST_F(PatternTest, BapBindingsAreTheAlignedBlocks) {
  const auto d = anamorph::derive_bap(ipa.seq("aptai̯lən"), ipa.seq("apɡətai̯lt"));
  ASSERT_EQ(d.bindings.size(), 2U);
  EXPECT_EQ(ipa.str(d.bindings[0]), "ap");
  EXPECT_EQ(ipa.str(d.bindings[1]), "tai̯l");
}

TEST_F(PatternTest, TiedBlocksFollowSmallestStart) {
  // "apɡ" and "ɡʊk" both have length 3; the earlier block wins.
  EXPECT_EQ(ipa.bap("apɡʊkən", "apɡəɡʊkt"), "++ən/+əɡ+t");
}

TEST_F(PatternTest, CommonalityPatterns) {
  EXPECT_EQ(ipa.render(anamorph::commonality_pattern(ipa.seq("apɡəzuːxt"), ipa.seq("apɡəlɔxt"))), "apɡə+xt");
  EXPECT_EQ(ipa.render(anamorph::commonality_pattern(ipa.seq("apɡəlɔxt"), ipa.seq("apɡərʏkt"))), "apɡə+t");
  EXPECT_EQ(ipa.render(anamorph::commonality_pattern(ipa.seq("xy"), ipa.seq("xy"))), "xy");
  EXPECT_EQ(ipa.render(anamorph::commonality_pattern(ipa.seq("kæt"), ipa.seq("dɔɡ"))), "+");
}

TEST_F(PatternTest, SkeletonKeepsOuterLiterals) {
  EXPECT_EQ(ipa.render(anamorph::skeleton(ipa.wp("+a+ən"))), "+ən");
  EXPECT_EQ(ipa.render(anamorph::skeleton(ipa.wp("ap+ɡ+t"))), "ap+t");
  EXPECT_EQ(ipa.render(anamorph::skeleton(ipa.wp("++"))), "+");
  EXPECT_EQ(ipa.render(anamorph::skeleton(ipa.wp("ap+ən"))), "ap+ən");
  EXPECT_EQ(ipa.render(anamorph::skeleton(ipa.wp("kæt"))), "kæt");
}

TEST_F(PatternTest, MatchBindsTheStem) {
  const auto b = anamorph::matches(ipa.wp("+ən"), ipa.seq("anʃpiːlən"));
  ASSERT_TRUE(b.has_value());
  ASSERT_EQ(b->size(), 1U);
  EXPECT_EQ(ipa.str((*b)[0]), "anʃpiːl");
}

TEST_F(PatternTest, VariablesNeverBindEmpty) {
  EXPECT_FALSE(anamorph::matches(ipa.wp("+s"), ipa.seq("s")).has_value());
  EXPECT_FALSE(anamorph::is_match(ipa.wp("+s"), ipa.seq("s")));
  EXPECT_FALSE(anamorph::is_match(ipa.wp("++"), ipa.seq("s")));
}

TEST_F(PatternTest, FirstVariableTakesLongestSegment) {
  const auto b = anamorph::matches(ipa.wp("++ən"), ipa.seq("aptai̯lən"));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(ipa.str((*b)[0]), "aptai̯");
  EXPECT_EQ(ipa.str((*b)[1]), "l");
}

TEST_F(PatternTest, MatchBacktracksForInnerLiterals) {
  const auto b = anamorph::matches(ipa.wp("+ɡə+t"), ipa.seq("apɡətai̯lt"));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(ipa.str((*b)[0]), "ap");
  EXPECT_EQ(ipa.str((*b)[1]), "tai̯l");
  EXPECT_FALSE(anamorph::is_match(ipa.wp("+ɡə+s"), ipa.seq("apɡətai̯lt")));
}

TEST_F(PatternTest, LiteralPatternMatchesItselfOnly) {
  EXPECT_TRUE(anamorph::is_match(ipa.wp("kæt"), ipa.seq("kæt")));
  EXPECT_FALSE(anamorph::is_match(ipa.wp("kæt"), ipa.seq("kæts")));
  EXPECT_EQ(anamorph::matches(ipa.wp("kæt"), ipa.seq("kæt"))->size(), 0U);
}

TEST_F(PatternTest, Instantiate) {
  EXPECT_EQ(ipa.str(anamorph::instantiate(ipa.wp("+ɡə+t"), {ipa.seq("ap"), ipa.seq("tai̯l")})), "apɡətai̯lt");
  EXPECT_EQ(ipa.str(anamorph::instantiate(ipa.wp("xy"), {})), "xy");
  EXPECT_EQ(ipa.str(anamorph::instantiate(ipa.wp("+əst"), {ipa.seq("ʦɛrʃtrai̯t")})), "ʦɛrʃtrai̯təst");
}

TEST_F(PatternTest, InstantiateChecksArity) {
  try {
    anamorph::instantiate(ipa.wp("+ɡə+t"), {ipa.seq("ap")});
    FAIL();
  } catch (const anamorph::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kArity);
  }
  EXPECT_THROW(anamorph::instantiate(ipa.wp("+t"), {PhonemeSeq{}}), anamorph::Error);
}

TEST_F(PatternTest, EnumerationOfWorkedPair) {
  const auto aps = anamorph::enumerate_aps(ipa.seq("anʃpiːlən"), ipa.seq("anʃpiːlənt"));
  EXPECT_EQ(aps.size(), 256U);
  const std::set<anamorph::AlternationPattern> set(aps.begin(), aps.end());
  for (const char* expected : {"anʃpiːlən/anʃpiːlənt", "+/+t", "+ən/+ənt", "an+ən/an+ənt", "+n+p+l+n/+n+p+l+nt"}) {
    EXPECT_TRUE(set.contains(ipa.ap(expected))) << expected;
  }
}

TEST_F(PatternTest, EnumerationSmallCases) {
  const auto two = anamorph::enumerate_aps(ipa.seq("xy"), ipa.seq("xyy"));
  EXPECT_EQ(two.size(), 4U);
  const auto one = anamorph::enumerate_aps(ipa.seq("kæt"), ipa.seq("dɔɡ"));
  ASSERT_EQ(one.size(), 1U);
  EXPECT_TRUE(one[0].is_trivial());
}

TEST(Enumerate, SingleSharedPosition) {
  const fixtures::Ipa ipa({"x", "xy"});
  const auto aps = anamorph::enumerate_aps(ipa.seq("x"), ipa.seq("xy"));
  ASSERT_EQ(aps.size(), 2U);
  const std::set<anamorph::AlternationPattern> set(aps.begin(), aps.end());
  EXPECT_TRUE(set.contains(ipa.ap("x/xy")));
  EXPECT_TRUE(set.contains(ipa.ap("+/+y")));
}

TEST(Enumerate, GuardRejectsLongSharedRuns) {
  std::vector<std::string> forms{"abcdefghijklmnopqrstuvw"};
  const fixtures::Ipa ipa(forms);
  const auto f = ipa.seq(forms[0]);
  try {
    anamorph::enumerate_aps(f, f);
    FAIL();
  } catch (const anamorph::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGuardExceeded);
  }
}

TEST_F(PatternTest, FormalAnalogy) {
  EXPECT_TRUE(anamorph::is_formal_analogy(ipa.seq("aplɔxən"), ipa.seq("apɡəlɔxt"), ipa.seq("aprʏkən"),
                                          ipa.seq("apɡərʏkt")));
  EXPECT_TRUE(anamorph::is_formal_analogy(ipa.seq("kæt"), ipa.seq("kæt"), ipa.seq("dɔɡ"), ipa.seq("dɔɡ")));
  EXPECT_FALSE(anamorph::is_formal_analogy(ipa.seq("wɜrk"), ipa.seq("wɜrks"), ipa.seq("sɪŋ"), ipa.seq("sæŋ")));
}

TEST_F(PatternTest, AlternationOfWordPatterns) {
  EXPECT_EQ(ipa.render(anamorph::ap_of_wps(ipa.wp("ap+ən"), ipa.wp("apɡə+t"))), "++ən/+ɡə+t");
  EXPECT_EQ(ipa.render(anamorph::ap_of_wps(ipa.wp("+ən"), ipa.wp("+ənt"))), "+/+t");
  EXPECT_EQ(ipa.render(anamorph::ap_of_wps(ipa.wp("a+ən"), ipa.wp("a+ən"))), "+/+");
}

TEST_F(PatternTest, ParseRenderRoundTrip) {
  for (const char* text : {"++ən/+ɡə+t", "+/+t", "kæt/dɔɡ", "+ən/+"}) EXPECT_EQ(ipa.render(ipa.ap(text)), text);
  EXPECT_THROW(ipa.ap("+ən"), anamorph::Error);
  EXPECT_THROW(ipa.ap("a/b/c"), anamorph::Error);
}

TEST_F(PatternTest, HashAgreesWithEquality) {
  const std::hash<anamorph::AlternationPattern> h;
  EXPECT_EQ(h(ipa.ap("+/+t")), h(anamorph::bap(ipa.seq("wɜrk"), ipa.seq("wɜrkt"))));
}

// Randomized checks against the brute-force reference.

TEST(PatternOracle, BapCommonalityAndMatching) {
  std::mt19937 rng(21);
  for (int k = 0; k < 1500; ++k) {
    const auto a = fixtures::random_seq(rng, 3, 1, 7);
    const auto b = fixtures::random_seq(rng, 3, 1, 7);
    const auto p = anamorph::bap(a, b);
    const auto expected = oracle::bap(a, b);
    ASSERT_EQ(p.first.symbols(), expected.first);
    ASSERT_EQ(p.second.symbols(), expected.second);
    const auto c = anamorph::commonality_pattern(a, b);
    ASSERT_EQ(c.symbols(), oracle::commonality(a, b));
    ASSERT_EQ(anamorph::skeleton(c).symbols(), oracle::skeleton(c.symbols()));
    // An empty residue on one side leaves a variable that form cannot fill.
    ASSERT_EQ(anamorph::is_match(c, a), oracle::matches(c.symbols(), a));
    ASSERT_EQ(anamorph::is_match(c, b), oracle::matches(c.symbols(), b));
    const auto wp = anamorph::WordPattern(oracle::commonality(a, fixtures::random_seq(rng, 3, 1, 7)));
    ASSERT_EQ(anamorph::is_match(wp, b), oracle::matches(wp.symbols(), b));
  }
}

TEST(PatternOracle, MatchPicksLongestFirstVariable) {
  std::mt19937 rng(22);
  for (int k = 0; k < 1500; ++k) {
    const auto form = fixtures::random_seq(rng, 2, 1, 8);
    PhonemeSeq wp;
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    for (std::size_t i = 0; i < len; ++i) {
      wp.push_back(rng() % 3 == 0 ? anamorph::kVarSymbol : fixtures::random_seq(rng, 2, 1, 1)[0]);
    }
    const auto all = oracle::decompositions(wp, form);
    const auto got = anamorph::matches(anamorph::WordPattern(wp), form);
    ASSERT_EQ(got.has_value(), !all.empty());
    if (!got) continue;
    // Lexicographically longest segments, variable by variable.
    auto best = all.front();
    for (const auto& d : all) {
      for (std::size_t v = 0; v < d.size(); ++v) {
        if (d[v].size() != best[v].size()) {
          if (d[v].size() > best[v].size()) best = d;
          break;
        }
      }
    }
    ASSERT_EQ(*got, best);
  }
}

TEST(PatternOracle, EnumerationCardinality) {
  std::mt19937 rng(23);
  for (int k = 0; k < 300; ++k) {
    const auto a = fixtures::random_seq(rng, 3, 1, 6);
    const auto b = fixtures::random_seq(rng, 3, 1, 6);
    std::size_t shared = 0;
    for (const auto& blk : oracle::blocks(a, b)) shared += blk.n;
    const auto aps = anamorph::enumerate_aps(a, b);
    ASSERT_EQ(aps.size(), std::size_t{1} << shared);
    const std::set<anamorph::AlternationPattern> set(aps.begin(), aps.end());
    ASSERT_TRUE(set.contains(anamorph::bap(a, b)));
    ASSERT_TRUE(set.contains({anamorph::WordPattern(a), anamorph::WordPattern(b)}));
    for (const auto& ap : aps) {
      ASSERT_EQ(ap.first.var_count(), ap.second.var_count());
      ASSERT_TRUE(anamorph::is_match(ap.first, a));
      ASSERT_TRUE(anamorph::is_match(ap.second, b));
    }
  }
}

TEST(PatternPerf, WorkedBapIsFast) {
  const fixtures::Ipa ipa;
  const auto a = ipa.seq("aptai̯lən");
  const auto b = ipa.seq("apɡətai̯lt");
  const auto start = std::chrono::steady_clock::now();
  const auto p = anamorph::bap(a, b);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(ipa.render(p), "++ən/+ɡə+t");
  EXPECT_LT(elapsed, std::chrono::milliseconds(1));
}

}  // namespace
