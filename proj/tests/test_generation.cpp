#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace wwm;
using namespace wwm::testing;

namespace {

using WordSet = std::set<std::pair<std::string, std::string>>;

PipelineResult run(const Lexicon& lex, bool blocking = false, std::size_t cycles = 1,
                   bool reapply_only = false) {
  PipelineOptions opts;
  opts.generation.blocking = blocking;
  opts.generation.cycles = cycles;
  opts.generation.reapply_only = reapply_only;
  return run_cycles(lex, opts);
}

WordSet forms(const PipelineResult& r) { return word_set(r.report.words()); }

Lexicon fixture(const std::string& name) { return parse_lexicon(read_fixture(name)); }

}  // namespace

TEST(Unify, PerceptionMatchesNounSide) {
  const Lexicon lex = receive_family(true);
  const auto strategies = learn(lex, PipelineOptions{});
  ASSERT_EQ(strategies.size(), 1u);
  const Strategy& s = strategies[0];

  const auto b = unify(tw("perception", "Ns"), s, Side::One);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->variable_material(), u32("perce"));
  EXPECT_EQ(create(s, *b), tw("perceive", "V"));

  // Wrong tag, wrong side, wrong literal, too long.
  EXPECT_FALSE(unify(tw("perception", "V"), s, Side::One));
  EXPECT_FALSE(unify(tw("perception", "Ns"), s, Side::Two));
  EXPECT_FALSE(unify(tw("perciption", "Ns"), s, Side::One));
  EXPECT_FALSE(unify(tw("apperception", "Ns"), s, Side::One));
  EXPECT_FALSE(unify(tw("perceptiox", "Ns"), s, Side::One));
}

TEST(Unify, WitnessesAreSelfLicensing) {
  const Lexicon lex = receive_family(true);
  const auto strategies = learn(lex, PipelineOptions{});
  for (const auto& s : strategies) {
    for (auto [a, b] : s.witnesses) {
      const auto b1 = unify(lex[a], s, Side::One);
      ASSERT_TRUE(b1);
      EXPECT_EQ(create(s, *b1), lex[b]);
      const auto b2 = unify(lex[b], s, Side::Two);
      ASSERT_TRUE(b2);
      EXPECT_EQ(create(s, *b2), lex[a]);
    }
  }
}

TEST(Generate, ReceiveFamilyCreatesPerceive) {
  const auto r = run(receive_family(true));
  EXPECT_EQ(forms(r), (WordSet{{"perceive", "V"}}));
  // Each of the six witnesses regenerates its partner.
  EXPECT_EQ(r.report.regenerated_count, 6u);
  ASSERT_EQ(r.report.new_words.size(), 1u);
  EXPECT_EQ(r.report.new_words[0].source, tw("perception", "Ns"));
  EXPECT_EQ(r.report.per_strategy_counts.at(0), 1u);
}

TEST(Generate, NoStrategiesMeansNoWords) {
  const auto r = run(make_lexicon({{"cat", "Ns"}, {"dog", "Ns"}}));
  EXPECT_TRUE(r.strategies.empty());
  EXPECT_TRUE(r.report.new_words.empty());
  EXPECT_TRUE(run(Lexicon{}).report.new_words.empty());
}

TEST(Generate, ConjugationWithoutBlocking) {
  const auto r = run(fixture("conjugation.txt"));
  EXPECT_EQ(forms(r), (WordSet{{"chantere", "INF"},
                               {"conjuguere", "INF"},
                               {"donnere", "INF"},
                               {"parlere", "INF"}}));
  EXPECT_TRUE(r.report.blocked.empty());
}

TEST(Generate, ConjugationBlockedByParadigm) {
  const auto r = run(fixture("conjugation.txt"), true);
  EXPECT_TRUE(forms(r).empty());
  ASSERT_EQ(r.report.blocked.size(), 4u);
  for (const auto& b : r.report.blocked) {
    if (b.word == tw("conjuguere", "INF")) {
      EXPECT_EQ(b.source, tw("conjugues", "V2s"));
      EXPECT_EQ(b.blocker, tw("conjuguer", "INF"));
    }
  }
}

TEST(Generate, SingletonParadigmIsNeverBlocked) {
  // perception has no partner in the lexicon, so nothing blocks perceive.
  const auto r = run(receive_family(true), true);
  EXPECT_EQ(forms(r), (WordSet{{"perceive", "V"}}));
}

TEST(Blocking, IndexAgreesWithScan) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    const Lexicon lex = random_lexicon(seed);
    const auto strategies = learn(lex, PipelineOptions{});
    const auto p = build_paradigms(strategies, lex);
    const BlockingIndex index(lex, p);
    for (WordId id = 0; id < lex.size(); ++id) {
      for (const char* t : {"A", "B", "C", "D"}) {
        const TaggedWord cand{u32("zzz"), Tag{t}};
        EXPECT_EQ(index.blocker(id, cand.tag).has_value(), is_blocked(id, cand, p, lex));
      }
    }
  }
}

TEST(Generate, MatchesBruteForceOracle) {
  for (std::uint32_t seed = 0; seed < 60; ++seed) {
    const Lexicon lex = random_lexicon(seed);
    for (bool blocking : {false, true}) {
      naive::Config cfg;
      cfg.blocking = blocking;
      const auto expected = naive::run(to_naive(lex), cfg);
      const auto got = run(lex, blocking);
      EXPECT_EQ(forms(got), word_set(expected.new_words)) << "seed " << seed;
      WordSet blocked;
      for (const auto& b : got.report.blocked) blocked.insert({to_utf8(b.word.form), b.word.tag.label});
      EXPECT_EQ(blocked, word_set(expected.blocked)) << "seed " << seed;
      EXPECT_EQ(got.report.regenerated_count, expected.regenerated) << "seed " << seed;
    }
  }
}

TEST(Cycles, SecondCycleBuildsOnFirst) {
  const Lexicon lex = fixture("cycles.txt");
  const auto one = run(lex, false, 1);
  EXPECT_EQ(one.report.cycles_run, 1u);
  EXPECT_TRUE(forms(one).contains({"walks", "V3s"}));
  EXPECT_FALSE(forms(one).contains({"walking", "GER"}));

  for (bool reapply : {true, false}) {
    const auto two = run(lex, false, 2, reapply);
    EXPECT_TRUE(forms(two).contains({"walks", "V3s"}));
    EXPECT_TRUE(forms(two).contains({"walking", "GER"})) << reapply;
    EXPECT_EQ(two.working.size(), lex.size() + two.report.new_words.size());
  }
}

TEST(Cycles, StopsWhenNothingNew) {
  const auto r = run(fixture("cycles.txt"), false, 10, true);
  EXPECT_LT(r.report.cycles_run, 10u);
  const auto again = run(fixture("cycles.txt"), false, r.report.cycles_run, true);
  EXPECT_EQ(forms(r), forms(again));
}

TEST(Cycles, RejectsZeroCycles) {
  PipelineOptions opts;
  opts.generation.cycles = 0;
  EXPECT_THROW(run_cycles(Lexicon{}, opts), std::invalid_argument);
}
