// Copyright 2026 The factbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "factbench/shorthand.h"

#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <string>

#include "factbench/error.h"
#include "fixtures.h"
#include "generators.h"
#include "oracles.h"

namespace factbench {
namespace {

using testing::Gen;
using testing::MitchellGold;
using testing::MitchellSentence;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no factbench::Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(CoreModelTest, SplitAndJoinWords) {
  EXPECT_EQ(SplitWords("  a \t b\x1f c "), (Words{"a", "b", "c"}));
  EXPECT_TRUE(SplitWords(" \n ").empty());
  EXPECT_EQ(JoinWords({"a", "b"}), "a b");
}

TEST(CoreModelTest, NormalizationFoldsAsciiOnly) {
  NormalizationConfig cfg;
  EXPECT_EQ(NormalizeWord("ÄBc", cfg), "Äbc");
  cfg.case_fold = false;
  EXPECT_EQ(NormalizeWord("ABc", cfg), "ABc");
  cfg.strip_terminal_punct = true;
  EXPECT_EQ(NormalizeSlot({"votes", "."}, cfg), (Words{"votes"}));
  // Only a standalone punctuation token is dropped.
  EXPECT_EQ(NormalizeSlot({"votes."}, cfg), (Words{"votes."}));
  EXPECT_EQ(NormalizeSlot({"."}, cfg), (Words{"."}));
}

TEST(CoreModelTest, TripleKeyKeepsSlotBoundaries) {
  NormalizationConfig cfg;
  ConcreteTriple a{{"a", "b"}, {"c"}, {"d"}};
  ConcreteTriple b{{"a"}, {"b", "c"}, {"d"}};
  EXPECT_NE(TripleKey(a, cfg), TripleKey(b, cfg));
  ConcreteTriple c{{"A", "B"}, {"C"}, {"D"}};
  EXPECT_EQ(TripleKey(a, cfg), TripleKey(c, cfg));
}

TEST(CoreModelTest, ValidateSentenceRejectsBadTokens) {
  TaggedSentence s = MitchellSentence();
  EXPECT_NO_THROW(ValidateSentence(s));
  TaggedSentence bad = s;
  bad.tokens[2].index = 7;
  EXPECT_EQ(CodeOf([&] { ValidateSentence(bad); }), ErrorCode::kSchemaViolation);
  bad = s;
  bad.raw = "something else";
  EXPECT_EQ(CodeOf([&] { ValidateSentence(bad); }),
            ErrorCode::kTokenizationMismatch);
}

TEST(CoreModelTest, ValidateSlotChecksOrderAndOptionality) {
  TaggedSentence s = MitchellSentence();
  SlotTemplate out_of_order{{{{3, false}, {2, false}}}};
  EXPECT_EQ(CodeOf([&] { ValidateSlot(out_of_order, s); }),
            ErrorCode::kInvalidArgument);
  SlotTemplate all_optional{{{{2, true}, {3, true}}}};
  EXPECT_EQ(CodeOf([&] { ValidateSlot(all_optional, s); }),
            ErrorCode::kAllOptional);
  SlotTemplate out_of_range{{{{99, false}}}};
  EXPECT_THROW(ValidateSlot(out_of_range, s), Error);
  SlotTemplate empty_alt{{{}}};
  EXPECT_THROW(ValidateSlot(empty_alt, s), Error);
}

TEST(ShorthandTest, ParsesOptionalTokensAndAlternatives) {
  TaggedSentence s = MitchellSentence();
  NormalizationConfig cfg;
  SlotTemplate slot =
      ParseSlotShorthand("sufficient votes to block [such] [a] measure", s, cfg);
  ASSERT_EQ(slot.alternatives.size(), 1u);
  const Alternative& alt = slot.alternatives[0];
  ASSERT_EQ(alt.size(), 7u);
  int optional = 0;
  for (const auto& t : alt) optional += t.optional;
  EXPECT_EQ(optional, 2);
  EXPECT_EQ(alt[4].token_index, 10);
  EXPECT_TRUE(alt[4].optional);
  EXPECT_EQ(alt[6].token_index, 12);

  SlotTemplate subj = ParseSlotShorthand("Sen. Mitchell | he", s, cfg);
  ASSERT_EQ(subj.alternatives.size(), 2u);
  EXPECT_EQ(subj.alternatives[1], (Alternative{{4, false}}));
}

TEST(ShorthandTest, ParseIsCaseInsensitiveByDefault) {
  TaggedSentence s = MitchellSentence();
  NormalizationConfig cfg;
  EXPECT_NO_THROW(ParseSlotShorthand("SEN. mitchell", s, cfg));
  cfg.case_fold = false;
  EXPECT_EQ(CodeOf([&] { ParseSlotShorthand("SEN. mitchell", s, cfg); }),
            ErrorCode::kTokenNotInSentence);
}

TEST(ShorthandTest, ParseErrors) {
  TaggedSentence s = MitchellSentence();
  NormalizationConfig cfg;
  EXPECT_EQ(CodeOf([&] { ParseSlotShorthand("[such a measure", s, cfg); }),
            ErrorCode::kUnbalancedBrackets);
  EXPECT_EQ(CodeOf([&] { ParseSlotShorthand("such] a", s, cfg); }),
            ErrorCode::kUnbalancedBrackets);
  EXPECT_EQ(CodeOf([&] { ParseSlotShorthand("he | | votes", s, cfg); }),
            ErrorCode::kEmptyAlternative);
  EXPECT_EQ(CodeOf([&] { ParseSlotShorthand("pizza", s, cfg); }),
            ErrorCode::kTokenNotInSentence);
  EXPECT_EQ(CodeOf([&] { ParseSlotShorthand("[such] [a]", s, cfg); }),
            ErrorCode::kAllOptional);
  EXPECT_EQ(CodeOf([&] { ParseSlotShorthand("measure block", s, cfg); }),
            ErrorCode::kTokenNotInSentence);
}

TEST(ShorthandTest, GroupedBracketIsSugarForPerTokenOptional) {
  TaggedSentence s = MitchellSentence();
  NormalizationConfig cfg;
  EXPECT_EQ(ParseSlotShorthand("block [such a] measure", s, cfg),
            ParseSlotShorthand("block [such] [a] measure", s, cfg));
}

TEST(ShorthandTest, FormatRoundTrips) {
  TaggedSentence s = MitchellSentence();
  NormalizationConfig cfg;
  const char* text = "Sen. Mitchell | he";
  EXPECT_EQ(FormatSlotShorthand(ParseSlotShorthand(text, s, cfg), s), text);
  const char* obj = "sufficient votes to block [such] [a] measure";
  EXPECT_EQ(FormatSlotShorthand(ParseSlotShorthand(obj, s, cfg), s), obj);
}

TEST(ShorthandTest, FormatParseRoundTripOnRandomCanonicalSlots) {
  Gen gen(11);
  NormalizationConfig cfg;
  for (int i = 0; i < 300; ++i) {
    TaggedSentence s = gen.Sentence("s", /*distinct=*/true);
    SlotTemplate slot = gen.Slot(s);
    std::string text = FormatSlotShorthand(slot, s);
    EXPECT_EQ(ParseSlotShorthand(text, s, cfg), slot) << text;
  }
}

TEST(ShorthandTest, CanonicalizeMakesRepeatedWordSlotsRoundTrip) {
  Gen gen(12);
  NormalizationConfig cfg;
  for (int i = 0; i < 300; ++i) {
    TaggedSentence s = gen.Sentence("s", /*distinct=*/false);
    SlotTemplate canon = CanonicalizeSlot(gen.Slot(s), s, cfg);
    EXPECT_EQ(ParseSlotShorthand(FormatSlotShorthand(canon, s), s, cfg), canon);
  }
}

TEST(ExpansionTest, MitchellSynsetCountsMatchOracle) {
  GoldBenchmark g = MitchellGold();
  const TaggedSentence& s = g.sentences[0];
  NormalizationConfig cfg;
  std::size_t total = 0;
  for (const auto& f : g.synsets.at("sent1")) {
    Expansion e = ExpandSynset(f, s, cfg);
    auto brute = oracle::ExpandSynsetStrings(f, s, true);
    EXPECT_EQ(e.triples.size(), brute.size()) << f.id;
    total += e.triples.size();
  }
  EXPECT_EQ(total, 46u);
}

TEST(ExpansionTest, VariantCountIsProductFormula) {
  Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    TaggedSentence s = gen.Sentence("s", false);
    TripleTemplate t = gen.Triple(s);
    EXPECT_EQ(VariantCount(t), oracle::ProductFormula(t));
    Expansion e = ExpandTriple(t, s, NormalizationConfig{});
    EXPECT_EQ(e.generated, VariantCount(t));
  }
}

TEST(ExpansionTest, RandomTemplatesMatchBruteForce) {
  Gen gen(4);
  for (int i = 0; i < 300; ++i) {
    TaggedSentence s = gen.Sentence("s", gen.Coin());
    TripleTemplate t = gen.Triple(s);
    bool fold = gen.Coin();
    NormalizationConfig cfg;
    cfg.case_fold = fold;
    Expansion e = ExpandTriple(t, s, cfg);
    auto brute = oracle::ExpandTemplate(t, s, fold);
    ASSERT_EQ(e.triples.size(), brute.distinct.size());
    std::set<std::string> got;
    for (const auto& c : e.triples) {
      got.insert(oracle::TripleString(JoinWords(c.subject),
                                      JoinWords(c.predicate),
                                      JoinWords(c.object), fold));
    }
    EXPECT_EQ(got, brute.distinct);
  }
}

TEST(ExpansionTest, TripleLimitReportsWouldBeCount) {
  TaggedSentence s = MitchellSentence();
  NormalizationConfig cfg;
  // 13 optional tokens in the object: 2^13 variants.
  TripleTemplate t{
      ParseSlotShorthand("Sen. Mitchell", s, cfg), ParseSlotShorthand("is", s, cfg),
      ParseSlotShorthand("confident [he has sufficient votes to block such a "
                         "measure with procedural actions .]",
                         s, cfg)};
  EXPECT_EQ(VariantCount(t), 8192u);
  try {
    ExpandTriple(t, s, cfg);
    FAIL() << "expected limit error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVariantLimitExceeded);
    EXPECT_EQ(e.count(), 8192u);
  }
  ExpansionLimits wide{10000, 100000};
  EXPECT_EQ(ExpandTriple(t, s, cfg, wide).triples.size(), 8192u);
}

TEST(ExpansionTest, SynsetLimitAppliesToUnion) {
  GoldBenchmark g = MitchellGold();
  const FactSynset& f2 = g.synsets.at("sent1")[1];
  ExpansionLimits lim{4096, 9};
  EXPECT_EQ(CodeOf([&] { ExpandSynset(f2, g.sentences[0], {}, lim); }),
            ErrorCode::kVariantLimitExceeded);
  lim.max_variants_per_synset = 10;
  EXPECT_EQ(ExpandSynset(f2, g.sentences[0], {}, lim).triples.size(), 10u);
}

TEST(ExpansionTest, FullestRealizationComesFirst) {
  TaggedSentence s = MitchellSentence();
  auto slot = ParseSlotShorthand("block [such] [a] measure", s, {});
  auto words = ExpandSlot(slot, s);
  ASSERT_EQ(words.size(), 4u);
  EXPECT_EQ(words[0], (Words{"block", "such", "a", "measure"}));
}

TEST(GoldIndexTest, ParallelMatchesSerial) {
  Gen gen(5);
  for (int i = 0; i < 20; ++i) {
    GoldBenchmark g = gen.Benchmark(gen.Int(1, 40), gen.Coin());
    NormalizationConfig cfg;
    cfg.case_fold = gen.Coin();
    GoldIndex a = BuildGoldIndex(g, cfg);
    GoldIndex b = BuildGoldIndexSerial(g, cfg);
    EXPECT_EQ(a.sentences, b.sentences);
    EXPECT_EQ(a.overlaps, b.overlaps);
    EXPECT_EQ(a.synset_count, b.synset_count);
  }
}

TEST(GoldIndexTest, ReportsFirstErrorInSentenceOrder) {
  GoldBenchmark g = MitchellGold();
  for (int i = 0; i < 30; ++i) {
    TaggedSentence s = g.sentences[0];
    s.id = "x" + std::to_string(i);
    g.sentences.push_back(s);
  }
  ExpansionLimits lim{4, 65536};  // f2..f4 exceed this
  try {
    BuildGoldIndex(g, {}, lim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVariantLimitExceeded);
    EXPECT_NE(std::string(e.what()).find("f2"), std::string::npos) << e.what();
  }
}

TEST(GoldIndexTest, LookupUnknownSentenceThrows) {
  GoldIndex idx = BuildGoldIndex(MitchellGold(), {});
  EXPECT_EQ(CodeOf([&] { idx.Lookup("nope", "k"); }), ErrorCode::kUnknownSentence);
}

}  // namespace
}  // namespace factbench
