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

#include "factbench/tagger.h"

#include <gtest/gtest.h>

#include <string>

#include "factbench/error.h"
#include "fixtures.h"

namespace factbench {
namespace {

TEST(TokenizeTest, SplitsTrailingPunctuationOnly) {
  EXPECT_EQ(Tokenize("Sen. Mitchell is here."),
            (Words{"Sen.", "Mitchell", "is", "here", "."}));
  EXPECT_EQ(Tokenize("Wait!"), (Words{"Wait", "!"}));
  EXPECT_EQ(Tokenize("I ?"), (Words{"I", "?"}));
  EXPECT_THROW(Tokenize("   "), Error);
}

TEST(TagTest, MitchellSentence) {
  TaggedSentence s = testing::MitchellSentence();
  ASSERT_EQ(s.tokens.size(), 17u);
  EXPECT_EQ(s.tokens[16].text, ".");
  EXPECT_EQ(s.tokens[2].pos, Pos::kVerb);   // is
  EXPECT_EQ(s.tokens[5].pos, Pos::kVerb);   // has
  EXPECT_EQ(s.tokens[11].pos, Pos::kDet);   // a
  EXPECT_EQ(s.tokens[2].highlight, Highlight::kVerb);
  EXPECT_NO_THROW(ValidateSentence(s));
}

TEST(TagTest, CapitalizedRunsBecomeEntities) {
  TaggedSentence s =
      Tag("Yesterday we saw Marie Curie win the Nobel Prize.", "x",
          DefaultTaggerConfig());
  EXPECT_EQ(s.tokens[0].ner, Ner::kNone);  // lone sentence-initial capital
  EXPECT_EQ(s.tokens[3].ner, Ner::kMisc);
  EXPECT_EQ(s.tokens[4].ner, Ner::kMisc);
  EXPECT_EQ(s.tokens[7].ner, Ner::kMisc);
  EXPECT_EQ(s.tokens[3].highlight, Highlight::kNamedEntity);
  // A capitalized run at the start of the sentence still counts.
  TaggedSentence t = Tag("Marie Curie won.", "y", DefaultTaggerConfig());
  EXPECT_EQ(t.tokens[0].ner, Ner::kMisc);
}

TEST(TagTest, HighlightSchemes) {
  EXPECT_EQ(HighlightFor(Pos::kVerb, Ner::kPerson, HighlightScheme::kFull),
            Highlight::kNamedEntity);
  EXPECT_EQ(HighlightFor(Pos::kVerb, Ner::kPerson, HighlightScheme::kVerbs),
            Highlight::kVerb);
  EXPECT_EQ(HighlightFor(Pos::kVerb, Ner::kNone, HighlightScheme::kNamedEntities),
            Highlight::kNone);
  EXPECT_EQ(HighlightFor(Pos::kNoun, Ner::kOrg, HighlightScheme::kNone),
            Highlight::kNone);
}

TEST(TagTest, CustomLexicon) {
  TaggerConfig cfg = DefaultTaggerConfig();
  cfg.verb_lexicon = ParseLexicon("# comment\nflows\n\nRUNS\n");
  TaggedSentence s = Tag("the river flows and runs", "x", cfg);
  EXPECT_EQ(s.tokens[2].pos, Pos::kVerb);
  EXPECT_EQ(s.tokens[4].pos, Pos::kVerb);
}

TEST(TaggerConfigTest, LoadsLexiconRelativeToConfig) {
  TaggerConfig cfg = LoadTaggerConfig(testing::DataPath("tagger_config.json"));
  EXPECT_EQ(cfg.verb_lexicon, DefaultVerbLexicon());
  EXPECT_EQ(cfg.highlight_scheme, HighlightScheme::kFull);
}

TEST(LabelMappingTest, PosAndNer) {
  EXPECT_EQ(MapPosLabel("VV"), Pos::kVerb);
  EXPECT_EQ(MapPosLabel("NNP"), Pos::kNoun);
  EXPECT_EQ(MapPosLabel("JJ"), Pos::kAdj);
  EXPECT_EQ(MapPosLabel("DT"), Pos::kDet);
  EXPECT_EQ(MapPosLabel("PU"), Pos::kOther);
  EXPECT_EQ(MapNerLabel("B-PER"), Ner::kPerson);
  EXPECT_EQ(MapNerLabel("I-ORG"), Ner::kOrg);
  EXPECT_EQ(MapNerLabel("GPE"), Ner::kLoc);
  EXPECT_EQ(MapNerLabel("O"), Ner::kNone);
  EXPECT_EQ(MapNerLabel("B-DATE"), Ner::kMisc);
}

TEST(PretaggedTest, ChineseFixture) {
  TaggedSentence s = IngestPretagged(
      testing::ReadData("fixtures/chinese_pretagged.json"), DefaultTaggerConfig());
  EXPECT_EQ(s.id, "zh1");
  EXPECT_EQ(s.language, "zh");
  ASSERT_EQ(s.tokens.size(), 5u);
  EXPECT_EQ(s.tokens[0].ner, Ner::kPerson);
  EXPECT_EQ(s.tokens[0].highlight, Highlight::kNamedEntity);
  EXPECT_EQ(s.tokens[1].pos, Pos::kVerb);
  EXPECT_EQ(s.tokens[3].ner, Ner::kLoc);
}

TEST(PretaggedTest, RejectsMismatchedTokens) {
  const char* bad = R"({"id": "a", "raw": "x y", "tokens": [{"text": "x"}, {"text": "z"}]})";
  try {
    IngestPretagged(bad, DefaultTaggerConfig());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTokenizationMismatch);
  }
  EXPECT_THROW(IngestPretagged(R"({"id": "a"})", DefaultTaggerConfig()), Error);
}

}  // namespace
}  // namespace factbench
