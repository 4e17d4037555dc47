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

#include "factbench/io_formats.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "factbench/error.h"
#include "factbench/json_codec.h"
#include "fixtures.h"
#include "generators.h"

namespace factbench {
namespace {

using testing::Gen;

ErrorCode LoadStateCode(const std::string& bytes, std::string* location = nullptr) {
  try {
    LoadState(bytes);
  } catch (const Error& e) {
    if (location) *location = e.location();
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << bytes;
  return ErrorCode::kInvalidArgument;
}

TEST(SentencesTest, PlainTextGetsSequentialIds) {
  auto recs = LoadSentences("First one.\n\n  Second one.  \r\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0], (SentenceRecord{"s1", "First one."}));
  EXPECT_EQ(recs[1], (SentenceRecord{"s2", "Second one."}));
}

TEST(SentencesTest, JsonArrayAndErrors) {
  auto recs = LoadSentences(R"([{"id": "a", "text": "Hi there."}])");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].id, "a");
  EXPECT_THROW(LoadSentences(""), Error);
  EXPECT_THROW(LoadSentences("\xff\xfe bad"), Error);
  try {
    LoadSentences(R"([{"id": "a", "text": "x"}, {"id": "a", "text": "y"}])");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateId);
  }
}

TEST(StateTest, RoundTripIsByteStable) {
  Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    AnnotationState st = gen.State(gen.Int(1, 6));
    std::string bytes = SaveState(st);
    AnnotationState back = LoadState(bytes);
    EXPECT_EQ(back, st);
    EXPECT_EQ(SaveState(back), bytes);
  }
}

TEST(StateTest, UnknownFieldsArePreserved) {
  AnnotationState st = AnnotationState::FromGold(testing::MitchellGold());
  st.extra["z_plugin"] = R"({"b":1,"a":[true,null]})";
  AnnotationState back = LoadState(SaveState(st));
  // Stored in canonical (sorted-key, compact) form.
  EXPECT_EQ(back.extra.at("z_plugin"), R"({"a":[true,null],"b":1})");
  EXPECT_EQ(SaveState(LoadState(SaveState(back))), SaveState(back));
}

TEST(StateTest, SchemaErrorsCarryJsonPaths) {
  std::string loc;
  EXPECT_EQ(LoadStateCode("not json"), ErrorCode::kMalformedInput);
  EXPECT_EQ(LoadStateCode(R"({"version": "2", "sentences": [], "synsets": {}})"),
            ErrorCode::kVersionUnsupported);
  EXPECT_EQ(LoadStateCode(R"({"version": "1", "sentences": 3, "synsets": {}})",
                          &loc),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(loc, "/sentences");

  AnnotationState st = AnnotationState::FromGold(testing::MitchellGold());
  std::string ok = SaveState(st);
  nlohmann::json j = nlohmann::json::parse(ok);
  j["sentences"][0]["tokens"][3]["pos"] = "BOGUS";
  EXPECT_EQ(LoadStateCode(j.dump(), &loc), ErrorCode::kSchemaViolation);
  EXPECT_EQ(loc, "/sentences/0/tokens/3/pos");

  j = nlohmann::json::parse(ok);
  j["synsets"]["sent1"][0]["triples"][0]["predicate"][0][0]["token"] = 99;
  EXPECT_THROW(LoadState(j.dump()), Error);

  j = nlohmann::json::parse(ok);
  j["synsets"]["ghost"] = j["synsets"]["sent1"];
  EXPECT_THROW(LoadState(j.dump()), Error);
}

TEST(TsvTest, MitchellFixtureRoundTripsByteForByte) {
  std::string bytes = testing::ReadData("fixtures/mitchell_gold.tsv");
  auto s = testing::MitchellSentence();
  GoldBenchmark g = ImportGoldTsv(bytes, {s});
  EXPECT_EQ(g.synsets.at("sent1"), testing::MitchellGold().synsets.at("sent1"));
  EXPECT_EQ(ExportTsv(g), bytes);
}

TEST(TsvTest, RandomBenchmarksRoundTrip) {
  Gen gen(32);
  for (int i = 0; i < 100; ++i) {
    GoldBenchmark g = gen.Benchmark(gen.Int(1, 6), true);
    std::string tsv = ExportTsv(g);
    GoldBenchmark back = ImportGoldTsv(tsv, g.sentences);
    EXPECT_EQ(back.synsets, g.synsets) << tsv;
    EXPECT_EQ(ExportTsv(back), tsv);
  }
}

TEST(TsvTest, ImportErrorsNameTheLine) {
  auto s = testing::MitchellSentence();
  try {
    ImportGoldTsv("sent1\tf1\tSen. Mitchell\tis\tconfident\nsent1\tf2\the\tis\n",
                  {s});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
    EXPECT_NE(e.location().find("line 2"), std::string::npos) << e.location();
  }
  try {
    ImportGoldTsv("sent1\tf1\tpizza\tis\tconfident\n", {s});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTokenNotInSentence);
    EXPECT_NE(e.location().find("line 1"), std::string::npos) << e.location();
  }
  EXPECT_THROW(ImportGoldTsv("zzz\tf1\the\tis\tconfident\n", {s}), Error);
}

TEST(ExtractionsTest, LoadAndWrite) {
  std::string bytes = "s1\ta\tb\tc\t0.5\ns1\td\te\tf\n";
  auto ex = LoadSystemExtractions(bytes);
  ASSERT_EQ(ex.size(), 2u);
  EXPECT_EQ(ex[0].confidence, 0.5);
  EXPECT_FALSE(ex[1].confidence.has_value());
  EXPECT_EQ(LoadSystemExtractions(WriteSystemExtractions(ex)), ex);
  EXPECT_THROW(LoadSystemExtractions("s1\ta\tb\n"), Error);
  EXPECT_THROW(LoadSystemExtractions("s1\ta\tb\tc\tx\n"), Error);
  try {
    LoadSystemExtractions("s1\ta\tb\tc\t1.5\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfidenceOutOfRange);
  }
}

TEST(JsonCodecTest, ScoreReportFields) {
  ScoreReport r;
  r.tp = 1;
  r.fp = 3;
  r.fn = 3;
  auto j = ScoreReportToJson(r);
  EXPECT_EQ(j["tp"], 1);
  EXPECT_EQ(j["fp"], 3);
  EXPECT_TRUE(j.contains("f1"));
}

}  // namespace
}  // namespace factbench
