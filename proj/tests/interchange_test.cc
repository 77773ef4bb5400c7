// Copyright 2026 The Framecast Authors.
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

#include "framecast/interchange.h"

#include <random>

#include <gtest/gtest.h>

#include "framecast/service.h"
#include "testing.h"

namespace framecast {
namespace {

using namespace ::framecast::testing;

TEST(InterchangeTest, EmptyStoreExportsHeaderOnly) {
  EXPECT_EQ(ExportStore(Store{}), "{\n  \"schema_version\": \"1\"\n}\n");
}

TEST(InterchangeTest, ShippedSeedIsCanonical) {
  const std::string bytes = ReadFile(DataPath("seed.json"));
  EXPECT_EQ(ExportStore(ImportStore(bytes)), bytes);
}

TEST(InterchangeTest, ShippedPrototypesMatchDefaults) {
  const std::string bytes = ReadFile(DataPath("prototypes.json"));
  EXPECT_EQ(ImportPrototypes(bytes), DefaultPrototypes());
  EXPECT_EQ(ExportPrototypes(DefaultPrototypes()), bytes);
}

TEST(InterchangeTest, FigureTwoRoundTripsByteIdentically) {
  const std::string once = ExportStore(ScotlandSentenceStore());
  const Store back = ImportStore(once);
  EXPECT_EQ(back, ScotlandSentenceStore());
  EXPECT_EQ(ExportStore(back), once);
}

TEST(InterchangeTest, SmallFixtureRoundTrips) {
  const std::string bytes = ReadFile(TestDataPath("small_store.json"));
  const Store s = ImportStore(bytes);
  EXPECT_EQ(s.annotation_sets().size(), 3u);
  EXPECT_EQ(s.visual_objects().size(), 2u);
  EXPECT_EQ(s.gestures().size(), 1u);
  EXPECT_EQ(ExportStore(s), bytes);
}

TEST(InterchangeTest, RejectsUnknownSchemaVersion) {
  try {
    ImportStore(R"({"schema_version": "2"})");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaVersionUnsupported);
  }
  try {
    ImportStore(R"({"frames": []})");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(InterchangeTest, MalformedInputIsAParseError) {
  for (const char *text : {"", "{", "[]", R"({"schema_version": "1", "frames": 3})",
                           R"({"schema_version": "1", "frames": [{"name": 1}]})"}) {
    try {
      ImportStore(text);
      ADD_FAILURE() << text;
    } catch (const ValidationError &) {
      ADD_FAILURE() << "structural error reported as validation: " << text;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << text;
    }
  }
}

TEST(InterchangeTest, ImportReportsAllFindings) {
  Json j = ParseJson(ExportStore(ScotlandSentenceStore()));
  j["annotation_sets"][0]["target_span"] = {9, 99};
  j["annotation_sets"][1]["lu"] = "sell.v";
  try {
    ImportStore(j.dump());
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_EQ(e.report().findings.size(), 2u);
  }
  EXPECT_EQ(ParseStore(j.dump()).Validate().findings.size(), 2u);
}

TEST(InterchangeTest, FeaturesRequireEveryFieldButParaphrase) {
  Json f = ToJson(PrototypicalPassing());
  EXPECT_EQ(FeaturesFromJson(f), PrototypicalPassing());
  f.erase("palm_orientation");
  EXPECT_THROW(FeaturesFromJson(f), Error);
  GestureFeatures no_paraphrase;
  EXPECT_EQ(FeaturesFromJson(ToJson(no_paraphrase)), no_paraphrase);
  EXPECT_FALSE(ToJson(no_paraphrase).contains("paraphrase"));
}

TEST(InterchangeTest, ClassificationResultRoundTrips) {
  const ClassificationResult r = ClassifyTurnFrame(LateralPassing(), DefaultPrototypes());
  EXPECT_EQ(ClassificationResultFromJson(ToJson(r)), r);
}

TEST(InterchangeTest, NetworksExportUnderNetworksKey) {
  CommunicativeContext c{"Pedro", "interviewee", "now", "street", "interview", false};
  const Json j = ParseJson(ExportNetworks(ExplainGesture(SeedOntology(), "Turn_passing", c)));
  ASSERT_TRUE(j.contains("networks"));
  EXPECT_EQ(j["networks"].size(), 3u);
  EXPECT_EQ(j["schema_version"], "1");
}

TEST(InterchangePropertyTest, RandomStoresRoundTrip) {
  std::mt19937 rng(2026);
  size_t gestures = 0, sets = 0;
  for (int i = 0; i < 100; ++i) {
    const Store s = RandomStore(rng);
    gestures += s.gestures().size();
    sets += s.annotation_sets().size();
    const std::string once = ExportStore(s);
    const Store back = ImportStore(once);
    EXPECT_EQ(back, s) << "store " << i;
    EXPECT_EQ(ExportStore(back), once) << "store " << i;
  }
  // Guards against a generator that only emits empty stores.
  EXPECT_GT(gestures, 100u);
  EXPECT_GT(sets, 100u);
}

}  // namespace
}  // namespace framecast
