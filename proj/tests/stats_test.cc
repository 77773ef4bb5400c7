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

#include "framecast/stats.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "framecast/interchange.h"
#include "framecast/service.h"
#include "paper_fixture.h"
#include "testing.h"

namespace framecast {
namespace {

using namespace ::framecast::testing;

std::vector<std::string> Ids(const std::vector<const GestureAnnotation *> &gs) {
  std::vector<std::string> out;
  for (const auto *g : gs) out.push_back(g->id);
  return out;
}

Store OneGesture(int64_t start, int64_t end) {
  Store s = SeedStore();
  s.AddDocument({"d", "", {10000, 1, 1}});
  s.PutVisualObject({"v", "d", "m", "Body_parts", "mão.n",
                     {{{start, {0.1, 0.1, 0.1, 0.1}}, {end, {0.1, 0.1, 0.1, 0.1}}}}});
  s.CreateGesture("d", {"v"}, PrototypicalPassing(), {}, "Turn_passing");
  return s;
}

TEST(SummarizeTest, PaperShapedFixture) {
  const CorpusSummary s = Summarize(MakePaperFixture(SeedOntology()));
  EXPECT_EQ(s.gestures, 48);
  EXPECT_EQ(s.documents, 10);
  EXPECT_EQ(s.gestures_by_frame.at("Turn_passing"), 30);
  EXPECT_EQ(s.gestures_by_frame.at("Turn_confirmation"), 16);
  EXPECT_EQ(s.gestures_by_frame.at("Turn_taking"), 2);
  EXPECT_EQ(s.gestures_by_frame.at("Turn_keeping"), 0);
  EXPECT_EQ(s.unclassified_gestures, 0);
}

TEST(SummarizeTest, ShippedFixtureMatchesGenerator) {
  const std::string bytes = ReadFile(DataPath("paper_fixture.json"));
  EXPECT_EQ(ExportStore(MakePaperFixture(SeedOntology())), bytes);
}

TEST(SummarizeTest, EmptyStoreHasEmptyBuckets) {
  const CorpusSummary s = Summarize(SeedStore());
  EXPECT_EQ(s.gestures, 0);
  EXPECT_EQ(s.gestures_by_frame.size(), 4u);
  for (const auto &[frame, n] : s.gestures_by_frame) EXPECT_EQ(n, 0) << frame;
}

TEST(SummarizeTest, UnclassifiedBucket) {
  Store s = OneGesture(0, 100);
  GestureAnnotation g;
  g.document = "d";
  g.members = {"v"};
  s.CreateGesture(g);
  const CorpusSummary sum = Summarize(s);
  EXPECT_EQ(sum.unclassified_gestures, 1);
  EXPECT_EQ(sum.gestures_by_frame.at("Turn_passing"), 1);
}

TEST(SummarizeTest, AddingAGestureBumpsExactlyOneBucket) {
  std::mt19937 rng(17);
  const char *frames[] = {"Turn_passing", "Turn_taking", "Turn_keeping",
                          "Turn_confirmation", "Assistance_request", nullptr};
  for (int i = 0; i < 30; ++i) {
    Store s = RandomStore(rng);
    s.AddDocument({"extra", "", {10000, 1, 1}});
    s.PutVisualObject({"extra_v", "extra", "m", "Body_parts", "mão.n",
                       {{{0, {0.1, 0.1, 0.1, 0.1}}, {10, {0.1, 0.1, 0.1, 0.1}}}}});
    const CorpusSummary before = Summarize(s);
    GestureAnnotation g;
    g.document = "extra";
    g.members = {"extra_v"};
    if (const char *f = frames[i % 6]) g.evoked_frame = f;
    s.CreateGesture(g);
    const CorpusSummary after = Summarize(s);
    int64_t changed = after.unclassified_gestures - before.unclassified_gestures;
    for (const auto &[frame, n] : after.gestures_by_frame) {
      const auto it = before.gestures_by_frame.find(frame);
      changed += n - (it == before.gestures_by_frame.end() ? 0 : it->second);
    }
    EXPECT_EQ(changed, 1);
    EXPECT_EQ(after.gestures, before.gestures + 1);
  }
}

TEST(SummarizeTest, PermutationInvariant) {
  std::mt19937 rng(23);
  for (int i = 0; i < 20; ++i) {
    const Store s = RandomStore(rng);
    std::vector<GestureAnnotation> gestures;
    for (const auto &[id, g] : s.gestures()) gestures.push_back(g);
    std::vector<VisualObject> objects;
    for (const auto &[id, v] : s.visual_objects()) objects.push_back(v);
    std::vector<Document> docs;
    for (const auto &[id, d] : s.documents()) docs.push_back(d);
    std::vector<Sentence> sentences;
    for (const auto &[id, x] : s.sentences()) sentences.push_back(x);
    std::vector<AnnotationSet> sets;
    for (const auto &[id, a] : s.annotation_sets()) sets.push_back(a);
    std::shuffle(gestures.begin(), gestures.end(), rng);
    std::shuffle(objects.begin(), objects.end(), rng);
    std::shuffle(docs.begin(), docs.end(), rng);
    const Store shuffled =
        Store::Assemble(s.ontology(), docs, sentences, sets, objects, gestures);
    EXPECT_EQ(Summarize(shuffled), Summarize(s));
  }
}

TEST(OverlapTest, HalfOpenBoundaries) {
  const Store s = OneGesture(100, 500);
  EXPECT_EQ(GesturesOverlapping(s, "d", {400, 600}).size(), 1u);
  EXPECT_TRUE(GesturesOverlapping(s, "d", {500, 600}).empty());
  EXPECT_TRUE(GesturesOverlapping(s, "d", {0, 100}).empty());
  EXPECT_EQ(GesturesOverlapping(s, "d", {0, 101}).size(), 1u);
  EXPECT_EQ(GesturesOverlapping(s, "d", {200, 300}).size(), 1u);
  EXPECT_TRUE(GesturesOverlapping(s, "other", {0, 1000}).empty());
}

TEST(OverlapTest, EmptyInterval) {
  const Store s = OneGesture(100, 500);
  try {
    GesturesOverlapping(s, "d", {300, 300});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInterval);
  }
}

TEST(OverlapTest, AgreesWithBruteForce) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int64_t> t(0, 11000);
  for (int i = 0; i < 100; ++i) {
    const Store s = RandomOverlapStore(rng, 20);
    for (int q = 0; q < 10; ++q) {
      int64_t a = t(rng), b = t(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      EXPECT_EQ(Ids(GesturesOverlapping(s, "doc", {a, b})), OracleOverlapping(s, "doc", a, b));
    }
  }
}

TEST(AlignmentTest, SentenceSpans) {
  Store s = OneGesture(100, 500);
  s.AddSentence({"s1", "d", "você fala", TimeSpan{50, 600}});
  s.AddSentence({"s2", "d", "sem tempo", std::nullopt});
  s.AddSentence({"s3", "d", "depois", TimeSpan{500, 900}});
  EXPECT_EQ(GesturesAlignedWithSentence(s, "s1").size(), 1u);
  EXPECT_TRUE(GesturesAlignedWithSentence(s, "s3").empty());
  try {
    GesturesAlignedWithSentence(s, "s2");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kSentenceHasNoTimeSpan);
  }
  EXPECT_THROW(GesturesAlignedWithSentence(s, "s9"), Error);
}

TEST(AlignmentTest, TenSentencesMatchBruteForcePairing) {
  std::mt19937 rng(37);
  for (int round = 0; round < 20; ++round) {
    Store s = RandomOverlapStore(rng, 15);
    std::uniform_int_distribution<int64_t> t(0, 10000);
    std::set<std::pair<std::string, std::string>> got, want;
    for (int i = 0; i < 10; ++i) {
      int64_t a = t(rng), b = a + 1 + t(rng) % 2000;
      const std::string id = "s" + std::to_string(i);
      s.AddSentence({id, "doc", "frase", TimeSpan{a, b}});
      for (const auto *g : GesturesAlignedWithSentence(s, id)) got.emplace(id, g->id);
      for (const std::string &g : OracleOverlapping(s, "doc", a, b)) want.emplace(id, g);
    }
    EXPECT_EQ(got, want);
  }
}

}  // namespace
}  // namespace framecast
