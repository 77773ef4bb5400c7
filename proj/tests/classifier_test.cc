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

#include "framecast/classifier.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "testing.h"

namespace framecast {
namespace {

using namespace ::framecast::testing;

// Hand evaluation of the score formula, written without the library's
// matching code.
double OracleScore(const GestureFeatures &f, const Prototype &p) {
  static const std::set<std::pair<std::string, std::string>> kNear = {
      {"extended_forward", "extended_lateral"},
      {"extended_lateral", "extended_forward"},
      {"facing", "beside"},
      {"beside", "facing"}};
  double num = 0, den = 0;
  for (const auto &[field, c] : p.constraints) {
    const std::string v(FieldValue(f, field));
    double credit = 0;
    for (const std::string &a : c.accepted) {
      if (a == v) credit = std::max(credit, 1.0);
      if (kNear.contains({v, a})) credit = std::max(credit, 0.5);
    }
    num += c.weight * credit;
    den += c.weight;
  }
  return num / den;
}

const Prototype &Find(const std::vector<Prototype> &ps, const std::string &frame) {
  return *std::find_if(ps.begin(), ps.end(),
                       [&](const Prototype &p) { return p.frame == frame; });
}

GestureFeatures RandomFeatures(std::mt19937 &rng) {
  GestureFeatures f;
  for (int i = 0; i < kFeatureFieldCount; ++i) {
    const auto field = static_cast<FeatureField>(i);
    const auto values = FieldValues(field);
    SetFieldValue(f, field,
                  values[std::uniform_int_distribution<size_t>(0, values.size() - 1)(rng)]);
  }
  f.paraphrase = "p";
  return f;
}

TEST(InteractivityTest, StageOne) {
  GestureFeatures f = PrototypicalPassing();
  EXPECT_EQ(ClassifyInteractivity(f), Interactivity::kInteractive);
  f.topic_illustrative = true;
  EXPECT_EQ(ClassifyInteractivity(f), Interactivity::kTopic);
  f = PrototypicalPassing();
  f.paraphrase_addressed_to_interlocutor = false;
  EXPECT_EQ(ClassifyInteractivity(f), Interactivity::kIndeterminate);
  f = PrototypicalPassing();
  f.orientation_toward_comprehender = false;
  EXPECT_EQ(ClassifyInteractivity(f), Interactivity::kIndeterminate);
}

TEST(FieldMatchTest, ExactNearAndMiss) {
  EXPECT_EQ(FieldMatch(FeatureField::kArmConfiguration, "extended_forward",
                       {"extended_forward"}),
            1.0);
  EXPECT_EQ(FieldMatch(FeatureField::kArmConfiguration, "extended_lateral",
                       {"extended_forward"}),
            0.5);
  EXPECT_EQ(FieldMatch(FeatureField::kComprehenderPosition, "beside", {"facing"}), 0.5);
  EXPECT_EQ(FieldMatch(FeatureField::kArmConfiguration, "reaching",
                       {"extended_forward"}),
            0.0);
  EXPECT_EQ(FieldMatch(FeatureField::kMotionPattern, "beat", {"nod", "beat"}), 1.0);
}

TEST(ClassifierTest, GoldenVerdicts) {
  const auto ps = DefaultPrototypes();
  EXPECT_EQ(ClassifyTurnFrame(PrototypicalPassing(), ps).verdict, "Turn_passing");
  EXPECT_EQ(ClassifyTurnFrame(LateralPassing(), ps).verdict, "Turn_passing");
  EXPECT_EQ(ClassifyTurnFrame(Keeping(), ps).verdict, "Turn_keeping");
  EXPECT_EQ(ClassifyTurnFrame(Taking(), ps).verdict, "Turn_taking");
  EXPECT_EQ(ClassifyTurnFrame(CircularHelp(), ps).verdict, "Assistance_request");
  GestureFeatures forward_help = CircularHelp();
  forward_help.arm_configuration = ArmConfiguration::kExtendedForward;
  forward_help.comprehender_position = ComprehenderPosition::kFacing;
  EXPECT_EQ(ClassifyTurnFrame(forward_help, ps).verdict, "Assistance_request");
}

// Frozen oracle outputs for the shipped table.
TEST(ClassifierTest, FrozenScores) {
  const auto ps = DefaultPrototypes();
  const Prototype &passing = Find(ps, "Turn_passing");
  EXPECT_DOUBLE_EQ(OracleScore(PrototypicalPassing(), passing), 1.0);
  EXPECT_DOUBLE_EQ(OracleScore(LateralPassing(), passing), 0.9);
  EXPECT_DOUBLE_EQ(ScorePrototype(LateralPassing(), passing), 0.9);

  const ClassificationResult lateral = ClassifyTurnFrame(LateralPassing(), ps);
  ASSERT_EQ(lateral.ranking.size(), 5u);
  EXPECT_DOUBLE_EQ(lateral.ranking[0].score, 0.9);
  EXPECT_EQ(lateral.ranking[1].frame, "Assistance_request");
  EXPECT_DOUBLE_EQ(lateral.ranking[1].score, 0.5);
  EXPECT_DOUBLE_EQ(lateral.margin, 0.4);

  const ClassificationResult taking = ClassifyTurnFrame(Taking(), ps);
  EXPECT_DOUBLE_EQ(taking.ranking[0].score, 1.0);
  EXPECT_DOUBLE_EQ(taking.ranking[1].score, 0.4);
}

TEST(ClassifierTest, LibraryAgreesWithOracle) {
  const auto ps = DefaultPrototypes();
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const GestureFeatures f = RandomFeatures(rng);
    for (const Prototype &p : ps) {
      EXPECT_NEAR(ScorePrototype(f, p), OracleScore(f, p), 1e-12) << p.frame;
    }
  }
}

TEST(ClassifierTest, NonInteractiveHasNoVerdict) {
  GestureFeatures f = PrototypicalPassing();
  f.topic_illustrative = true;
  const ClassificationResult r = ClassifyTurnFrame(f, DefaultPrototypes());
  EXPECT_EQ(r.interactivity, Interactivity::kTopic);
  EXPECT_FALSE(r.verdict.has_value());
  EXPECT_EQ(r.ranking.size(), 5u);
}

TEST(ClassifierTest, ThresholdsGateTheVerdict) {
  const auto ps = DefaultPrototypes();
  EXPECT_FALSE(ClassifyTurnFrame(LateralPassing(), ps, {0.95, 0.1}).verdict);
  EXPECT_FALSE(ClassifyTurnFrame(LateralPassing(), ps, {0.6, 0.5}).verdict);
  // Boundaries are inclusive.
  EXPECT_EQ(ClassifyTurnFrame(LateralPassing(), ps, {0.9, 0.4}).verdict, "Turn_passing");
}

TEST(ClassifierTest, TiedTopHasNoVerdict) {
  Prototype a{"A", {{FeatureField::kPalmOrientation, {{"up"}, 1}}}};
  Prototype b{"B", {{FeatureField::kPalmOrientation, {{"up"}, 2}}}};
  const ClassificationResult r =
      ClassifyTurnFrame(PrototypicalPassing(), std::vector<Prototype>{b, a}, {0.6, 0.0});
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.ranking[0].frame, "A");  // ties rank by frame name
}

TEST(ClassifierTest, SinglePrototypeMarginIsItsScore) {
  const std::vector<Prototype> one = {Find(DefaultPrototypes(), "Turn_passing")};
  const ClassificationResult r = ClassifyTurnFrame(LateralPassing(), one);
  EXPECT_DOUBLE_EQ(r.margin, 0.9);
  EXPECT_EQ(r.verdict, "Turn_passing");
}

TEST(ClassifierTest, Errors) {
  try {
    ClassifyTurnFrame(PrototypicalPassing(), std::vector<Prototype>{});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyPrototypeSet);
  }
  EXPECT_THROW(ClassifyTurnFrame(PrototypicalPassing(), DefaultPrototypes(), {1.5, 0.1}),
               Error);
  EXPECT_THROW(ValidatePrototypes(std::vector<Prototype>{{"A", {}}}), Error);
  EXPECT_THROW(ValidatePrototypes(std::vector<Prototype>{
                   {"A", {{FeatureField::kPalmOrientation, {{"sideways"}, 1}}}}}),
               Error);
  EXPECT_THROW(ValidatePrototypes(std::vector<Prototype>{
                   {"A", {{FeatureField::kPalmOrientation, {{"up"}, 0}}}}}),
               Error);
  EXPECT_NO_THROW(ValidatePrototypes(DefaultPrototypes()));
}

TEST(ClassifierPropertyTest, WeightScalingInvariance) {
  std::mt19937 rng(3);
  const auto ps = DefaultPrototypes();
  for (double k : {0.25, 3.0, 17.5}) {
    std::vector<Prototype> scaled = ps;
    for (Prototype &p : scaled) {
      for (auto &[field, c] : p.constraints) c.weight *= k;
    }
    for (int i = 0; i < 200; ++i) {
      const GestureFeatures f = RandomFeatures(rng);
      EXPECT_EQ(ClassifyTurnFrame(f, ps), ClassifyTurnFrame(f, scaled));
    }
  }
}

TEST(ClassifierPropertyTest, MatchingAFieldNeverLowersTheScore) {
  std::mt19937 rng(5);
  for (const Prototype &p : DefaultPrototypes()) {
    for (int i = 0; i < 200; ++i) {
      GestureFeatures f = RandomFeatures(rng);
      for (const auto &[field, c] : p.constraints) {
        const double before = ScorePrototype(f, p);
        SetFieldValue(f, field, c.accepted.front());
        EXPECT_GE(ScorePrototype(f, p), before - 1e-12);
      }
      EXPECT_DOUBLE_EQ(ScorePrototype(f, p), 1.0);
    }
  }
}

TEST(ClassifierPropertyTest, PrototypeOrderDoesNotMatter) {
  std::mt19937 rng(9);
  std::vector<Prototype> ps = DefaultPrototypes();
  for (int i = 0; i < 200; ++i) {
    const GestureFeatures f = RandomFeatures(rng);
    const ClassificationResult base = ClassifyTurnFrame(f, ps);
    std::vector<Prototype> shuffled = ps;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(ClassifyTurnFrame(f, shuffled), base);
  }
}

TEST(ClassifierPropertyTest, ScoresStayInUnitInterval) {
  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    const ClassificationResult r = ClassifyTurnFrame(RandomFeatures(rng), DefaultPrototypes());
    for (size_t k = 0; k < r.ranking.size(); ++k) {
      EXPECT_GE(r.ranking[k].score, 0.0);
      EXPECT_LE(r.ranking[k].score, 1.0);
      if (k > 0) EXPECT_GE(r.ranking[k - 1].score, r.ranking[k].score);
    }
    EXPECT_GE(r.margin, 0.0);
  }
}

}  // namespace
}  // namespace framecast
