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

#include "framecast/blend.h"

#include <random>

#include <gtest/gtest.h>

#include "testing.h"

namespace framecast {
namespace {

using namespace ::framecast::testing;

CommunicativeContext Interview() {
  return {"Pedro", "interviewee", "now", "street", "interview", false};
}

MentalSpace Values(std::initializer_list<const char *> ids) {
  MentalSpace s{"values", "values", SpaceKind::kInput, {}, std::nullopt};
  for (const char *id : ids) s.elements.push_back({id, id, std::nullopt});
  return s;
}

template <typename Fn>
ErrorCode CodeOf(Fn fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIoError;
}

TEST(FrameToValuesTest, CommercialEvent) {
  const Ontology o = SeedOntology();
  const MentalSpace values = Values({"I", "a friend", "a car"});
  const std::vector<ValueBinding> b = {
      {"I", "Buyer"}, {"a friend", "Seller"}, {"a car", "Goods"}};
  const CrossSpaceMapping m = FrameToValues(o, "Commercial_event", values, b);
  EXPECT_EQ(m.space_a, "Commercial_event.roles");
  EXPECT_EQ(m.space_b, "values");
  EXPECT_EQ(m.pairs, (std::set<std::pair<std::string, std::string>>{
                         {"Buyer", "I"}, {"Seller", "a friend"}, {"Goods", "a car"}}));
}

TEST(FrameToValuesTest, EmptyAndInvalidBindings) {
  const Ontology o = SeedOntology();
  const MentalSpace values = Values({"I", "a friend"});
  EXPECT_TRUE(FrameToValues(o, "Commercial_event", values, {}).pairs.empty());
  const std::vector<ValueBinding> twice = {{"I", "Buyer"}, {"a friend", "Buyer"}};
  EXPECT_EQ(CodeOf([&] { FrameToValues(o, "Commercial_event", values, twice); }),
            ErrorCode::kDuplicateBinding);
  const std::vector<ValueBinding> unknown_fe = {{"I", "Landlord"}};
  EXPECT_EQ(CodeOf([&] { FrameToValues(o, "Commercial_event", values, unknown_fe); }),
            ErrorCode::kUnknownFrameElement);
  const std::vector<ValueBinding> unknown_value = {{"the bank", "Buyer"}};
  EXPECT_EQ(CodeOf([&] { FrameToValues(o, "Commercial_event", values, unknown_value); }),
            ErrorCode::kUnknownSpaceElement);
}

TEST(RoleSpaceTest, OneElementPerEffectiveFe) {
  const MentalSpace s = RoleSpace(SeedOntology(), "Turn_passing");
  EXPECT_EQ(s.id, "Turn_passing.roles");
  EXPECT_EQ(s.elements.size(), 3u);
  EXPECT_EQ(s.structuring_frame, "Turn_passing");
}

TEST(BcsnTest, GroundNetwork) {
  const Bcsn n = BuildBcsn(Interview());
  EXPECT_EQ(n.spaces.size(), 4u);
  const MentalSpace *ground = n.Find(SpaceKind::kGroundBase);
  ASSERT_NE(ground, nullptr);
  EXPECT_EQ(ground->elements.size(), 4u);
  EXPECT_EQ(n.Find(SpaceKind::kSpeechAct)->label, "interview");
  EXPECT_TRUE(n.Find(SpaceKind::kEpistemic)->elements.empty());
  EXPECT_TRUE(n.Find(SpaceKind::kMetalinguistic)->elements.empty());
  EXPECT_EQ(n.Find(SpaceKind::kContentBase), nullptr);
}

TEST(BcsnTest, ContentSpaceOnRequest) {
  CommunicativeContext farewell{"utterer", "comprehender", "departure", "door",
                                "parting", true};
  const Bcsn with = BuildBcsn(farewell);
  EXPECT_EQ(with.spaces.size(), 5u);
  EXPECT_NE(with.Find(SpaceKind::kContentBase), nullptr);
  farewell.include_content = false;
  EXPECT_EQ(BuildBcsn(farewell).Find(SpaceKind::kContentBase), nullptr);
}

TEST(BcsnTest, DegenerateGround) {
  CommunicativeContext c = Interview();
  c.comprehender = c.utterer;
  EXPECT_EQ(CodeOf([&] { BuildBcsn(c); }), ErrorCode::kDegenerateGround);
}

TEST(BlendTest, FusesMappedCounterparts) {
  MentalSpace a{"a", "a", SpaceKind::kInput, {{"x", "x", {}}, {"y", "y", {}}}, {}};
  MentalSpace b{"b", "b", SpaceKind::kInput, {{"p", "p", {}}, {"q", "q", {}}}, {}};
  const IntegrationNetwork n =
      Blend({a, b}, {{"a", "b", {{"x", "p"}}}}, FuseMappedCounterparts(true));
  EXPECT_EQ(n.blend.kind, SpaceKind::kBlend);
  EXPECT_EQ(n.blend.elements.size(), 3u);
  EXPECT_EQ(n.projections.size(), 4u);
  EXPECT_EQ(OrphanViolation(n), "");
  const IntegrationNetwork mapped_only =
      Blend({a, b}, {{"a", "b", {{"x", "p"}}}}, FuseMappedCounterparts(false));
  EXPECT_EQ(mapped_only.blend.elements.size(), 1u);
}

TEST(BlendTest, Errors) {
  MentalSpace a{"a", "a", SpaceKind::kInput, {{"x", "x", {}}}, {}};
  MentalSpace b{"b", "b", SpaceKind::kInput, {{"p", "p", {}}}, {}};
  EXPECT_EQ(CodeOf([&] { Blend({a}, {}, FuseMappedCounterparts(true)); }),
            ErrorCode::kTooFewInputs);
  ProjectionSelector orphan = [](std::span<const MentalSpace>,
                                 std::span<const CrossSpaceMapping>) {
    return std::vector<ProjectedElement>{{{"ghost", "ghost", {}}, {}}};
  };
  EXPECT_EQ(CodeOf([&] { Blend({a, b}, {}, orphan); }), ErrorCode::kOrphanBlendElement);
  b.elements.push_back({"q", "q", {}});
  EXPECT_EQ(CodeOf([&] {
              Blend({a, b}, {{"a", "b", {{"x", "p"}, {"x", "q"}}}},
                    FuseMappedCounterparts(true));
            }),
            ErrorCode::kInvalidMapping);
}

TEST(ExplainGestureTest, TurnPassingChain) {
  const Ontology o = SeedOntology();
  const auto chain = ExplainGesture(o, "Turn_passing", Interview());
  ASSERT_EQ(chain.size(), 3u);
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    EXPECT_NE(chain[i + 1].FindInput(chain[i].blend.id), nullptr) << "stage " << i;
  }
  EXPECT_EQ(chain[2].blend.structuring_frame, "Turn_passing");
  EXPECT_EQ(chain[2].blend.FindElement("gesture")->label, "passing an object");
  EXPECT_EQ(chain[2].blend.FindElement("utterer")->role, "Utterer");
  for (const IntegrationNetwork &n : chain) EXPECT_EQ(OrphanViolation(n), "");
}

TEST(ExplainGestureTest, EveryBlendElementReachesAnInput) {
  const auto chain = ExplainGesture(SeedOntology(), "Turn_passing", Interview());
  std::set<std::string> blends;
  for (const auto &n : chain) blends.insert(n.blend.id);
  for (const auto &n : chain) {
    for (const SpaceElement &e : n.blend.elements) {
      const auto roots = TraceAncestry(chain, {n.blend.id, e.id});
      EXPECT_FALSE(roots.empty()) << n.blend.id << "." << e.id;
      for (const ElementRef &r : roots) EXPECT_FALSE(blends.contains(r.space));
    }
  }
}

TEST(ExplainGestureTest, ActionsPerFrame) {
  const Ontology o = SeedOntology();
  const std::pair<const char *, const char *> cases[] = {
      {"Turn_taking", "reaching for an object"},
      {"Turn_keeping", "keeping hold of an object"},
      {"Turn_confirmation", "letting the other keep the object"},
      {"Assistance_request", "asking for help to find an object"}};
  for (const auto &[frame, action] : cases) {
    const auto chain = ExplainGesture(o, frame, Interview());
    EXPECT_EQ(chain.back().blend.FindElement("gesture")->label, action) << frame;
    EXPECT_EQ(chain.back().blend.structuring_frame, frame);
  }
}

TEST(ExplainGestureTest, RejectsFramesOutsideTheFamily) {
  const Ontology o = SeedOntology();
  EXPECT_EQ(CodeOf([&] { ExplainGesture(o, "Possession", Interview()); }),
            ErrorCode::kFrameOutsideTurnFamily);
  EXPECT_EQ(CodeOf([&] { ExplainGesture(o, "Greetings", Interview()); }),
            ErrorCode::kFrameOutsideTurnFamily);
  EXPECT_EQ(CodeOf([&] { ExplainGesture(o, "Nope", Interview()); }),
            ErrorCode::kUnknownFrame);
}

TEST(BlendPropertyTest, RandomNetworksKeepInvariants) {
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    RandomBlendInputs in = RandomNetworkInputs(rng);
    const bool unmapped = i % 2 == 0;
    const IntegrationNetwork n =
        Blend(in.inputs, in.mappings, FuseMappedCounterparts(unmapped));
    for (const CrossSpaceMapping &m : n.mappings) {
      EXPECT_EQ(InjectivityViolation(m), "") << "network " << i;
    }
    EXPECT_EQ(OrphanViolation(n), "") << "network " << i;
    const std::vector<IntegrationNetwork> chain = {n};
    for (const SpaceElement &e : n.blend.elements) {
      EXPECT_FALSE(TraceAncestry(chain, {n.blend.id, e.id}).empty());
    }
  }
}

}  // namespace
}  // namespace framecast
