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

#include "paper_fixture.h"

#include <cstdio>
#include <string>

#include "framecast/classifier.h"

namespace framecast {

namespace {

constexpr int kEpisodes = 10;
constexpr int64_t kEpisodeMs = 23 * 60 * 1000;

GestureFeatures Interactive() {
  GestureFeatures f;
  f.paraphrase = "your turn";
  f.paraphrase_topic_independent = true;
  f.paraphrase_addressed_to_interlocutor = true;
  f.orientation_toward_comprehender = true;
  return f;
}

GestureFeatures Passing(bool lateral) {
  GestureFeatures f = Interactive();
  f.palm_orientation = PalmOrientation::kUp;
  f.arm_configuration = lateral ? ArmConfiguration::kExtendedLateral
                                : ArmConfiguration::kExtendedForward;
  f.motion_pattern = MotionPattern::kExtend;
  f.hand_shape = HandShape::kFingersFlexed;
  f.comprehender_position =
      lateral ? ComprehenderPosition::kBeside : ComprehenderPosition::kFacing;
  return f;
}

GestureFeatures Confirmation() {
  GestureFeatures f = Interactive();
  f.paraphrase = "go on";
  f.palm_orientation = PalmOrientation::kUp;
  f.arm_configuration = ArmConfiguration::kRetracted;
  f.motion_pattern = MotionPattern::kNod;
  return f;
}

GestureFeatures Taking() {
  GestureFeatures f = Interactive();
  f.paraphrase = "my turn";
  f.palm_orientation = PalmOrientation::kDown;
  f.arm_configuration = ArmConfiguration::kReaching;
  f.motion_pattern = MotionPattern::kExtend;
  f.hand_shape = HandShape::kGrasp;
  return f;
}

BoundingBoxTrack Track(int64_t start, int64_t end, double x, double y) {
  BoundingBoxTrack t;
  t.keyframes.push_back({start, Quantize({x, y, 0.12, 0.2})});
  t.keyframes.push_back({(start + end) / 2, Quantize({x + 0.05, y - 0.02, 0.12, 0.2})});
  t.keyframes.push_back({end, Quantize({x + 0.08, y, 0.12, 0.2})});
  return t;
}

std::string Id(const char *prefix, int n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%02d", prefix, n);
  return buf;
}

}  // namespace

Store MakePaperFixture(const Ontology &seed) {
  Store store(seed);
  for (int e = 1; e <= kEpisodes; ++e) {
    store.AddDocument({Id("ep", e), "Interview episode " + std::to_string(e),
                       {kEpisodeMs, 1280, 720}});
  }
  const std::vector<Prototype> prototypes = DefaultPrototypes();
  for (int i = 0; i < 48; ++i) {
    const std::string doc = Id("ep", i % kEpisodes + 1);
    const int64_t start = 60000 + (i / kEpisodes) * 180000 + (i % 3) * 7000;
    const int64_t end = start + 1200 + (i % 4) * 150;

    VisualObject hand{Id("hand", i + 1), doc, "Partes_do_corpo: mão",
                      "Body_parts", "mão.n", Track(start, end, 0.30, 0.55)};
    VisualObject head{Id("head", i + 1), doc, "Partes_do_corpo: cabeça",
                      "Body_parts", "cabeça.n",
                      Track(start + 100, end - 100, 0.42, 0.12)};
    store.PutVisualObject(hand);
    store.PutVisualObject(head);

    GestureAnnotation g;
    g.id = Id("g", i + 1);
    g.document = doc;
    g.members = {hand.id, head.id};
    if (i < 30) {
      g.features = Passing(i % 5 == 4);
      g.evoked_frame = "Turn_passing";
      g.fe_assignment = {{"Utterer", "Pedro Andrade"}, {"Comprehender", "interviewee"}};
    } else if (i < 46) {
      g.features = Confirmation();
      g.evoked_frame = "Turn_confirmation";
      g.fe_assignment = {{"Utterer", "interviewee"}, {"Comprehender", "Pedro Andrade"}};
    } else {
      g.features = Taking();
      g.evoked_frame = "Turn_taking";
      g.fe_assignment = {{"Utterer", "interviewee"}, {"Comprehender", "Pedro Andrade"}};
    }
    g.classifier_verdict = ClassifyTurnFrame(g.features, prototypes);
    store.CreateGesture(std::move(g));
  }
  return store;
}

}  // namespace framecast
