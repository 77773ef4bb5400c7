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

#ifndef FRAMECAST_CLASSIFIER_H_
#define FRAMECAST_CLASSIFIER_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "framecast/gesture_features.h"

namespace framecast {

// Interactive-gesture classification.
//
// Stage one decides whether a gesture illustrates the topic of speech or
// addresses the interlocutor: a topic-illustrative gesture is a topic gesture;
// otherwise it is interactive only if its paraphrase is independent of the
// topic, is addressed to the interlocutor, and the hand is oriented toward
// the comprehender. Everything else is indeterminate.
//
// Stage two grades the features against one prototype per turn-organization
// frame. A prototype constrains a subset of fields, each to a set of accepted
// values with a positive weight. A field scores 1 on an accepted value, 0.5
// when the value is a near variant of an accepted one (extended_forward vs.
// extended_lateral arm, facing vs. beside comprehender) and 0 otherwise; the
// prototype score is the weighted mean over its constrained fields.

enum class Interactivity { kTopic, kInteractive, kIndeterminate };

std::string_view ToString(Interactivity v);
Interactivity ParseInteractivity(std::string_view s);

struct FieldConstraint {
  std::vector<std::string> accepted;  // value names, see FieldValues()
  double weight = 1.0;

  bool operator==(const FieldConstraint &other) const = default;
};

struct Prototype {
  std::string frame;
  std::map<FeatureField, FieldConstraint> constraints;

  bool operator==(const Prototype &other) const = default;
};

struct RankedFrame {
  std::string frame;
  double score = 0;

  bool operator==(const RankedFrame &other) const = default;
};

struct ClassificationResult {
  Interactivity interactivity = Interactivity::kIndeterminate;
  std::vector<RankedFrame> ranking;  // descending score, then frame name
  std::optional<std::string> verdict;
  double margin = 0;  // top score minus runner-up score

  bool operator==(const ClassificationResult &other) const = default;
};

struct ClassifierOptions {
  double tau = 0.6;    // minimum top score
  double delta = 0.1;  // minimum lead over the runner-up
};

// Scores closer than this are treated as equal.
inline constexpr double kScoreTolerance = 1e-9;

Interactivity ClassifyInteractivity(const GestureFeatures &features);

// Credit for one field value against an accepted set: 1, 0.5 or 0.
double FieldMatch(FeatureField field, std::string_view value,
                  const std::vector<std::string> &accepted);

double ScorePrototype(const GestureFeatures &features,
                      const Prototype &prototype);

// Throws Error(kEmptyPrototypeSet) on an empty table and
// Error(kInvalidArgument) on out-of-range options.
ClassificationResult ClassifyTurnFrame(const GestureFeatures &features,
                                       std::span<const Prototype> prototypes,
                                       const ClassifierOptions &options = {});

// Throws Error(kInvalidPrototype) on an empty constraint set, non-positive
// weights, unknown value names or duplicate frames.
void ValidatePrototypes(std::span<const Prototype> prototypes);

// The shipped table: Turn_passing, Turn_keeping, Turn_taking,
// Turn_confirmation and Assistance_request.
std::vector<Prototype> DefaultPrototypes();

}  // namespace framecast

#endif  // FRAMECAST_CLASSIFIER_H_
