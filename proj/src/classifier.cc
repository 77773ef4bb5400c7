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
#include <set>
#include <utility>

#include "framecast/error.h"

namespace framecast {

namespace {

constexpr std::string_view kInteractivityNames[] = {"topic", "interactive",
                                                    "indeterminate"};

bool NearPair(FeatureField field, std::string_view a, std::string_view b) {
  auto is = [&](std::string_view x, std::string_view y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  switch (field) {
    case FeatureField::kArmConfiguration:
      return is("extended_forward", "extended_lateral");
    case FeatureField::kComprehenderPosition:
      return is("facing", "beside");
    default:
      return false;
  }
}

}  // namespace

std::string_view ToString(Interactivity v) {
  return kInteractivityNames[static_cast<int>(v)];
}

Interactivity ParseInteractivity(std::string_view s) {
  for (int i = 0; i < 3; ++i) {
    if (kInteractivityNames[i] == s) return static_cast<Interactivity>(i);
  }
  throw Error(ErrorCode::kParseError,
              "unknown interactivity '" + std::string(s) + "'");
}

Interactivity ClassifyInteractivity(const GestureFeatures &f) {
  if (f.topic_illustrative) return Interactivity::kTopic;
  if (f.paraphrase_topic_independent &&
      f.paraphrase_addressed_to_interlocutor &&
      f.orientation_toward_comprehender) {
    return Interactivity::kInteractive;
  }
  return Interactivity::kIndeterminate;
}

double FieldMatch(FeatureField field, std::string_view value,
                  const std::vector<std::string> &accepted) {
  double best = 0;
  for (const std::string &a : accepted) {
    if (a == value) return 1.0;
    if (NearPair(field, a, value)) best = 0.5;
  }
  return best;
}

double ScorePrototype(const GestureFeatures &features,
                      const Prototype &prototype) {
  double total = 0;
  double earned = 0;
  for (const auto &[field, constraint] : prototype.constraints) {
    total += constraint.weight;
    earned += constraint.weight *
              FieldMatch(field, FieldValue(features, field), constraint.accepted);
  }
  if (total <= 0) return 0;
  // Rounded so that equal rational scores compare equal when ranking.
  return std::clamp(std::round(earned / total * 1e12) / 1e12, 0.0, 1.0);
}

ClassificationResult ClassifyTurnFrame(const GestureFeatures &features,
                                       std::span<const Prototype> prototypes,
                                       const ClassifierOptions &options) {
  if (prototypes.empty()) {
    throw Error(ErrorCode::kEmptyPrototypeSet, "no prototypes to match");
  }
  if (!(options.tau >= 0 && options.tau <= 1) || !(options.delta >= 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tau must lie in [0,1] and delta must be non-negative");
  }

  ClassificationResult result;
  result.interactivity = ClassifyInteractivity(features);
  for (const Prototype &p : prototypes) {
    result.ranking.push_back({p.frame, ScorePrototype(features, p)});
  }
  std::sort(result.ranking.begin(), result.ranking.end(),
            [](const RankedFrame &a, const RankedFrame &b) {
              if (a.score != b.score) return a.score > b.score;
              return a.frame < b.frame;
            });

  const double top = result.ranking[0].score;
  const double second =
      result.ranking.size() > 1 ? result.ranking[1].score : 0.0;
  result.margin = top - second;

  const bool tied = result.ranking.size() > 1 &&
                    result.margin <= kScoreTolerance;
  if (result.interactivity == Interactivity::kInteractive && !tied &&
      top >= options.tau - kScoreTolerance &&
      result.margin >= options.delta - kScoreTolerance) {
    result.verdict = result.ranking[0].frame;
  }
  return result;
}

void ValidatePrototypes(std::span<const Prototype> prototypes) {
  std::set<std::string_view> frames;
  for (const Prototype &p : prototypes) {
    if (p.frame.empty()) {
      throw Error(ErrorCode::kInvalidPrototype, "prototype without a frame");
    }
    if (!frames.insert(p.frame).second) {
      throw Error(ErrorCode::kInvalidPrototype,
                  "two prototypes for " + p.frame);
    }
    if (p.constraints.empty()) {
      throw Error(ErrorCode::kInvalidPrototype,
                  p.frame + " constrains no fields");
    }
    for (const auto &[field, c] : p.constraints) {
      const std::string where = p.frame + "." + std::string(ToString(field));
      if (!(c.weight > 0)) {
        throw Error(ErrorCode::kInvalidPrototype, where + " weight must be > 0");
      }
      if (c.accepted.empty()) {
        throw Error(ErrorCode::kInvalidPrototype, where + " accepts no value");
      }
      std::span<const std::string_view> values = FieldValues(field);
      for (const std::string &v : c.accepted) {
        if (std::find(values.begin(), values.end(), v) == values.end()) {
          throw Error(ErrorCode::kInvalidPrototype,
                      where + " has unknown value '" + v + "'");
        }
      }
    }
  }
}

std::vector<Prototype> DefaultPrototypes() {
  using F = FeatureField;
  auto one = [](std::string v) { return FieldConstraint{{std::move(v)}, 1.0}; };
  std::vector<Prototype> table;
  table.push_back({"Turn_passing",
                   {{F::kOrientationTowardComprehender, one("true")},
                    {F::kPalmOrientation, one("up")},
                    {F::kArmConfiguration, one("extended_forward")},
                    {F::kMotionPattern, one("extend")},
                    {F::kHandShape, one("fingers_flexed")}}});
  table.push_back({"Turn_keeping",
                   {{F::kPalmOrientation, one("toward_comprehender")},
                    {F::kArmConfiguration, one("bent_upward")},
                    {F::kMotionPattern, one("static_hold")}}});
  table.push_back({"Turn_taking",
                   {{F::kOrientationTowardComprehender, one("true")},
                    {F::kArmConfiguration, one("reaching")},
                    {F::kHandShape, one("grasp")}}});
  // Placeholder: no physical form is on record for confirmation gestures.
  table.push_back({"Turn_confirmation",
                   {{F::kPalmOrientation, one("up")},
                    {F::kMotionPattern, FieldConstraint{{"nod", "beat"}, 1.0}}}});
  table.push_back({"Assistance_request",
                   {{F::kPalmOrientation, one("up")},
                    {F::kMotionPattern, one("circular")}}});
  return table;
}

}  // namespace framecast
