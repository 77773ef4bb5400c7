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

#include "framecast/gesture_features.h"

#include "framecast/error.h"

namespace framecast {

namespace {

constexpr std::string_view kFieldNames[kFeatureFieldCount] = {
    "topic_illustrative",
    "paraphrase_topic_independent",
    "paraphrase_addressed_to_interlocutor",
    "orientation_toward_comprehender",
    "palm_orientation",
    "arm_configuration",
    "motion_pattern",
    "hand_shape",
    "comprehender_position",
};

constexpr std::string_view kBoolValues[] = {"false", "true"};
constexpr std::string_view kPalmValues[] = {"up", "down", "toward_comprehender",
                                            "lateral", "inward"};
constexpr std::string_view kArmValues[] = {"extended_forward",
                                           "extended_lateral", "bent_upward",
                                           "reaching", "retracted"};
constexpr std::string_view kMotionValues[] = {"static_hold", "extend",
                                              "retract",     "circular",
                                              "beat",        "nod"};
constexpr std::string_view kHandValues[] = {"open_palm", "fingers_flexed",
                                            "fingers_extended", "grasp"};
constexpr std::string_view kPositionValues[] = {"facing", "beside", "other"};

int IndexOf(FeatureField field, std::string_view value) {
  std::span<const std::string_view> values = FieldValues(field);
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] == value) return static_cast<int>(i);
  }
  throw Error(ErrorCode::kParseError, "unknown value '" + std::string(value) +
                                          "' for " +
                                          std::string(ToString(field)));
}

}  // namespace

std::string_view ToString(FeatureField field) {
  return kFieldNames[static_cast<int>(field)];
}

FeatureField ParseFeatureField(std::string_view s) {
  for (int i = 0; i < kFeatureFieldCount; ++i) {
    if (kFieldNames[i] == s) return static_cast<FeatureField>(i);
  }
  throw Error(ErrorCode::kParseError,
              "unknown feature field '" + std::string(s) + "'");
}

std::span<const std::string_view> FieldValues(FeatureField field) {
  switch (field) {
    case FeatureField::kTopicIllustrative:
    case FeatureField::kParaphraseTopicIndependent:
    case FeatureField::kParaphraseAddressedToInterlocutor:
    case FeatureField::kOrientationTowardComprehender:
      return kBoolValues;
    case FeatureField::kPalmOrientation: return kPalmValues;
    case FeatureField::kArmConfiguration: return kArmValues;
    case FeatureField::kMotionPattern: return kMotionValues;
    case FeatureField::kHandShape: return kHandValues;
    case FeatureField::kComprehenderPosition: return kPositionValues;
  }
  return {};
}

std::string_view FieldValue(const GestureFeatures &f, FeatureField field) {
  switch (field) {
    case FeatureField::kTopicIllustrative:
      return kBoolValues[f.topic_illustrative];
    case FeatureField::kParaphraseTopicIndependent:
      return kBoolValues[f.paraphrase_topic_independent];
    case FeatureField::kParaphraseAddressedToInterlocutor:
      return kBoolValues[f.paraphrase_addressed_to_interlocutor];
    case FeatureField::kOrientationTowardComprehender:
      return kBoolValues[f.orientation_toward_comprehender];
    case FeatureField::kPalmOrientation: return ToString(f.palm_orientation);
    case FeatureField::kArmConfiguration: return ToString(f.arm_configuration);
    case FeatureField::kMotionPattern: return ToString(f.motion_pattern);
    case FeatureField::kHandShape: return ToString(f.hand_shape);
    case FeatureField::kComprehenderPosition:
      return ToString(f.comprehender_position);
  }
  return {};
}

void SetFieldValue(GestureFeatures &f, FeatureField field,
                   std::string_view value) {
  int i = IndexOf(field, value);
  switch (field) {
    case FeatureField::kTopicIllustrative:
      f.topic_illustrative = i == 1;
      break;
    case FeatureField::kParaphraseTopicIndependent:
      f.paraphrase_topic_independent = i == 1;
      break;
    case FeatureField::kParaphraseAddressedToInterlocutor:
      f.paraphrase_addressed_to_interlocutor = i == 1;
      break;
    case FeatureField::kOrientationTowardComprehender:
      f.orientation_toward_comprehender = i == 1;
      break;
    case FeatureField::kPalmOrientation:
      f.palm_orientation = static_cast<PalmOrientation>(i);
      break;
    case FeatureField::kArmConfiguration:
      f.arm_configuration = static_cast<ArmConfiguration>(i);
      break;
    case FeatureField::kMotionPattern:
      f.motion_pattern = static_cast<MotionPattern>(i);
      break;
    case FeatureField::kHandShape:
      f.hand_shape = static_cast<HandShape>(i);
      break;
    case FeatureField::kComprehenderPosition:
      f.comprehender_position = static_cast<ComprehenderPosition>(i);
      break;
  }
}

std::string_view ToString(PalmOrientation v) {
  return kPalmValues[static_cast<int>(v)];
}
std::string_view ToString(ArmConfiguration v) {
  return kArmValues[static_cast<int>(v)];
}
std::string_view ToString(MotionPattern v) {
  return kMotionValues[static_cast<int>(v)];
}
std::string_view ToString(HandShape v) {
  return kHandValues[static_cast<int>(v)];
}
std::string_view ToString(ComprehenderPosition v) {
  return kPositionValues[static_cast<int>(v)];
}

}  // namespace framecast
