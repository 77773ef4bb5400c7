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

#ifndef FRAMECAST_GESTURE_FEATURES_H_
#define FRAMECAST_GESTURE_FEATURES_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace framecast {

enum class PalmOrientation { kUp, kDown, kTowardComprehender, kLateral, kInward };
enum class ArmConfiguration {
  kExtendedForward,
  kExtendedLateral,
  kBentUpward,
  kReaching,
  kRetracted
};
enum class MotionPattern { kStaticHold, kExtend, kRetract, kCircular, kBeat, kNod };
enum class HandShape { kOpenPalm, kFingersFlexed, kFingersExtended, kGrasp };
enum class ComprehenderPosition { kFacing, kBeside, kOther };

// Coded description of one gesture event.
struct GestureFeatures {
  bool topic_illustrative = false;
  std::optional<std::string> paraphrase;
  bool paraphrase_topic_independent = false;
  bool paraphrase_addressed_to_interlocutor = false;
  bool orientation_toward_comprehender = false;
  PalmOrientation palm_orientation = PalmOrientation::kUp;
  ArmConfiguration arm_configuration = ArmConfiguration::kExtendedForward;
  MotionPattern motion_pattern = MotionPattern::kStaticHold;
  HandShape hand_shape = HandShape::kOpenPalm;
  ComprehenderPosition comprehender_position = ComprehenderPosition::kFacing;

  // Paraphrase flags require a paraphrase.
  bool Consistent() const {
    return paraphrase.has_value() ||
           (!paraphrase_topic_independent &&
            !paraphrase_addressed_to_interlocutor);
  }

  bool operator==(const GestureFeatures &other) const = default;
};

// Fields a prototype may constrain. Declaration order is the scoring order.
enum class FeatureField {
  kTopicIllustrative,
  kParaphraseTopicIndependent,
  kParaphraseAddressedToInterlocutor,
  kOrientationTowardComprehender,
  kPalmOrientation,
  kArmConfiguration,
  kMotionPattern,
  kHandShape,
  kComprehenderPosition,
};
inline constexpr int kFeatureFieldCount = 9;

std::string_view ToString(FeatureField field);
FeatureField ParseFeatureField(std::string_view s);

// Value names accepted for a field, e.g. {"up", "down", ...} or
// {"false", "true"}.
std::span<const std::string_view> FieldValues(FeatureField field);

// Current value of `field` in `features`, as a value name.
std::string_view FieldValue(const GestureFeatures &features, FeatureField field);

// Sets `field` from a value name; throws Error(kParseError) if unknown.
void SetFieldValue(GestureFeatures &features, FeatureField field,
                   std::string_view value);

std::string_view ToString(PalmOrientation v);
std::string_view ToString(ArmConfiguration v);
std::string_view ToString(MotionPattern v);
std::string_view ToString(HandShape v);
std::string_view ToString(ComprehenderPosition v);

}  // namespace framecast

#endif  // FRAMECAST_GESTURE_FEATURES_H_
