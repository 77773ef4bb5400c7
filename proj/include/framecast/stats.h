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

#ifndef FRAMECAST_STATS_H_
#define FRAMECAST_STATS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "framecast/annotation_store.h"

namespace framecast {

struct CorpusSummary {
  int64_t documents = 0;
  int64_t annotation_sets = 0;
  int64_t visual_objects = 0;
  int64_t gestures = 0;
  // Every turn-family frame has a bucket, even when empty.
  std::map<std::string, int64_t> gestures_by_frame;
  int64_t unclassified_gestures = 0;

  bool operator==(const CorpusSummary &other) const = default;
};

// Root of the turn-organization frame family.
inline constexpr std::string_view kTurnFamilyRoot = "Organization_of_conversation";

CorpusSummary Summarize(const Store &store);

// Gestures in `document` whose time extent shares positive measure with
// [interval.start_ms, interval.end_ms), ordered by extent start then id.
// Throws Error(kEmptyInterval) unless start < end.
std::vector<const GestureAnnotation *> GesturesOverlapping(
    const Store &store, std::string_view document, const TimeSpan &interval);

// GesturesOverlapping over the sentence's own document and time span.
// Throws Error(kSentenceHasNoTimeSpan) or Error(kUnknownEntity).
std::vector<const GestureAnnotation *> GesturesAlignedWithSentence(
    const Store &store, std::string_view sentence);

}  // namespace framecast

#endif  // FRAMECAST_STATS_H_
