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

namespace framecast {

CorpusSummary Summarize(const Store &store) {
  CorpusSummary s;
  s.documents = static_cast<int64_t>(store.documents().size());
  s.annotation_sets = static_cast<int64_t>(store.annotation_sets().size());
  s.visual_objects = static_cast<int64_t>(store.visual_objects().size());
  s.gestures = static_cast<int64_t>(store.gestures().size());
  if (store.ontology().FindFrame(kTurnFamilyRoot) != nullptr) {
    for (const std::string &f : store.ontology().TurnFamily(kTurnFamilyRoot)) {
      s.gestures_by_frame[f] = 0;
    }
  }
  for (const auto &[id, g] : store.gestures()) {
    if (g.evoked_frame) {
      ++s.gestures_by_frame[*g.evoked_frame];
    } else {
      ++s.unclassified_gestures;
    }
  }
  return s;
}

std::vector<const GestureAnnotation *> GesturesOverlapping(
    const Store &store, std::string_view document, const TimeSpan &interval) {
  if (!(interval.start_ms < interval.end_ms)) {
    throw Error(ErrorCode::kEmptyInterval, "query interval must have start < end");
  }
  std::vector<std::pair<TimeSpan, const GestureAnnotation *>> hits;
  for (const auto &[id, g] : store.gestures()) {
    if (g.document != document) continue;
    const TimeSpan extent = store.GestureExtent(g);
    if (extent.Overlaps(interval)) hits.emplace_back(extent, &g);
  }
  std::sort(hits.begin(), hits.end(), [](const auto &a, const auto &b) {
    if (a.first.start_ms != b.first.start_ms) {
      return a.first.start_ms < b.first.start_ms;
    }
    return a.second->id < b.second->id;
  });
  std::vector<const GestureAnnotation *> out;
  out.reserve(hits.size());
  for (const auto &[extent, g] : hits) out.push_back(g);
  return out;
}

std::vector<const GestureAnnotation *> GesturesAlignedWithSentence(
    const Store &store, std::string_view sentence) {
  const Sentence *s = store.FindSentence(sentence);
  if (s == nullptr) {
    throw Error(ErrorCode::kUnknownEntity, "sentence " + std::string(sentence));
  }
  if (!s->time_span_ms) {
    throw Error(ErrorCode::kSentenceHasNoTimeSpan, "sentence " + s->id);
  }
  return GesturesOverlapping(store, s->document, *s->time_span_ms);
}

}  // namespace framecast
