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

#include "framecast/annotation_store.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace framecast {

namespace {

constexpr std::string_view kProvenanceNames[] = {"manual", "classifier"};

double Round6(double v) { return std::round(v * 1e6) / 1e6; }

void ThrowFirst(const ValidationReport &report) {
  if (!report.ok()) {
    const Finding &f = report.findings.front();
    throw Error(f.rule, f.entity + ": " + f.message);
  }
}

template <typename T>
std::string NextId(const Store::Table<T> &table, std::string_view prefix) {
  char buf[32];
  for (size_t n = table.size() + 1;; ++n) {
    std::snprintf(buf, sizeof(buf), "%.*s%06zu", static_cast<int>(prefix.size()),
                  prefix.data(), n);
    if (!table.contains(buf)) return buf;
  }
}

template <typename T>
void InsertAll(Store::Table<T> &table, std::vector<T> records,
               std::vector<std::string> &duplicates) {
  for (T &r : records) {
    std::string id = r.id;
    if (!table.emplace(id, std::move(r)).second) duplicates.push_back(id);
  }
}

bool SpanInBounds(const CharSpan &s, int64_t length) {
  return 0 <= s.start && s.start < s.end && s.end <= length;
}

}  // namespace

Box Quantize(const Box &b) {
  return {Round6(b.x), Round6(b.y), Round6(b.w), Round6(b.h)};
}

Box BoxAt(const BoundingBoxTrack &track, double t_ms) {
  const auto &kf = track.keyframes;
  if (kf.empty()) throw Error(ErrorCode::kInvalidTrack, "empty track");
  if (t_ms < static_cast<double>(kf.front().t_ms) ||
      t_ms > static_cast<double>(kf.back().t_ms)) {
    throw Error(ErrorCode::kTimeOutsideTrack,
                "t=" + std::to_string(t_ms) + " outside track");
  }
  // First keyframe with t >= t_ms.
  auto hi = std::lower_bound(
      kf.begin(), kf.end(), t_ms,
      [](const Keyframe &k, double t) { return static_cast<double>(k.t_ms) < t; });
  if (static_cast<double>(hi->t_ms) == t_ms) return hi->box;
  auto lo = std::prev(hi);
  const double a = (t_ms - static_cast<double>(lo->t_ms)) /
                   static_cast<double>(hi->t_ms - lo->t_ms);
  auto lerp = [a](double p, double q) { return p + (q - p) * a; };
  return {lerp(lo->box.x, hi->box.x), lerp(lo->box.y, hi->box.y),
          lerp(lo->box.w, hi->box.w), lerp(lo->box.h, hi->box.h)};
}

std::string_view ToString(Provenance p) {
  return kProvenanceNames[static_cast<int>(p)];
}

Provenance ParseProvenance(std::string_view s) {
  if (s == "manual") return Provenance::kManual;
  if (s == "classifier") return Provenance::kClassifier;
  throw Error(ErrorCode::kParseError, "unknown provenance '" + std::string(s) + "'");
}

int64_t Utf8Length(std::string_view text) {
  int64_t count = 0;
  size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    size_t len;
    uint32_t cp;
    if (c < 0x80) {
      len = 1;
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      throw Error(ErrorCode::kParseError, "malformed UTF-8");
    }
    if (i + len > text.size()) throw Error(ErrorCode::kParseError, "truncated UTF-8");
    for (size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) throw Error(ErrorCode::kParseError, "malformed UTF-8");
      cp = (cp << 6) | (cc & 0x3F);
    }
    static constexpr uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Error(ErrorCode::kParseError, "invalid code point in UTF-8");
    }
    i += len;
    ++count;
  }
  return count;
}

Store Store::Assemble(Ontology ontology, std::vector<Document> documents,
                      std::vector<Sentence> sentences,
                      std::vector<AnnotationSet> annotation_sets,
                      std::vector<VisualObject> visual_objects,
                      std::vector<GestureAnnotation> gestures) {
  Store s(std::move(ontology));
  InsertAll(s.documents_, std::move(documents), s.duplicate_ids_);
  InsertAll(s.sentences_, std::move(sentences), s.duplicate_ids_);
  InsertAll(s.annotation_sets_, std::move(annotation_sets), s.duplicate_ids_);
  InsertAll(s.visual_objects_, std::move(visual_objects), s.duplicate_ids_);
  InsertAll(s.gestures_, std::move(gestures), s.duplicate_ids_);
  return s;
}

const Document &Store::AddDocument(Document document) {
  ValidationReport r;
  if (documents_.contains(document.id)) {
    r.Add("document:" + document.id, ErrorCode::kDuplicateId, "id in use");
  }
  Check(document, r);
  ThrowFirst(r);
  std::string id = document.id;
  return documents_.emplace(std::move(id), std::move(document)).first->second;
}

const Sentence &Store::AddSentence(Sentence sentence) {
  ValidationReport r;
  if (sentences_.contains(sentence.id)) {
    r.Add("sentence:" + sentence.id, ErrorCode::kDuplicateId, "id in use");
  }
  Check(sentence, r);
  ThrowFirst(r);
  std::string id = sentence.id;
  return sentences_.emplace(std::move(id), std::move(sentence)).first->second;
}

const AnnotationSet &Store::CreateAnnotationSet(std::string sentence,
                                                std::string lu,
                                                CharSpan target_span,
                                                std::vector<FeLabel> fe_labels) {
  return CreateAnnotationSet(AnnotationSet{"", std::move(sentence), std::move(lu),
                                           target_span, std::move(fe_labels)});
}

const AnnotationSet &Store::CreateAnnotationSet(AnnotationSet set) {
  if (set.id.empty()) set.id = NextId(annotation_sets_, "as");
  ValidationReport r;
  if (annotation_sets_.contains(set.id)) {
    r.Add("annotation_set:" + set.id, ErrorCode::kDuplicateId, "id in use");
  }
  Check(set, r);
  ThrowFirst(r);
  std::string id = set.id;
  return annotation_sets_.emplace(std::move(id), std::move(set)).first->second;
}

const VisualObject &Store::PutVisualObject(VisualObject object) {
  for (Keyframe &k : object.track.keyframes) k.box = Quantize(k.box);
  ValidationReport r;
  Check(object, r);
  ThrowFirst(r);
  std::string id = object.id;
  return visual_objects_.insert_or_assign(std::move(id), std::move(object))
      .first->second;
}

const GestureAnnotation &Store::CreateGesture(
    std::string document, std::vector<std::string> members,
    GestureFeatures features, std::vector<ParticipantAssignment> fe_assignment,
    std::optional<std::string> evoked_frame) {
  GestureAnnotation g;
  g.document = std::move(document);
  g.members = std::move(members);
  g.features = std::move(features);
  g.fe_assignment = std::move(fe_assignment);
  g.evoked_frame = std::move(evoked_frame);
  g.provenance = Provenance::kManual;
  return CreateGesture(std::move(g));
}

const GestureAnnotation &Store::CreateGesture(GestureAnnotation gesture) {
  if (gesture.id.empty()) gesture.id = NextId(gestures_, "g");
  gesture.version = 1;
  ValidationReport r;
  if (gestures_.contains(gesture.id)) {
    r.Add("gesture:" + gesture.id, ErrorCode::kDuplicateId, "id in use");
  }
  Check(gesture, r);
  ThrowFirst(r);
  std::string id = gesture.id;
  return gestures_.emplace(std::move(id), std::move(gesture)).first->second;
}

const GestureAnnotation &Store::UpdateGesture(GestureAnnotation gesture,
                                              int64_t expected_version) {
  auto it = gestures_.find(gesture.id);
  if (it == gestures_.end()) {
    throw Error(ErrorCode::kUnknownEntity, "gesture " + gesture.id);
  }
  if (it->second.version != expected_version) {
    throw Error(ErrorCode::kStaleVersion,
                "gesture " + gesture.id + " is at version " +
                    std::to_string(it->second.version) + ", not " +
                    std::to_string(expected_version));
  }
  gesture.version = expected_version + 1;
  ValidationReport r;
  Check(gesture, r);
  ThrowFirst(r);
  it->second = std::move(gesture);
  return it->second;
}

const Document *Store::FindDocument(std::string_view id) const {
  auto it = documents_.find(id);
  return it == documents_.end() ? nullptr : &it->second;
}
const Sentence *Store::FindSentence(std::string_view id) const {
  auto it = sentences_.find(id);
  return it == sentences_.end() ? nullptr : &it->second;
}
const AnnotationSet *Store::FindAnnotationSet(std::string_view id) const {
  auto it = annotation_sets_.find(id);
  return it == annotation_sets_.end() ? nullptr : &it->second;
}
const VisualObject *Store::FindVisualObject(std::string_view id) const {
  auto it = visual_objects_.find(id);
  return it == visual_objects_.end() ? nullptr : &it->second;
}
const GestureAnnotation *Store::FindGesture(std::string_view id) const {
  auto it = gestures_.find(id);
  return it == gestures_.end() ? nullptr : &it->second;
}

std::vector<const Sentence *> Store::SentencesOf(std::string_view document) const {
  std::vector<const Sentence *> out;
  for (const auto &[id, s] : sentences_) {
    if (s.document == document) out.push_back(&s);
  }
  return out;
}

std::vector<const AnnotationSet *> Store::AnnotationSetsOfSentence(
    std::string_view sentence) const {
  std::vector<const AnnotationSet *> out;
  for (const auto &[id, a] : annotation_sets_) {
    if (a.sentence == sentence) out.push_back(&a);
  }
  return out;
}

std::vector<const AnnotationSet *> Store::AnnotationSetsOfFrame(
    std::string_view frame) const {
  std::vector<const AnnotationSet *> out;
  for (const auto &[id, a] : annotation_sets_) {
    const LexicalUnit *lu = ontology_.FindLexicalUnit(a.lu);
    if (lu != nullptr && lu->frame == frame) out.push_back(&a);
  }
  return out;
}

TimeSpan Store::GestureExtent(const GestureAnnotation &g) const {
  std::optional<TimeSpan> extent;
  for (const std::string &m : g.members) {
    const VisualObject *v = FindVisualObject(m);
    if (v == nullptr || v->track.keyframes.empty()) {
      throw Error(ErrorCode::kDanglingReference,
                  "gesture " + g.id + " member " + m);
    }
    const TimeSpan e = v->track.Extent();
    if (!extent) {
      extent = e;
    } else {
      extent->start_ms = std::min(extent->start_ms, e.start_ms);
      extent->end_ms = std::max(extent->end_ms, e.end_ms);
    }
  }
  if (!extent) throw Error(ErrorCode::kEmptyMembers, "gesture " + g.id);
  return *extent;
}

void Store::Check(const Document &d, ValidationReport &r) const {
  const std::string entity = "document:" + d.id;
  if (d.id.empty()) r.Add(entity, ErrorCode::kEmptyName, "id is empty");
  if (d.media.duration_ms < 0 || d.media.width_px <= 0 ||
      d.media.height_px <= 0) {
    r.Add(entity, ErrorCode::kInvalidMedia,
          "duration must be >= 0 and dimensions > 0");
  }
}

void Store::Check(const Sentence &s, ValidationReport &r) const {
  const std::string entity = "sentence:" + s.id;
  if (s.id.empty()) r.Add(entity, ErrorCode::kEmptyName, "id is empty");
  try {
    Utf8Length(s.text);
  } catch (const Error &e) {
    r.Add(entity, ErrorCode::kParseError, e.what());
  }
  const Document *d = FindDocument(s.document);
  if (d == nullptr) {
    r.Add(entity, ErrorCode::kDanglingReference,
          "document '" + s.document + "' does not exist");
    return;
  }
  if (s.time_span_ms) {
    const TimeSpan &t = *s.time_span_ms;
    if (!(0 <= t.start_ms && t.start_ms < t.end_ms &&
          t.end_ms <= d->media.duration_ms)) {
      r.Add(entity, ErrorCode::kTimeOutsideMedia,
            "time span must satisfy 0 <= start < end <= duration");
    }
  }
}

void Store::Check(const AnnotationSet &a, ValidationReport &r) const {
  const std::string entity = "annotation_set:" + a.id;
  if (a.id.empty()) r.Add(entity, ErrorCode::kEmptyName, "id is empty");
  const Sentence *s = FindSentence(a.sentence);
  const LexicalUnit *lu = ontology_.FindLexicalUnit(a.lu);
  if (s == nullptr) {
    r.Add(entity, ErrorCode::kDanglingReference,
          "sentence '" + a.sentence + "' does not exist");
  }
  if (lu == nullptr) {
    r.Add(entity, ErrorCode::kUnknownLexicalUnit,
          "lexical unit '" + a.lu + "' does not exist");
  }
  if (s != nullptr) {
    int64_t length = 0;
    try {
      length = Utf8Length(s->text);
    } catch (const Error &) {
    }
    if (!SpanInBounds(a.target_span, length)) {
      r.Add(entity, ErrorCode::kSpanOutOfBounds, "target span");
    }
    for (const FeLabel &l : a.fe_labels) {
      if (!SpanInBounds(l.span, length)) {
        r.Add(entity, ErrorCode::kSpanOutOfBounds, "span of " + l.fe);
      }
    }
  }
  std::vector<CharSpan> spans;
  for (const FeLabel &l : a.fe_labels) spans.push_back(l.span);
  std::sort(spans.begin(), spans.end(), [](const CharSpan &x, const CharSpan &y) {
    return std::tie(x.start, x.end) < std::tie(y.start, y.end);
  });
  for (size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].start < spans[i - 1].end) {
      r.Add(entity, ErrorCode::kOverlappingFeSpans, "frame element spans overlap");
      break;
    }
  }
  if (lu != nullptr && ontology_.FindFrame(lu->frame) != nullptr) {
    const std::set<std::string> names = ontology_.EffectiveFeNames(lu->frame);
    for (const FeLabel &l : a.fe_labels) {
      if (!names.contains(l.fe)) {
        r.Add(entity, ErrorCode::kUnknownFrameElement,
              "'" + l.fe + "' is not a frame element of " + lu->frame);
      }
    }
  } else if (lu != nullptr) {
    r.Add(entity, ErrorCode::kDanglingReference,
          "frame '" + lu->frame + "' does not exist");
  }
}

void Store::Check(const VisualObject &v, ValidationReport &r) const {
  const std::string entity = "visual_object:" + v.id;
  if (v.id.empty()) r.Add(entity, ErrorCode::kEmptyName, "id is empty");
  const Document *d = FindDocument(v.document);
  if (d == nullptr) {
    r.Add(entity, ErrorCode::kDanglingReference,
          "document '" + v.document + "' does not exist");
  }
  if (ontology_.FindFrame(v.category_frame) == nullptr) {
    r.Add(entity, ErrorCode::kDanglingReference,
          "frame '" + v.category_frame + "' does not exist");
  }
  const LexicalUnit *lu = ontology_.FindLexicalUnit(v.category_lu);
  if (lu == nullptr) {
    r.Add(entity, ErrorCode::kUnknownLexicalUnit,
          "lexical unit '" + v.category_lu + "' does not exist");
  } else if (lu->frame != v.category_frame) {
    r.Add(entity, ErrorCode::kCategoryMismatch,
          v.category_lu + " evokes " + lu->frame + ", not " + v.category_frame);
  }
  const auto &kf = v.track.keyframes;
  if (kf.empty()) {
    r.Add(entity, ErrorCode::kInvalidTrack, "track has no keyframes");
    return;
  }
  for (size_t i = 0; i < kf.size(); ++i) {
    if (i > 0 && kf[i].t_ms <= kf[i - 1].t_ms) {
      r.Add(entity, ErrorCode::kInvalidTrack,
            "keyframe times must strictly increase");
    }
    if (!kf[i].box.Valid()) {
      r.Add(entity, ErrorCode::kInvalidBox,
            "box at t=" + std::to_string(kf[i].t_ms) + " leaves the frame");
    }
  }
  if (d != nullptr &&
      (kf.front().t_ms < 0 || kf.back().t_ms > d->media.duration_ms)) {
    r.Add(entity, ErrorCode::kTimeOutsideMedia,
          "keyframes must lie within the media duration");
  }
}

void Store::Check(const GestureAnnotation &g, ValidationReport &r) const {
  const std::string entity = "gesture:" + g.id;
  if (g.id.empty()) r.Add(entity, ErrorCode::kEmptyName, "id is empty");
  if (g.version < 1) r.Add(entity, ErrorCode::kInvalidArgument, "version < 1");
  if (FindDocument(g.document) == nullptr) {
    r.Add(entity, ErrorCode::kDanglingReference,
          "document '" + g.document + "' does not exist");
  }
  if (g.members.empty()) {
    r.Add(entity, ErrorCode::kEmptyMembers, "a gesture needs a member object");
  }
  std::optional<TimeSpan> extent;
  std::set<std::string_view> seen;
  for (const std::string &m : g.members) {
    if (!seen.insert(m).second) {
      r.Add(entity, ErrorCode::kDuplicateId, "member '" + m + "' repeated");
    }
    const VisualObject *v = FindVisualObject(m);
    if (v == nullptr) {
      r.Add(entity, ErrorCode::kDanglingReference,
            "member '" + m + "' does not exist");
      continue;
    }
    if (v->document != g.document) {
      r.Add(entity, ErrorCode::kCrossDocumentMembers,
            "member '" + m + "' belongs to " + v->document);
    }
    if (v->track.keyframes.empty()) continue;
    const TimeSpan e = v->track.Extent();
    if (!extent) {
      extent = e;
    } else {
      extent->start_ms = std::min(extent->start_ms, e.start_ms);
      extent->end_ms = std::max(extent->end_ms, e.end_ms);
    }
  }
  if (extent && extent->start_ms >= extent->end_ms) {
    r.Add(entity, ErrorCode::kEmptyTimeExtent, "members span no time");
  }
  if (!g.features.Consistent()) {
    r.Add(entity, ErrorCode::kInconsistentFeatures,
          "paraphrase flags set without a paraphrase");
  }
  if (g.evoked_frame) {
    const Frame *f = ontology_.FindFrame(*g.evoked_frame);
    if (f == nullptr) {
      r.Add(entity, ErrorCode::kUnknownFrame, *g.evoked_frame);
      return;
    }
    if (f->kind != FrameKind::kPragmatic) {
      r.Add(entity, ErrorCode::kNonPragmaticFrame,
            *g.evoked_frame + " is not a pragmatic frame");
    }
    const std::set<std::string> names = ontology_.EffectiveFeNames(f->name);
    for (const ParticipantAssignment &p : g.fe_assignment) {
      if (!names.contains(p.fe)) {
        r.Add(entity, ErrorCode::kUnknownFrameElement,
              "'" + p.fe + "' is not a frame element of " + f->name);
      }
    }
  } else if (!g.fe_assignment.empty()) {
    r.Add(entity, ErrorCode::kUnknownFrameElement,
          "frame element assignment without an evoked frame");
  }
}

ValidationReport Store::Validate() const {
  ValidationReport r = ontology_.Validate();
  for (const std::string &id : duplicate_ids_) {
    r.Add("id:" + id, ErrorCode::kDuplicateId, "id used more than once");
  }
  for (const auto &[id, d] : documents_) Check(d, r);
  for (const auto &[id, s] : sentences_) Check(s, r);
  for (const auto &[id, a] : annotation_sets_) Check(a, r);
  for (const auto &[id, v] : visual_objects_) Check(v, r);
  for (const auto &[id, g] : gestures_) Check(g, r);
  return r;
}

}  // namespace framecast
