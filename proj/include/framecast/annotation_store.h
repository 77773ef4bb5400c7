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

#ifndef FRAMECAST_ANNOTATION_STORE_H_
#define FRAMECAST_ANNOTATION_STORE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framecast/classifier.h"
#include "framecast/error.h"
#include "framecast/gesture_features.h"
#include "framecast/ontology.h"

namespace framecast {

// Half-open interval of Unicode scalar values, [start, end).
struct CharSpan {
  int64_t start = 0;
  int64_t end = 0;

  bool operator==(const CharSpan &other) const = default;
};

// Half-open interval of milliseconds, [start_ms, end_ms).
struct TimeSpan {
  int64_t start_ms = 0;
  int64_t end_ms = 0;

  bool Overlaps(const TimeSpan &other) const {
    return start_ms < other.end_ms && other.start_ms < end_ms;
  }
  bool operator==(const TimeSpan &other) const = default;
};

struct MediaInfo {
  int64_t duration_ms = 0;
  int64_t width_px = 1;
  int64_t height_px = 1;

  bool operator==(const MediaInfo &other) const = default;
};

struct Document {
  std::string id;
  std::string title;
  MediaInfo media;

  bool operator==(const Document &other) const = default;
};

struct Sentence {
  std::string id;
  std::string document;
  std::string text;
  std::optional<TimeSpan> time_span_ms;

  bool operator==(const Sentence &other) const = default;
};

struct FeLabel {
  std::string fe;
  CharSpan span;

  bool operator==(const FeLabel &other) const = default;
};

struct AnnotationSet {
  std::string id;
  std::string sentence;
  std::string lu;
  CharSpan target_span;
  std::vector<FeLabel> fe_labels;

  bool operator==(const AnnotationSet &other) const = default;
};

// Box in coordinates normalized to the media frame, [0,1] on both axes.
struct Box {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  bool Valid() const {
    return x >= 0 && y >= 0 && w > 0 && h > 0 && x + w <= 1 && y + h <= 1;
  }
  bool operator==(const Box &other) const = default;
};

// Rounds every coordinate to 6 decimal places, the stored precision.
Box Quantize(const Box &box);

struct Keyframe {
  int64_t t_ms = 0;
  Box box;

  bool operator==(const Keyframe &other) const = default;
};

struct BoundingBoxTrack {
  std::vector<Keyframe> keyframes;  // strictly increasing t_ms

  // [first t, last t). Requires a non-empty track.
  TimeSpan Extent() const {
    return {keyframes.front().t_ms, keyframes.back().t_ms};
  }
  bool operator==(const BoundingBoxTrack &other) const = default;
};

// Box at t_ms: the keyframe box on an exact hit, else the component-wise
// linear interpolation of the surrounding keyframes. Throws
// Error(kTimeOutsideTrack) outside [first t, last t] and Error(kInvalidTrack)
// on an empty track.
Box BoxAt(const BoundingBoxTrack &track, double t_ms);

struct VisualObject {
  std::string id;
  std::string document;
  std::string cv_name;  // e.g. "Partes_do_corpo: mão"
  std::string category_frame;
  std::string category_lu;
  BoundingBoxTrack track;

  bool operator==(const VisualObject &other) const = default;
};

enum class Provenance { kManual, kClassifier };
std::string_view ToString(Provenance p);
Provenance ParseProvenance(std::string_view s);

struct ParticipantAssignment {
  std::string fe;
  std::string participant;  // free label; need not be on screen

  bool operator==(const ParticipantAssignment &other) const = default;
};

struct GestureAnnotation {
  std::string id;
  std::string document;
  std::vector<std::string> members;  // visual object ids, e.g. hand + head
  GestureFeatures features;
  std::optional<std::string> evoked_frame;
  std::vector<ParticipantAssignment> fe_assignment;
  Provenance provenance = Provenance::kManual;
  std::optional<ClassificationResult> classifier_verdict;
  int64_t version = 1;

  bool operator==(const GestureAnnotation &other) const = default;
};

// Number of Unicode scalar values in a UTF-8 string. Throws
// Error(kParseError) on malformed UTF-8.
int64_t Utf8Length(std::string_view text);

// Documents, sentences, annotation sets, visual objects and gestures over an
// ontology. Every mutator validates the record it adds and throws Error with
// the first broken rule; the store is left unchanged on failure.
//
// Single writer, many readers.
class Store {
 public:
  Store() = default;
  explicit Store(Ontology ontology) : ontology_(std::move(ontology)) {}

  // Builds a store without checks; see Validate().
  static Store Assemble(Ontology ontology, std::vector<Document> documents,
                        std::vector<Sentence> sentences,
                        std::vector<AnnotationSet> annotation_sets,
                        std::vector<VisualObject> visual_objects,
                        std::vector<GestureAnnotation> gestures);

  Ontology &ontology() { return ontology_; }
  const Ontology &ontology() const { return ontology_; }

  const Document &AddDocument(Document document);
  const Sentence &AddSentence(Sentence sentence);

  // An empty id is replaced by the next free "as<NNNNNN>".
  const AnnotationSet &CreateAnnotationSet(AnnotationSet set);
  const AnnotationSet &CreateAnnotationSet(std::string sentence, std::string lu,
                                           CharSpan target_span,
                                           std::vector<FeLabel> fe_labels);

  // Coordinates are quantized before validation. Replaces an existing object
  // with the same id.
  const VisualObject &PutVisualObject(VisualObject object);

  // An empty id is replaced by the next free "g<NNNNNN>". The version is
  // reset to 1.
  const GestureAnnotation &CreateGesture(GestureAnnotation gesture);
  const GestureAnnotation &CreateGesture(
      std::string document, std::vector<std::string> members,
      GestureFeatures features, std::vector<ParticipantAssignment> fe_assignment,
      std::optional<std::string> evoked_frame = std::nullopt);

  // Replaces a gesture if `expected_version` matches the stored version;
  // throws Error(kStaleVersion) otherwise. The stored version becomes
  // expected_version + 1.
  const GestureAnnotation &UpdateGesture(GestureAnnotation gesture,
                                         int64_t expected_version);

  const Document *FindDocument(std::string_view id) const;
  const Sentence *FindSentence(std::string_view id) const;
  const AnnotationSet *FindAnnotationSet(std::string_view id) const;
  const VisualObject *FindVisualObject(std::string_view id) const;
  const GestureAnnotation *FindGesture(std::string_view id) const;

  template <typename T>
  using Table = std::map<std::string, T, std::less<>>;

  const Table<Document> &documents() const { return documents_; }
  const Table<Sentence> &sentences() const { return sentences_; }
  const Table<AnnotationSet> &annotation_sets() const { return annotation_sets_; }
  const Table<VisualObject> &visual_objects() const { return visual_objects_; }
  const Table<GestureAnnotation> &gestures() const { return gestures_; }

  std::vector<const Sentence *> SentencesOf(std::string_view document) const;
  std::vector<const AnnotationSet *> AnnotationSetsOfSentence(
      std::string_view sentence) const;
  std::vector<const AnnotationSet *> AnnotationSetsOfFrame(
      std::string_view frame) const;

  // [min first keyframe, max last keyframe) over the member tracks. Throws
  // Error(kDanglingReference) if a member is missing.
  TimeSpan GestureExtent(const GestureAnnotation &gesture) const;

  // Ontology findings followed by findings for every record.
  ValidationReport Validate() const;

  bool operator==(const Store &other) const = default;

 private:
  void Check(const Document &d, ValidationReport &r) const;
  void Check(const Sentence &s, ValidationReport &r) const;
  void Check(const AnnotationSet &a, ValidationReport &r) const;
  void Check(const VisualObject &v, ValidationReport &r) const;
  void Check(const GestureAnnotation &g, ValidationReport &r) const;

  Ontology ontology_;
  Table<Document> documents_;
  Table<Sentence> sentences_;
  Table<AnnotationSet> annotation_sets_;
  Table<VisualObject> visual_objects_;
  Table<GestureAnnotation> gestures_;
  std::vector<std::string> duplicate_ids_;
};

}  // namespace framecast

#endif  // FRAMECAST_ANNOTATION_STORE_H_
