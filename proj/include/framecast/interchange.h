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

#ifndef FRAMECAST_INTERCHANGE_H_
#define FRAMECAST_INTERCHANGE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "framecast/annotation_store.h"
#include "framecast/blend.h"
#include "framecast/classifier.h"
#include "framecast/ontology.h"
#include "framecast/stats.h"

namespace framecast {

// The interchange format is one UTF-8 JSON document:
//
//   {
//     "schema_version": "1",
//     "frames": [...], "lexical_units": [...], "relations": [...],
//     "documents": [...], "sentences": [...], "annotation_sets": [...],
//     "visual_objects": [...], "gestures": [...]
//   }
//
// Canonical form: object keys sorted, record arrays in id order (relations
// by source, kind, target), empty top-level arrays omitted, absent optional
// fields omitted, integers unpadded, box coordinates rounded to 6 decimals.
// Prototype tables use the same envelope with a "prototypes" key, and
// integration networks a "networks" key.

using Json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "1";

// Two-space indented dump with a trailing newline.
std::string CanonicalDump(const Json &json);

// Parses text, mapping syntax errors to Error(kParseError).
Json ParseJson(std::string_view text);

// Throws Error(kParseError) on a missing version and
// Error(kSchemaVersionUnsupported) on any version other than "1".
void CheckSchemaVersion(const Json &envelope);

Json ToJson(const Frame &frame);
Frame FrameFromJson(const Json &json);
Json ToJson(const LexicalUnit &lu);
LexicalUnit LexicalUnitFromJson(const Json &json);
Json ToJson(const FrameRelation &relation);
FrameRelation RelationFromJson(const Json &json);
Json ToJson(const EffectiveFrameElement &fe);

Json ToJson(const Document &document);
Document DocumentFromJson(const Json &json);
Json ToJson(const Sentence &sentence);
Sentence SentenceFromJson(const Json &json);
Json ToJson(const AnnotationSet &set);
AnnotationSet AnnotationSetFromJson(const Json &json);
Json ToJson(const VisualObject &object);
VisualObject VisualObjectFromJson(const Json &json);
Json ToJson(const GestureAnnotation &gesture);
GestureAnnotation GestureFromJson(const Json &json);

// Every field is required except "paraphrase".
Json ToJson(const GestureFeatures &features);
GestureFeatures FeaturesFromJson(const Json &json);

Json ToJson(const ClassificationResult &result);
ClassificationResult ClassificationResultFromJson(const Json &json);

Json ToJson(const Prototype &prototype);
Prototype PrototypeFromJson(const Json &json);

Json ToJson(const MentalSpace &space);
Json ToJson(const CrossSpaceMapping &mapping);
Json ToJson(const IntegrationNetwork &network);
Json ToJson(const Bcsn &bcsn);
CommunicativeContext ContextFromJson(const Json &json);

Json ToJson(const CorpusSummary &summary);
Json ToJson(const ValidationReport &report);

// Canonical bytes of a store. Throws ValidationError if it does not validate.
std::string ExportStore(const Store &store);

// Structural parse only; the result may fail Validate().
Store ParseStore(std::string_view bytes);

// ParseStore followed by validation; throws ValidationError on findings.
Store ImportStore(std::string_view bytes);

std::string ExportPrototypes(std::span<const Prototype> prototypes);
// Parses and validates a prototype table.
std::vector<Prototype> ImportPrototypes(std::string_view bytes);

std::string ExportNetworks(std::span<const IntegrationNetwork> networks);

}  // namespace framecast

#endif  // FRAMECAST_INTERCHANGE_H_
