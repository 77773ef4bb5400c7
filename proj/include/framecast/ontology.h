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

#ifndef FRAMECAST_ONTOLOGY_H_
#define FRAMECAST_ONTOLOGY_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "framecast/error.h"

namespace framecast {

enum class FrameKind { kSemantic, kPragmatic };
enum class Coreness { kCore, kPeripheral, kExtraThematic };
enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb, kInterjection, kOther };
enum class RelationKind { kInheritsFrom, kUses, kSubframeOf };

std::string_view ToString(FrameKind kind);
std::string_view ToString(Coreness coreness);
std::string_view ToString(PartOfSpeech pos);
std::string_view ToString(RelationKind kind);

// Parsers throw Error(kParseError) on unknown names.
FrameKind ParseFrameKind(std::string_view s);
Coreness ParseCoreness(std::string_view s);
PartOfSpeech ParsePartOfSpeech(std::string_view s);
RelationKind ParseRelationKind(std::string_view s);

// True for a non-empty ASCII identifier made of letters, digits and '_'.
bool IsIdentifier(std::string_view name);

struct FrameElement {
  std::string name;
  std::string definition;
  Coreness coreness = Coreness::kCore;

  bool operator==(const FrameElement &other) const = default;
};

struct Frame {
  std::string name;
  std::string definition;
  FrameKind kind = FrameKind::kSemantic;
  std::vector<FrameElement> frame_elements;

  const FrameElement *FindElement(std::string_view fe) const;
  bool operator==(const Frame &other) const = default;
};

struct LexicalUnit {
  std::string id;  // e.g. "have.v"; unique across the ontology
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kOther;
  std::string frame;

  bool operator==(const LexicalUnit &other) const = default;
};

// Pair of (source FE name, target FE name).
using FeBinding = std::pair<std::string, std::string>;

struct FrameRelation {
  std::string source;
  RelationKind kind = RelationKind::kUses;
  std::string target;
  std::vector<FeBinding> fe_bindings;

  // Relations are identified by (source, kind, target).
  auto Key() const { return std::tie(source, kind, target); }
  bool operator==(const FrameRelation &other) const = default;
};

// A frame element as seen from a frame, tagged with the frame defining it.
struct EffectiveFrameElement {
  FrameElement element;
  std::string origin;

  bool operator==(const EffectiveFrameElement &other) const = default;
};

// Frames, lexical units and frame-to-frame relations. Mutators enforce the
// invariants; Assemble() bypasses them so that loaded data can be reported
// on by Validate() instead of being rejected piecemeal.
//
// Single writer, many readers: const members never mutate.
class Ontology {
 public:
  Ontology() = default;

  // Builds an ontology without checks. Duplicate keys are reported as
  // findings by Validate().
  static Ontology Assemble(std::vector<Frame> frames,
                           std::vector<LexicalUnit> lexical_units,
                           std::vector<FrameRelation> relations);

  const Frame &DefineFrame(Frame frame);
  const Frame &DefineFrame(std::string name, std::string definition,
                           FrameKind kind,
                           std::vector<FrameElement> frame_elements);

  // Removes the frame only; references to it are left dangling.
  void RemoveFrame(std::string_view name);

  const LexicalUnit &AddLexicalUnit(LexicalUnit lu);

  const FrameRelation &AddRelation(std::string source, RelationKind kind,
                                   std::string target,
                                   std::vector<FeBinding> fe_bindings = {});

  const Frame *FindFrame(std::string_view name) const;
  const Frame &GetFrame(std::string_view name) const;  // throws kUnknownFrame
  const LexicalUnit *FindLexicalUnit(std::string_view id) const;

  const std::map<std::string, Frame, std::less<>> &frames() const {
    return frames_;
  }
  const std::map<std::string, LexicalUnit, std::less<>> &lexical_units() const {
    return lexical_units_;
  }
  // Sorted by (source, kind, target).
  const std::vector<FrameRelation> &relations() const { return relations_; }

  // Own FEs first, then FEs contributed through inherits_from and subframe_of
  // relations in relation order. Own FEs bound to an ancestor FE are reported
  // once, tagged with the ancestor that defines them.
  std::vector<EffectiveFrameElement> ResolveEffectiveFes(
      std::string_view frame) const;

  // Names of FEs in ResolveEffectiveFes(frame).
  std::set<std::string> EffectiveFeNames(std::string_view frame) const;

  // All transitive subframes of root, excluding root.
  std::set<std::string> TurnFamily(std::string_view root) const;

  ValidationReport Validate() const;

  bool operator==(const Ontology &other) const = default;

 private:
  // True if `to` is reachable from `from` along edges of one kind.
  bool Reaches(std::string_view from, std::string_view to,
               RelationKind kind) const;
  std::string TraceOrigin(std::string_view frame, std::string_view fe,
                          std::set<std::string> &visiting,
                          std::string *origin_fe) const;
  void ResolveInto(std::string_view frame,
                   std::vector<EffectiveFrameElement> &out,
                   std::set<std::string> &visiting) const;

  std::map<std::string, Frame, std::less<>> frames_;
  std::map<std::string, LexicalUnit, std::less<>> lexical_units_;
  std::vector<FrameRelation> relations_;
  // Keys that collided during Assemble().
  std::vector<std::string> duplicate_frames_;
  std::vector<std::string> duplicate_lus_;
};

}  // namespace framecast

#endif  // FRAMECAST_ONTOLOGY_H_
