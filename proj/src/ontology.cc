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

#include "framecast/ontology.h"

#include <algorithm>
#include <deque>

namespace framecast {

namespace {

template <typename Enum, size_t N>
Enum ParseEnum(std::string_view s, const std::string_view (&names)[N],
               std::string_view what) {
  for (size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<Enum>(i);
  }
  throw Error(ErrorCode::kParseError,
              "unknown " + std::string(what) + " '" + std::string(s) + "'");
}

constexpr std::string_view kFrameKindNames[] = {"semantic", "pragmatic"};
constexpr std::string_view kCorenessNames[] = {"core", "peripheral",
                                               "extra_thematic"};
constexpr std::string_view kPosNames[] = {"noun",   "verb",         "adjective",
                                          "adverb", "interjection", "other"};
constexpr std::string_view kRelationNames[] = {"inherits_from", "uses",
                                               "subframe_of"};

bool FeedsFeResolution(RelationKind kind) {
  return kind == RelationKind::kInheritsFrom ||
         kind == RelationKind::kSubframeOf;
}

std::string RelationEntity(const FrameRelation &r) {
  return "relation:" + r.source + "/" + std::string(ToString(r.kind)) + "/" +
         r.target;
}

}  // namespace

std::string_view ToString(FrameKind kind) {
  return kFrameKindNames[static_cast<int>(kind)];
}
std::string_view ToString(Coreness coreness) {
  return kCorenessNames[static_cast<int>(coreness)];
}
std::string_view ToString(PartOfSpeech pos) {
  return kPosNames[static_cast<int>(pos)];
}
std::string_view ToString(RelationKind kind) {
  return kRelationNames[static_cast<int>(kind)];
}

FrameKind ParseFrameKind(std::string_view s) {
  return ParseEnum<FrameKind>(s, kFrameKindNames, "frame kind");
}
Coreness ParseCoreness(std::string_view s) {
  return ParseEnum<Coreness>(s, kCorenessNames, "coreness");
}
PartOfSpeech ParsePartOfSpeech(std::string_view s) {
  return ParseEnum<PartOfSpeech>(s, kPosNames, "part of speech");
}
RelationKind ParseRelationKind(std::string_view s) {
  return ParseEnum<RelationKind>(s, kRelationNames, "relation kind");
}

bool IsIdentifier(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

const FrameElement *Frame::FindElement(std::string_view fe) const {
  for (const FrameElement &e : frame_elements) {
    if (e.name == fe) return &e;
  }
  return nullptr;
}

Ontology Ontology::Assemble(std::vector<Frame> frames,
                            std::vector<LexicalUnit> lexical_units,
                            std::vector<FrameRelation> relations) {
  Ontology o;
  for (Frame &f : frames) {
    std::string name = f.name;
    if (!o.frames_.emplace(name, std::move(f)).second) {
      o.duplicate_frames_.push_back(name);
    }
  }
  for (LexicalUnit &lu : lexical_units) {
    std::string id = lu.id;
    if (!o.lexical_units_.emplace(id, std::move(lu)).second) {
      o.duplicate_lus_.push_back(id);
    }
  }
  o.relations_ = std::move(relations);
  std::stable_sort(o.relations_.begin(), o.relations_.end(),
                   [](const FrameRelation &a, const FrameRelation &b) {
                     return a.Key() < b.Key();
                   });
  return o;
}

const Frame &Ontology::DefineFrame(std::string name, std::string definition,
                                   FrameKind kind,
                                   std::vector<FrameElement> frame_elements) {
  return DefineFrame(Frame{std::move(name), std::move(definition), kind,
                           std::move(frame_elements)});
}

const Frame &Ontology::DefineFrame(Frame frame) {
  if (frame.name.empty()) {
    throw Error(ErrorCode::kEmptyName, "frame name is empty");
  }
  if (!IsIdentifier(frame.name)) {
    throw Error(ErrorCode::kInvalidName,
                "frame name '" + frame.name + "' is not an identifier");
  }
  if (frames_.contains(frame.name)) {
    throw Error(ErrorCode::kDuplicateFrameName, frame.name);
  }
  std::set<std::string_view> seen;
  for (const FrameElement &fe : frame.frame_elements) {
    if (fe.name.empty()) {
      throw Error(ErrorCode::kEmptyName, "frame element name in " + frame.name);
    }
    if (!IsIdentifier(fe.name)) {
      throw Error(ErrorCode::kInvalidName,
                  "frame element '" + fe.name + "' is not an identifier");
    }
    if (!seen.insert(fe.name).second) {
      throw Error(ErrorCode::kDuplicateFrameElement,
                  frame.name + "." + fe.name);
    }
  }
  std::string name = frame.name;
  return frames_.emplace(std::move(name), std::move(frame)).first->second;
}

void Ontology::RemoveFrame(std::string_view name) {
  auto it = frames_.find(name);
  if (it == frames_.end()) {
    throw Error(ErrorCode::kUnknownFrame, std::string(name));
  }
  frames_.erase(it);
}

const LexicalUnit &Ontology::AddLexicalUnit(LexicalUnit lu) {
  if (lu.id.empty() || lu.lemma.empty()) {
    throw Error(ErrorCode::kEmptyName, "lexical unit id and lemma required");
  }
  if (!frames_.contains(lu.frame)) {
    throw Error(ErrorCode::kUnknownFrame, lu.frame);
  }
  if (lexical_units_.contains(lu.id)) {
    throw Error(ErrorCode::kDuplicateLexicalUnit, lu.id);
  }
  for (const auto &[id, other] : lexical_units_) {
    if (other.lemma == lu.lemma && other.pos == lu.pos &&
        other.frame == lu.frame) {
      throw Error(ErrorCode::kDuplicateLexicalUnit,
                  lu.lemma + " already evokes " + lu.frame + " as " + id);
    }
  }
  std::string id = lu.id;
  return lexical_units_.emplace(std::move(id), std::move(lu)).first->second;
}

const FrameRelation &Ontology::AddRelation(std::string source,
                                           RelationKind kind,
                                           std::string target,
                                           std::vector<FeBinding> fe_bindings) {
  const Frame &src = GetFrame(source);
  const Frame &tgt = GetFrame(target);
  if (source == target) {
    throw Error(ErrorCode::kCycleDetected,
                "relation from " + source + " to itself");
  }
  for (const auto &[s, t] : fe_bindings) {
    if (src.FindElement(s) == nullptr || tgt.FindElement(t) == nullptr) {
      throw Error(ErrorCode::kUnknownFrameElementInBinding,
                  source + "." + s + " -> " + target + "." + t);
    }
  }
  FrameRelation rel{std::move(source), kind, std::move(target),
                    std::move(fe_bindings)};
  auto pos = std::lower_bound(relations_.begin(), relations_.end(), rel,
                              [](const FrameRelation &a, const FrameRelation &b) {
                                return a.Key() < b.Key();
                              });
  if (pos != relations_.end() && pos->Key() == rel.Key()) {
    throw Error(ErrorCode::kDuplicateRelation, RelationEntity(rel));
  }
  if (Reaches(rel.target, rel.source, kind)) {
    throw Error(ErrorCode::kCycleDetected, RelationEntity(rel));
  }
  return *relations_.insert(pos, std::move(rel));
}

const Frame *Ontology::FindFrame(std::string_view name) const {
  auto it = frames_.find(name);
  return it == frames_.end() ? nullptr : &it->second;
}

const Frame &Ontology::GetFrame(std::string_view name) const {
  const Frame *f = FindFrame(name);
  if (f == nullptr) throw Error(ErrorCode::kUnknownFrame, std::string(name));
  return *f;
}

const LexicalUnit *Ontology::FindLexicalUnit(std::string_view id) const {
  auto it = lexical_units_.find(id);
  return it == lexical_units_.end() ? nullptr : &it->second;
}

bool Ontology::Reaches(std::string_view from, std::string_view to,
                       RelationKind kind) const {
  std::set<std::string_view> seen{from};
  std::deque<std::string_view> queue{from};
  while (!queue.empty()) {
    std::string_view cur = queue.front();
    queue.pop_front();
    if (cur == to) return true;
    for (const FrameRelation &r : relations_) {
      if (r.kind == kind && r.source == cur && seen.insert(r.target).second) {
        queue.push_back(r.target);
      }
    }
  }
  return false;
}

std::string Ontology::TraceOrigin(std::string_view frame, std::string_view fe,
                                  std::set<std::string> &visiting,
                                  std::string *origin_fe) const {
  for (const FrameRelation &r : relations_) {
    if (r.source != frame || !FeedsFeResolution(r.kind)) continue;
    if (visiting.contains(r.target)) continue;
    const Frame *target = FindFrame(r.target);
    if (target == nullptr) continue;
    for (const auto &[s, t] : r.fe_bindings) {
      if (s != fe || target->FindElement(t) == nullptr) continue;
      visiting.insert(r.target);
      std::string origin = TraceOrigin(r.target, t, visiting, origin_fe);
      visiting.erase(r.target);
      return origin;
    }
  }
  *origin_fe = std::string(fe);
  return std::string(frame);
}

void Ontology::ResolveInto(std::string_view frame,
                           std::vector<EffectiveFrameElement> &out,
                           std::set<std::string> &visiting) const {
  const Frame *f = FindFrame(frame);
  if (f == nullptr || visiting.contains(f->name)) return;
  visiting.insert(f->name);

  auto present = [&out](const std::string &origin, const std::string &name) {
    return std::any_of(out.begin(), out.end(),
                       [&](const EffectiveFrameElement &e) {
                         return e.origin == origin && e.element.name == name;
                       });
  };

  for (const FrameElement &fe : f->frame_elements) {
    std::string origin_fe;
    std::string origin = TraceOrigin(f->name, fe.name, visiting, &origin_fe);
    const FrameElement *def = &fe;
    if (origin != f->name) def = GetFrame(origin).FindElement(origin_fe);
    if (!present(origin, def->name)) out.push_back({*def, origin});
  }
  for (const FrameRelation &r : relations_) {
    if (r.source != f->name || r.kind != RelationKind::kInheritsFrom) continue;
    std::vector<EffectiveFrameElement> inherited;
    ResolveInto(r.target, inherited, visiting);
    for (EffectiveFrameElement &e : inherited) {
      if (!present(e.origin, e.element.name)) out.push_back(std::move(e));
    }
  }
  visiting.erase(f->name);
}

std::vector<EffectiveFrameElement> Ontology::ResolveEffectiveFes(
    std::string_view frame) const {
  GetFrame(frame);
  std::vector<EffectiveFrameElement> out;
  std::set<std::string> visiting;
  ResolveInto(frame, out, visiting);
  return out;
}

std::set<std::string> Ontology::EffectiveFeNames(std::string_view frame) const {
  std::set<std::string> names;
  for (const EffectiveFrameElement &e : ResolveEffectiveFes(frame)) {
    names.insert(e.element.name);
  }
  return names;
}

std::set<std::string> Ontology::TurnFamily(std::string_view root) const {
  GetFrame(root);
  std::set<std::string> family;
  std::deque<std::string> queue{std::string(root)};
  while (!queue.empty()) {
    std::string cur = std::move(queue.front());
    queue.pop_front();
    for (const FrameRelation &r : relations_) {
      if (r.kind == RelationKind::kSubframeOf && r.target == cur &&
          r.source != root && family.insert(r.source).second) {
        queue.push_back(r.source);
      }
    }
  }
  return family;
}

ValidationReport Ontology::Validate() const {
  ValidationReport report;
  for (const std::string &name : duplicate_frames_) {
    report.Add("frame:" + name, ErrorCode::kDuplicateFrameName,
               "frame defined more than once");
  }
  for (const std::string &id : duplicate_lus_) {
    report.Add("lu:" + id, ErrorCode::kDuplicateLexicalUnit,
               "lexical unit id used more than once");
  }

  for (const auto &[name, frame] : frames_) {
    const std::string entity = "frame:" + name;
    if (name.empty()) {
      report.Add(entity, ErrorCode::kEmptyName, "frame name is empty");
    } else if (!IsIdentifier(name)) {
      report.Add(entity, ErrorCode::kInvalidName, "not an identifier");
    }
    std::set<std::string_view> seen;
    for (const FrameElement &fe : frame.frame_elements) {
      if (!IsIdentifier(fe.name)) {
        report.Add(entity, fe.name.empty() ? ErrorCode::kEmptyName
                                           : ErrorCode::kInvalidName,
                   "bad frame element name '" + fe.name + "'");
      }
      if (!seen.insert(fe.name).second) {
        report.Add(entity, ErrorCode::kDuplicateFrameElement, fe.name);
      }
    }
  }

  std::set<std::tuple<std::string_view, PartOfSpeech, std::string_view>>
      triples;
  for (const auto &[id, lu] : lexical_units_) {
    const std::string entity = "lu:" + id;
    if (id.empty() || lu.lemma.empty()) {
      report.Add(entity, ErrorCode::kEmptyName, "id and lemma required");
    }
    if (!frames_.contains(lu.frame)) {
      report.Add(entity, ErrorCode::kDanglingReference,
                 "frame '" + lu.frame + "' does not exist");
    }
    if (!triples.emplace(lu.lemma, lu.pos, lu.frame).second) {
      report.Add(entity, ErrorCode::kDuplicateLexicalUnit,
                 "(lemma, pos, frame) already used");
    }
  }

  for (size_t i = 0; i < relations_.size(); ++i) {
    const FrameRelation &r = relations_[i];
    const std::string entity = RelationEntity(r);
    if (i > 0 && relations_[i - 1].Key() == r.Key()) {
      report.Add(entity, ErrorCode::kDuplicateRelation, "repeated relation");
    }
    const Frame *src = FindFrame(r.source);
    const Frame *tgt = FindFrame(r.target);
    if (src == nullptr || tgt == nullptr) {
      report.Add(entity, ErrorCode::kDanglingReference,
                 "relation endpoint does not exist");
    }
    if (r.source == r.target) {
      report.Add(entity, ErrorCode::kCycleDetected, "self relation");
    }
    for (const auto &[s, t] : r.fe_bindings) {
      if ((src != nullptr && src->FindElement(s) == nullptr) ||
          (tgt != nullptr && tgt->FindElement(t) == nullptr)) {
        report.Add(entity, ErrorCode::kUnknownFrameElementInBinding,
                   s + " -> " + t);
      }
    }
  }

  // Kahn's algorithm per relation kind; nodes left over sit on a cycle.
  for (RelationKind kind : {RelationKind::kInheritsFrom, RelationKind::kUses,
                            RelationKind::kSubframeOf}) {
    std::map<std::string_view, int> indegree;
    std::multimap<std::string_view, std::string_view> edges;
    for (const FrameRelation &r : relations_) {
      if (r.kind != kind || r.source == r.target) continue;
      indegree.try_emplace(r.source, 0);
      ++indegree[r.target];
      edges.emplace(r.source, r.target);
    }
    std::deque<std::string_view> ready;
    for (const auto &[node, deg] : indegree) {
      if (deg == 0) ready.push_back(node);
    }
    while (!ready.empty()) {
      std::string_view node = ready.front();
      ready.pop_front();
      auto [lo, hi] = edges.equal_range(node);
      for (auto it = lo; it != hi; ++it) {
        if (--indegree[it->second] == 0) ready.push_back(it->second);
      }
    }
    for (const auto &[node, deg] : indegree) {
      if (deg > 0) {
        report.Add("frame:" + std::string(node), ErrorCode::kCycleDetected,
                   std::string(ToString(kind)) + " cycle");
      }
    }
  }
  return report;
}

}  // namespace framecast
