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

#include "framecast/blend.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "framecast/error.h"
#include "framecast/stats.h"

namespace framecast {

namespace {

constexpr std::string_view kSpaceKindNames[] = {
    "ground_base",  "epistemic", "speech_act", "metalinguistic", "content_base",
    "input",        "generic",   "blend",      "other"};

constexpr std::string_view kAssistanceRequest = "Assistance_request";

SpaceElement Element(std::string id, std::string label,
                     std::optional<std::string> role = std::nullopt) {
  return {std::move(id), std::move(label), std::move(role)};
}

// Gesture reading of the object-manipulation input, per frame.
struct ObjectScene {
  std::string_view frame;
  std::string_view action;
  bool gesturer_is_utterer;
};

constexpr ObjectScene kScenes[] = {
    {"Turn_passing", "passing an object", true},
    {"Turn_taking", "reaching for an object", false},
    {"Turn_keeping", "keeping hold of an object", true},
    {"Turn_confirmation", "letting the other keep the object", false},
    {"Assistance_request", "asking for help to find an object", true},
};

ObjectScene SceneFor(std::string_view frame) {
  for (const ObjectScene &s : kScenes) {
    if (s.frame == frame) return s;
  }
  // Subframes added later fall back to a neutral reading.
  return {frame, "handling an object", true};
}

ProjectionSelector Fixed(std::vector<ProjectedElement> elements) {
  return [elements = std::move(elements)](std::span<const MentalSpace>,
                                          std::span<const CrossSpaceMapping>) {
    return elements;
  };
}

}  // namespace

std::string_view ToString(SpaceKind kind) {
  return kSpaceKindNames[static_cast<int>(kind)];
}

SpaceKind ParseSpaceKind(std::string_view s) {
  for (size_t i = 0; i < std::size(kSpaceKindNames); ++i) {
    if (kSpaceKindNames[i] == s) return static_cast<SpaceKind>(i);
  }
  throw Error(ErrorCode::kParseError, "unknown space kind '" + std::string(s) + "'");
}

const SpaceElement *MentalSpace::FindElement(std::string_view element) const {
  for (const SpaceElement &e : elements) {
    if (e.id == element) return &e;
  }
  return nullptr;
}

const MentalSpace *IntegrationNetwork::FindInput(std::string_view id) const {
  for (const MentalSpace &s : inputs) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const MentalSpace *Bcsn::Find(SpaceKind kind) const {
  for (const MentalSpace &s : spaces) {
    if (s.kind == kind) return &s;
  }
  return nullptr;
}

void CheckSpace(const MentalSpace &space, const Ontology *ontology) {
  std::set<std::string_view> ids;
  for (const SpaceElement &e : space.elements) {
    if (!ids.insert(e.id).second) {
      throw Error(ErrorCode::kDuplicateId, "element '" + e.id + "' repeated in " +
                                               space.id);
    }
  }
  if (ontology == nullptr) return;
  std::set<std::string> fes;
  if (space.structuring_frame) {
    fes = ontology->EffectiveFeNames(*space.structuring_frame);
  }
  for (const SpaceElement &e : space.elements) {
    if (e.role && !fes.contains(*e.role)) {
      throw Error(ErrorCode::kUnknownFrameElement,
                  "role '" + *e.role + "' of " + space.id + "." + e.id);
    }
  }
}

void CheckMapping(const CrossSpaceMapping &m, const MentalSpace &a,
                  const MentalSpace &b) {
  if (m.space_a != a.id || m.space_b != b.id) {
    throw Error(ErrorCode::kInvalidMapping,
                "mapping " + m.space_a + "<->" + m.space_b + " does not join " +
                    a.id + " and " + b.id);
  }
  std::set<std::string_view> left;
  std::set<std::string_view> right;
  for (const auto &[x, y] : m.pairs) {
    if (a.FindElement(x) == nullptr) {
      throw Error(ErrorCode::kUnknownSpaceElement, a.id + "." + x);
    }
    if (b.FindElement(y) == nullptr) {
      throw Error(ErrorCode::kUnknownSpaceElement, b.id + "." + y);
    }
    if (!left.insert(x).second || !right.insert(y).second) {
      throw Error(ErrorCode::kInvalidMapping,
                  "mapping " + a.id + "<->" + b.id + " is not injective");
    }
  }
}

void CheckNetwork(const IntegrationNetwork &n) {
  if (n.inputs.size() < 2) {
    throw Error(ErrorCode::kTooFewInputs, "a blend needs at least two inputs");
  }
  std::set<std::string_view> input_ids;
  for (const MentalSpace &s : n.inputs) {
    CheckSpace(s);
    if (!input_ids.insert(s.id).second) {
      throw Error(ErrorCode::kDuplicateId, "input space '" + s.id + "' repeated");
    }
  }
  CheckSpace(n.blend);
  if (input_ids.contains(n.blend.id)) {
    throw Error(ErrorCode::kDuplicateId, "blend reuses input id " + n.blend.id);
  }
  for (const CrossSpaceMapping &m : n.mappings) {
    const MentalSpace *a = n.FindInput(m.space_a);
    const MentalSpace *b = n.FindInput(m.space_b);
    if (a == nullptr || b == nullptr) {
      throw Error(ErrorCode::kInvalidMapping,
                  "mapping " + m.space_a + "<->" + m.space_b +
                      " leaves the inputs");
    }
    CheckMapping(m, *a, *b);
  }
  std::set<std::string_view> projected;
  for (const Projection &p : n.projections) {
    const MentalSpace *in = n.FindInput(p.source.space);
    if (in == nullptr || in->FindElement(p.source.element) == nullptr) {
      throw Error(ErrorCode::kUnknownSpaceElement,
                  "projection source " + p.source.space + "." + p.source.element);
    }
    if (n.blend.FindElement(p.blend_element) == nullptr) {
      throw Error(ErrorCode::kUnknownSpaceElement,
                  "projection target " + n.blend.id + "." + p.blend_element);
    }
    projected.insert(p.blend_element);
  }
  for (const SpaceElement &e : n.blend.elements) {
    if (!projected.contains(e.id)) {
      throw Error(ErrorCode::kOrphanBlendElement,
                  n.blend.id + "." + e.id + " has no input ancestor");
    }
  }
}

MentalSpace RoleSpace(const Ontology &ontology, std::string_view frame) {
  MentalSpace space;
  space.id = std::string(frame) + ".roles";
  space.label = std::string(frame);
  space.kind = SpaceKind::kInput;
  space.structuring_frame = std::string(frame);
  for (const EffectiveFrameElement &fe : ontology.ResolveEffectiveFes(frame)) {
    if (space.FindElement(fe.element.name) != nullptr) continue;
    space.elements.push_back(
        Element(fe.element.name, fe.element.name, fe.element.name));
  }
  return space;
}

CrossSpaceMapping FrameToValues(const Ontology &ontology, std::string_view frame,
                                const MentalSpace &values,
                                std::span<const ValueBinding> bindings) {
  const MentalSpace roles = RoleSpace(ontology, frame);
  CrossSpaceMapping m{roles.id, values.id, {}};
  std::set<std::string_view> fes;
  std::set<std::string_view> bound_values;
  for (const ValueBinding &b : bindings) {
    if (roles.FindElement(b.fe) == nullptr) {
      throw Error(ErrorCode::kUnknownFrameElement,
                  "'" + b.fe + "' is not a frame element of " + std::string(frame));
    }
    if (values.FindElement(b.value) == nullptr) {
      throw Error(ErrorCode::kUnknownSpaceElement, values.id + "." + b.value);
    }
    if (!fes.insert(b.fe).second) {
      throw Error(ErrorCode::kDuplicateBinding, b.fe + " bound twice");
    }
    if (!bound_values.insert(b.value).second) {
      throw Error(ErrorCode::kDuplicateBinding, b.value + " bound twice");
    }
    m.pairs.emplace(b.fe, b.value);
  }
  return m;
}

Bcsn BuildBcsn(const CommunicativeContext &c) {
  if (c.utterer == c.comprehender) {
    throw Error(ErrorCode::kDegenerateGround,
                "utterer and comprehender are both '" + c.utterer + "'");
  }
  Bcsn net;
  net.spaces.push_back({"ground_base",
                        "Ground base",
                        SpaceKind::kGroundBase,
                        {Element("utterer", c.utterer), Element("comprehender", c.comprehender),
                         Element("time", c.time), Element("place", c.place)},
                        std::nullopt});
  net.spaces.push_back({"epistemic", "Epistemic", SpaceKind::kEpistemic, {}, std::nullopt});
  net.spaces.push_back({"speech_act",
                        c.interaction_kind,
                        SpaceKind::kSpeechAct,
                        {Element("initiator", "party opening the exchange"),
                         Element("respondent", "party addressed"),
                         Element("social_context", c.interaction_kind),
                         Element("speech_turn", "speech turn"),
                         Element("subject", "subject of conversation")},
                        std::nullopt});
  net.spaces.push_back(
      {"metalinguistic", "Metalinguistic", SpaceKind::kMetalinguistic, {}, std::nullopt});
  if (c.include_content) {
    net.spaces.push_back(
        {"content_base", "Content base", SpaceKind::kContentBase, {}, std::nullopt});
  }
  return net;
}

ProjectionSelector FuseMappedCounterparts(bool include_unmapped) {
  return [include_unmapped](std::span<const MentalSpace> inputs,
                            std::span<const CrossSpaceMapping> mappings) {
    std::vector<ElementRef> refs;
    std::map<ElementRef, size_t> index;
    for (const MentalSpace &s : inputs) {
      for (const SpaceElement &e : s.elements) {
        index.emplace(ElementRef{s.id, e.id}, refs.size());
        refs.push_back({s.id, e.id});
      }
    }
    std::vector<size_t> parent(refs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    std::vector<bool> mapped(refs.size(), false);
    for (const CrossSpaceMapping &m : mappings) {
      for (const auto &[x, y] : m.pairs) {
        auto ix = index.find({m.space_a, x});
        auto iy = index.find({m.space_b, y});
        if (ix == index.end() || iy == index.end()) continue;
        mapped[ix->second] = mapped[iy->second] = true;
        const size_t rx = find(ix->second);
        const size_t ry = find(iy->second);
        // Lower index stays the root so groups keep input order.
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
    auto label_of = [&inputs](const ElementRef &r) {
      for (const MentalSpace &s : inputs) {
        if (s.id == r.space) return s.FindElement(r.element)->label;
      }
      return std::string();
    };
    std::map<size_t, size_t> group_slot;
    std::vector<ProjectedElement> out;
    std::set<std::string> used_ids;
    for (size_t i = 0; i < refs.size(); ++i) {
      if (!mapped[i] && !include_unmapped) continue;
      const size_t root = find(i);
      auto [slot, fresh] = group_slot.emplace(root, out.size());
      if (fresh) {
        std::string id = refs[i].element;
        for (int n = 2; used_ids.contains(id); ++n) {
          id = refs[i].element + "_" + std::to_string(n);
        }
        used_ids.insert(id);
        out.push_back({Element(id, label_of(refs[i])), {refs[i]}});
      } else {
        ProjectedElement &p = out[slot->second];
        p.element.label += " / " + label_of(refs[i]);
        p.ancestors.push_back(refs[i]);
      }
    }
    return out;
  };
}

IntegrationNetwork Blend(std::vector<MentalSpace> inputs,
                         std::vector<CrossSpaceMapping> mappings,
                         const ProjectionSelector &selector,
                         const BlendSpec &spec) {
  if (inputs.size() < 2) {
    throw Error(ErrorCode::kTooFewInputs, "a blend needs at least two inputs");
  }
  IntegrationNetwork n;
  n.inputs = std::move(inputs);
  n.mappings = std::move(mappings);
  n.blend.id = spec.id;
  n.blend.label = spec.label;
  n.blend.kind = SpaceKind::kBlend;
  n.blend.structuring_frame = spec.structuring_frame;
  for (ProjectedElement &p : selector(n.inputs, n.mappings)) {
    if (p.ancestors.empty()) {
      throw Error(ErrorCode::kOrphanBlendElement,
                  spec.id + "." + p.element.id + " has no input ancestor");
    }
    for (ElementRef &a : p.ancestors) {
      n.projections.insert({std::move(a), p.element.id});
    }
    n.blend.elements.push_back(std::move(p.element));
  }
  CheckNetwork(n);
  return n;
}

std::set<ElementRef> TraceAncestry(std::span<const IntegrationNetwork> chain,
                                   const ElementRef &element) {
  std::set<ElementRef> roots;
  std::set<ElementRef> on_path;
  std::function<void(const ElementRef &)> visit = [&](const ElementRef &ref) {
    const IntegrationNetwork *owner = nullptr;
    for (const IntegrationNetwork &n : chain) {
      if (n.blend.id == ref.space) owner = &n;
    }
    if (owner == nullptr) {
      roots.insert(ref);
      return;
    }
    if (!on_path.insert(ref).second) {
      throw Error(ErrorCode::kCycleDetected,
                  "projection cycle at " + ref.space + "." + ref.element);
    }
    bool any = false;
    for (const Projection &p : owner->projections) {
      if (p.blend_element != ref.element) continue;
      any = true;
      visit(p.source);
    }
    if (!any) {
      throw Error(ErrorCode::kOrphanBlendElement,
                  ref.space + "." + ref.element + " has no input ancestor");
    }
    on_path.erase(ref);
  };
  visit(element);
  return roots;
}

std::vector<IntegrationNetwork> ExplainGesture(const Ontology &ontology,
                                               std::string_view frame,
                                               const CommunicativeContext &c) {
  const Frame &verdict = ontology.GetFrame(frame);
  const bool in_family =
      ontology.FindFrame(kTurnFamilyRoot) != nullptr &&
      ontology.TurnFamily(kTurnFamilyRoot).contains(verdict.name);
  if (!in_family && verdict.name != kAssistanceRequest) {
    throw Error(ErrorCode::kFrameOutsideTurnFamily,
                verdict.name + " is not a turn-organization frame");
  }
  const Bcsn bcsn = BuildBcsn(c);
  std::vector<IntegrationNetwork> chain;

  // Stage 1: deictic roles connected to the people actually present.
  MentalSpace deixis{"deixis",
                     "Deixis",
                     SpaceKind::kInput,
                     {Element("I", "I"), Element("you", "you"),
                      Element("here", "here"), Element("now", "now")},
                     std::nullopt};
  MentalSpace people{"people",
                     "People in the communicative situation",
                     SpaceKind::kInput,
                     {Element("person_utterer", c.utterer),
                      Element("person_comprehender", c.comprehender),
                      Element("location", c.place), Element("moment", c.time)},
                     std::nullopt};
  CrossSpaceMapping deictic{"deixis",
                            "people",
                            {{"I", "person_utterer"},
                             {"you", "person_comprehender"},
                             {"here", "location"},
                             {"now", "moment"}}};
  const MentalSpace &ground = *bcsn.Find(SpaceKind::kGroundBase);
  std::vector<ProjectedElement> base_elements;
  const std::pair<std::string_view, std::string_view> base_sources[] = {
      {"I", "person_utterer"},
      {"you", "person_comprehender"},
      {"now", "moment"},
      {"here", "location"}};
  for (size_t i = 0; i < ground.elements.size(); ++i) {
    base_elements.push_back(
        {ground.elements[i],
         {{"deixis", std::string(base_sources[i].first)},
          {"people", std::string(base_sources[i].second)}}});
  }
  chain.push_back(Blend({deixis, people}, {deictic}, Fixed(base_elements),
                        {ground.id, ground.label, std::nullopt}));
  chain.back().blend.kind = SpaceKind::kGroundBase;

  // Stage 2: ground base and speech act space.
  const MentalSpace &speech_act = *bcsn.Find(SpaceKind::kSpeechAct);
  CrossSpaceMapping social_map{ground.id,
                               speech_act.id,
                               {{"utterer", "initiator"},
                                {"comprehender", "respondent"}}};
  auto from = [](std::string_view space, std::string_view element) {
    return ElementRef{std::string(space), std::string(element)};
  };
  std::vector<ProjectedElement> social_elements = {
      {Element("utterer", c.utterer + " as social being"),
       {from(ground.id, "utterer"), from(speech_act.id, "initiator")}},
      {Element("comprehender", c.comprehender + " as social being"),
       {from(ground.id, "comprehender"), from(speech_act.id, "respondent")}},
      {Element("setting", c.place + ", " + c.time),
       {from(ground.id, "place"), from(ground.id, "time")}},
      {Element("social_context", c.interaction_kind),
       {from(speech_act.id, "social_context")}},
      {Element("speech_turn", "speech turn"), {from(speech_act.id, "speech_turn")}},
      {Element("subject", "subject of conversation"),
       {from(speech_act.id, "subject")}},
  };
  chain.push_back(Blend({chain.back().blend, speech_act}, {social_map},
                        Fixed(social_elements),
                        {"social_beings", "Communicators as social beings",
                         std::nullopt}));

  // Stage 3: SPEECH TURN IS AN OBJECT, structured by the verdict frame.
  const ObjectScene scene = SceneFor(verdict.name);
  MentalSpace objects{"object_manipulation",
                      "People manipulating objects",
                      SpaceKind::kInput,
                      {Element("gesturer", "person handling the object"),
                       Element("other", "other person"),
                       Element("object", "physical object"),
                       Element("action", std::string(scene.action))},
                      std::nullopt};
  const std::string gesturer_side = scene.gesturer_is_utterer ? "utterer" : "comprehender";
  const std::string other_side = scene.gesturer_is_utterer ? "comprehender" : "utterer";
  CrossSpaceMapping metaphor{"social_beings",
                             objects.id,
                             {{gesturer_side, "gesturer"},
                              {other_side, "other"},
                              {"speech_turn", "object"}}};
  const std::set<std::string> roles = ontology.EffectiveFeNames(verdict.name);
  auto role = [&roles](std::string fe) -> std::optional<std::string> {
    if (roles.contains(fe)) return fe;
    return std::nullopt;
  };
  std::vector<ProjectedElement> metaphor_elements = {
      {Element("utterer", c.utterer, role("Utterer")),
       {from("social_beings", "utterer"),
        from(objects.id, scene.gesturer_is_utterer ? "gesturer" : "other")}},
      {Element("comprehender", c.comprehender, role("Comprehender")),
       {from("social_beings", "comprehender"),
        from(objects.id, scene.gesturer_is_utterer ? "other" : "gesturer")}},
      {Element("speech_turn", "speech turn as an object"),
       {from("social_beings", "speech_turn"), from(objects.id, "object")}},
      {Element("gesture", std::string(scene.action)), {from(objects.id, "action")}},
  };
  chain.push_back(Blend({chain.back().blend, objects}, {metaphor},
                        Fixed(metaphor_elements),
                        {"turn_as_object", "SPEECH TURN IS AN OBJECT", verdict.name}));
  CheckSpace(chain.back().blend, &ontology);
  return chain;
}

}  // namespace framecast
