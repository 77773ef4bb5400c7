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

#ifndef FRAMECAST_BLEND_H_
#define FRAMECAST_BLEND_H_

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "framecast/ontology.h"

namespace framecast {

// Symbolic mental spaces and conceptual integration networks. Everything
// here is an inert data structure: construction checks structure, nothing
// is inferred.

enum class SpaceKind {
  kGroundBase,
  kEpistemic,
  kSpeechAct,
  kMetalinguistic,
  kContentBase,
  kInput,
  kGeneric,
  kBlend,
  kOther
};

std::string_view ToString(SpaceKind kind);
SpaceKind ParseSpaceKind(std::string_view s);

struct SpaceElement {
  std::string id;
  std::string label;
  std::optional<std::string> role;  // FE of the structuring frame

  bool operator==(const SpaceElement &other) const = default;
};

struct MentalSpace {
  std::string id;
  std::string label;
  SpaceKind kind = SpaceKind::kOther;
  std::vector<SpaceElement> elements;
  std::optional<std::string> structuring_frame;

  const SpaceElement *FindElement(std::string_view element) const;
  bool operator==(const MentalSpace &other) const = default;
};

// An element addressed by (space id, element id).
struct ElementRef {
  std::string space;
  std::string element;

  auto operator<=>(const ElementRef &other) const = default;
};

// Partial injection between the elements of two spaces. Pairs are
// (element of space_a, element of space_b).
struct CrossSpaceMapping {
  std::string space_a;
  std::string space_b;
  std::set<std::pair<std::string, std::string>> pairs;

  bool operator==(const CrossSpaceMapping &other) const = default;
};

struct Projection {
  ElementRef source;          // element of an input space
  std::string blend_element;  // element of the blend

  auto operator<=>(const Projection &other) const = default;
};

struct IntegrationNetwork {
  std::vector<MentalSpace> inputs;
  std::optional<MentalSpace> generic;
  MentalSpace blend;
  std::vector<CrossSpaceMapping> mappings;
  std::set<Projection> projections;

  const MentalSpace *FindInput(std::string_view id) const;
  bool operator==(const IntegrationNetwork &other) const = default;
};

// Throws Error(kDuplicateId) on repeated element ids and, when `ontology` is
// given, Error(kUnknownFrame) / Error(kUnknownFrameElement) on bad roles.
void CheckSpace(const MentalSpace &space, const Ontology *ontology = nullptr);

// Throws Error(kInvalidMapping) unless the mapping joins `a` and `b` and is
// injective both ways, and Error(kUnknownSpaceElement) on missing elements.
void CheckMapping(const CrossSpaceMapping &mapping, const MentalSpace &a,
                  const MentalSpace &b);

// Throws on any broken IntegrationNetwork invariant: fewer than two inputs,
// bad mappings, projections leaving the inputs or the blend, and blend
// elements without an input ancestor (kOrphanBlendElement).
void CheckNetwork(const IntegrationNetwork &network);

// The role space of a frame: one element per effective FE, with id and role
// set to the FE name. The space id is "<frame>.roles".
MentalSpace RoleSpace(const Ontology &ontology, std::string_view frame);

struct ValueBinding {
  std::string value;  // element id in the value space
  std::string fe;
};

// Frame-to-values connection: maps RoleSpace(frame) onto `values`. Throws
// Error(kUnknownFrameElement), Error(kUnknownSpaceElement) or
// Error(kDuplicateBinding) when an FE or a value is bound twice.
CrossSpaceMapping FrameToValues(const Ontology &ontology, std::string_view frame,
                                const MentalSpace &values,
                                std::span<const ValueBinding> bindings);

struct CommunicativeContext {
  std::string utterer;
  std::string comprehender;
  std::string time;
  std::string place;
  std::string interaction_kind;
  bool include_content = false;
};

// The Basic Communicative Spaces Network.
struct Bcsn {
  std::vector<MentalSpace> spaces;

  // First space of a kind, or nullptr.
  const MentalSpace *Find(SpaceKind kind) const;
};

// Ground base (utterer, comprehender, time, place), epistemic, speech act and
// metalinguistic spaces, plus a content base when requested. Throws
// Error(kDegenerateGround) when utterer and comprehender labels coincide.
Bcsn BuildBcsn(const CommunicativeContext &context);

// One blend element together with the input elements it projects from.
struct ProjectedElement {
  SpaceElement element;
  std::vector<ElementRef> ancestors;
};

using ProjectionSelector = std::function<std::vector<ProjectedElement>(
    std::span<const MentalSpace> inputs,
    std::span<const CrossSpaceMapping> mappings)>;

// Fuses elements connected through the mappings into one blend element each.
// With `include_unmapped`, unconnected input elements are projected alone.
ProjectionSelector FuseMappedCounterparts(bool include_unmapped);

struct BlendSpec {
  std::string id = "blend";
  std::string label = "blend";
  std::optional<std::string> structuring_frame;
};

// Builds and checks an integration network. The blend space gets kind kBlend.
IntegrationNetwork Blend(std::vector<MentalSpace> inputs,
                         std::vector<CrossSpaceMapping> mappings,
                         const ProjectionSelector &selector,
                         const BlendSpec &spec = {});

// Follows projections back through a chain of networks (later networks may
// take earlier blends as inputs) until reaching elements that are not blend
// elements of any network. Throws Error(kOrphanBlendElement) on a blend
// element without projections and Error(kCycleDetected) on a cycle.
std::set<ElementRef> TraceAncestry(std::span<const IntegrationNetwork> chain,
                                   const ElementRef &element);

// The three-stage chain explaining a gesture-evoked pragmatic frame:
//   1. deixis x people in the situation -> ground base blend;
//   2. ground base x speech act space -> communicators as social beings;
//   3. social blend x object manipulation -> speech turn as an object,
//      structured by `frame`.
// Each stage's blend is an input of the next. Throws
// Error(kFrameOutsideTurnFamily) unless `frame` is a turn-organization
// subframe or Assistance_request.
std::vector<IntegrationNetwork> ExplainGesture(
    const Ontology &ontology, std::string_view frame,
    const CommunicativeContext &context);

}  // namespace framecast

#endif  // FRAMECAST_BLEND_H_
