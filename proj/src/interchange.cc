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

#include "framecast/interchange.h"

#include <cmath>

namespace framecast {

namespace {

[[noreturn]] void Fail(const std::string &message) {
  throw Error(ErrorCode::kParseError, message);
}

const Json &Field(const Json &j, const char *key) {
  if (!j.is_object()) Fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) Fail(std::string("missing key '") + key + "'");
  return *it;
}

const Json *OptionalField(const Json &j, const char *key) {
  if (!j.is_object()) Fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string Str(const Json &j, const char *key) {
  const Json &v = Field(j, key);
  if (!v.is_string()) Fail(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> OptStr(const Json &j, const char *key) {
  const Json *v = OptionalField(j, key);
  if (v == nullptr) return std::nullopt;
  if (!v->is_string()) Fail(std::string("'") + key + "' must be a string");
  return v->get<std::string>();
}

int64_t Int(const Json &j, const char *key) {
  const Json &v = Field(j, key);
  if (!v.is_number_integer()) Fail(std::string("'") + key + "' must be an integer");
  return v.get<int64_t>();
}

bool Bool(const Json &j, const char *key) {
  const Json &v = Field(j, key);
  if (!v.is_boolean()) Fail(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

double Num(const Json &j, const char *key) {
  const Json &v = Field(j, key);
  if (!v.is_number()) Fail(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

const Json &Arr(const Json &j, const char *key) {
  const Json &v = Field(j, key);
  if (!v.is_array()) Fail(std::string("'") + key + "' must be an array");
  return v;
}

// Top-level arrays may be omitted when empty.
const Json &OptArr(const Json &j, const char *key) {
  static const Json kEmpty = Json::array();
  const Json *v = OptionalField(j, key);
  if (v == nullptr) return kEmpty;
  if (!v->is_array()) Fail(std::string("'") + key + "' must be an array");
  return *v;
}

std::pair<int64_t, int64_t> Pair(const Json &j, const char *key) {
  const Json &v = Field(j, key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer()) {
    Fail(std::string("'") + key + "' must be a [start, end] integer pair");
  }
  return {v[0].get<int64_t>(), v[1].get<int64_t>()};
}

Json SpanJson(int64_t start, int64_t end) { return Json::array({start, end}); }

double Round6(double v) { return std::round(v * 1e6) / 1e6; }

template <typename T, typename F>
std::vector<T> ParseArray(const Json &arr, F &&parse) {
  std::vector<T> out;
  out.reserve(arr.size());
  for (const Json &item : arr) out.push_back(parse(item));
  return out;
}

template <typename Table>
void PutTable(Json &root, const char *key, const Table &table) {
  if (table.empty()) return;
  Json arr = Json::array();
  for (const auto &[id, record] : table) arr.push_back(ToJson(record));
  root[key] = std::move(arr);
}

Json Envelope() {
  Json root = Json::object();
  root["schema_version"] = std::string(kSchemaVersion);
  return root;
}

}  // namespace

std::string CanonicalDump(const Json &json) {
  return json.dump(2, ' ', false, Json::error_handler_t::strict) + "\n";
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception &e) {
    Fail(e.what());
  }
}

void CheckSchemaVersion(const Json &envelope) {
  const Json *v = envelope.is_object() ? OptionalField(envelope, "schema_version")
                                       : nullptr;
  if (v == nullptr || !v->is_string()) Fail("missing string 'schema_version'");
  if (v->get<std::string>() != kSchemaVersion) {
    throw Error(ErrorCode::kSchemaVersionUnsupported,
                "schema_version '" + v->get<std::string>() + "'");
  }
}

// Ontology.

Json ToJson(const Frame &f) {
  Json fes = Json::array();
  for (const FrameElement &fe : f.frame_elements) {
    fes.push_back({{"name", fe.name},
                   {"definition", fe.definition},
                   {"coreness", ToString(fe.coreness)}});
  }
  return {{"name", f.name},
          {"definition", f.definition},
          {"kind", ToString(f.kind)},
          {"frame_elements", std::move(fes)}};
}

Frame FrameFromJson(const Json &j) {
  Frame f;
  f.name = Str(j, "name");
  f.definition = Str(j, "definition");
  f.kind = ParseFrameKind(Str(j, "kind"));
  for (const Json &fe : Arr(j, "frame_elements")) {
    f.frame_elements.push_back({Str(fe, "name"), Str(fe, "definition"),
                                ParseCoreness(Str(fe, "coreness"))});
  }
  return f;
}

Json ToJson(const LexicalUnit &lu) {
  return {{"id", lu.id},
          {"lemma", lu.lemma},
          {"pos", ToString(lu.pos)},
          {"frame", lu.frame}};
}

LexicalUnit LexicalUnitFromJson(const Json &j) {
  return {Str(j, "id"), Str(j, "lemma"), ParsePartOfSpeech(Str(j, "pos")),
          Str(j, "frame")};
}

Json ToJson(const FrameRelation &r) {
  Json bindings = Json::array();
  for (const auto &[s, t] : r.fe_bindings) bindings.push_back({s, t});
  return {{"source", r.source},
          {"kind", ToString(r.kind)},
          {"target", r.target},
          {"fe_bindings", std::move(bindings)}};
}

FrameRelation RelationFromJson(const Json &j) {
  FrameRelation r;
  r.source = Str(j, "source");
  r.kind = ParseRelationKind(Str(j, "kind"));
  r.target = Str(j, "target");
  if (const Json *b = OptionalField(j, "fe_bindings")) {
    if (!b->is_array()) Fail("'fe_bindings' must be an array");
    for (const Json &pair : *b) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        Fail("each fe_binding must be a [source FE, target FE] pair");
      }
      r.fe_bindings.emplace_back(pair[0].get<std::string>(),
                                 pair[1].get<std::string>());
    }
  }
  return r;
}

Json ToJson(const EffectiveFrameElement &fe) {
  return {{"name", fe.element.name},
          {"definition", fe.element.definition},
          {"coreness", ToString(fe.element.coreness)},
          {"origin", fe.origin}};
}

// Annotation records.

Json ToJson(const Document &d) {
  return {{"id", d.id},
          {"title", d.title},
          {"media",
           {{"duration_ms", d.media.duration_ms},
            {"width_px", d.media.width_px},
            {"height_px", d.media.height_px}}}};
}

Document DocumentFromJson(const Json &j) {
  const Json &m = Field(j, "media");
  return {Str(j, "id"), Str(j, "title"),
          MediaInfo{Int(m, "duration_ms"), Int(m, "width_px"), Int(m, "height_px")}};
}

Json ToJson(const Sentence &s) {
  Json j = {{"id", s.id}, {"document", s.document}, {"text", s.text}};
  if (s.time_span_ms) {
    j["time_span_ms"] = SpanJson(s.time_span_ms->start_ms, s.time_span_ms->end_ms);
  }
  return j;
}

Sentence SentenceFromJson(const Json &j) {
  Sentence s{Str(j, "id"), Str(j, "document"), Str(j, "text"), std::nullopt};
  if (OptionalField(j, "time_span_ms") != nullptr) {
    auto [a, b] = Pair(j, "time_span_ms");
    s.time_span_ms = TimeSpan{a, b};
  }
  return s;
}

Json ToJson(const AnnotationSet &a) {
  Json labels = Json::array();
  for (const FeLabel &l : a.fe_labels) {
    labels.push_back({{"fe", l.fe}, {"span", SpanJson(l.span.start, l.span.end)}});
  }
  return {{"id", a.id},
          {"sentence", a.sentence},
          {"lu", a.lu},
          {"target_span", SpanJson(a.target_span.start, a.target_span.end)},
          {"fe_labels", std::move(labels)}};
}

AnnotationSet AnnotationSetFromJson(const Json &j) {
  AnnotationSet a;
  a.id = Str(j, "id");
  a.sentence = Str(j, "sentence");
  a.lu = Str(j, "lu");
  auto [ts, te] = Pair(j, "target_span");
  a.target_span = {ts, te};
  for (const Json &l : OptArr(j, "fe_labels")) {
    auto [s, e] = Pair(l, "span");
    a.fe_labels.push_back({Str(l, "fe"), {s, e}});
  }
  return a;
}

Json ToJson(const VisualObject &v) {
  Json track = Json::array();
  for (const Keyframe &k : v.track.keyframes) {
    track.push_back({{"t_ms", k.t_ms},
                     {"box",
                      {{"x", Round6(k.box.x)},
                       {"y", Round6(k.box.y)},
                       {"w", Round6(k.box.w)},
                       {"h", Round6(k.box.h)}}}});
  }
  return {{"id", v.id},
          {"document", v.document},
          {"cv_name", v.cv_name},
          {"category_frame", v.category_frame},
          {"category_lu", v.category_lu},
          {"track", std::move(track)}};
}

VisualObject VisualObjectFromJson(const Json &j) {
  VisualObject v;
  v.id = Str(j, "id");
  v.document = Str(j, "document");
  v.cv_name = Str(j, "cv_name");
  v.category_frame = Str(j, "category_frame");
  v.category_lu = Str(j, "category_lu");
  for (const Json &k : Arr(j, "track")) {
    const Json &b = Field(k, "box");
    v.track.keyframes.push_back(
        {Int(k, "t_ms"),
         Quantize(Box{Num(b, "x"), Num(b, "y"), Num(b, "w"), Num(b, "h")})});
  }
  return v;
}

Json ToJson(const GestureFeatures &f) {
  Json j = Json::object();
  for (int i = 0; i < kFeatureFieldCount; ++i) {
    const auto field = static_cast<FeatureField>(i);
    const std::string key(ToString(field));
    const std::string_view value = FieldValue(f, field);
    if (FieldValues(field).size() == 2 && FieldValues(field)[1] == "true") {
      j[key] = value == "true";
    } else {
      j[key] = value;
    }
  }
  if (f.paraphrase) j["paraphrase"] = *f.paraphrase;
  return j;
}

GestureFeatures FeaturesFromJson(const Json &j) {
  GestureFeatures f;
  for (int i = 0; i < kFeatureFieldCount; ++i) {
    const auto field = static_cast<FeatureField>(i);
    const std::string key(ToString(field));
    const Json &v = Field(j, key.c_str());
    if (v.is_boolean()) {
      SetFieldValue(f, field, v.get<bool>() ? "true" : "false");
    } else if (v.is_string()) {
      SetFieldValue(f, field, v.get<std::string>());
    } else {
      Fail("'" + key + "' must be a string or boolean");
    }
    // Booleans must be JSON booleans.
    if (FieldValues(field)[0] == "false" && !v.is_boolean()) {
      Fail("'" + key + "' must be a boolean");
    }
  }
  f.paraphrase = OptStr(j, "paraphrase");
  return f;
}

Json ToJson(const ClassificationResult &r) {
  Json ranking = Json::array();
  for (const RankedFrame &rf : r.ranking) {
    ranking.push_back({{"frame", rf.frame}, {"score", rf.score}});
  }
  Json j = {{"interactivity", ToString(r.interactivity)},
            {"ranking", std::move(ranking)},
            {"margin", r.margin}};
  if (r.verdict) j["verdict"] = *r.verdict;
  return j;
}

ClassificationResult ClassificationResultFromJson(const Json &j) {
  ClassificationResult r;
  r.interactivity = ParseInteractivity(Str(j, "interactivity"));
  for (const Json &rf : Arr(j, "ranking")) {
    r.ranking.push_back({Str(rf, "frame"), Num(rf, "score")});
  }
  r.verdict = OptStr(j, "verdict");
  r.margin = Num(j, "margin");
  return r;
}

Json ToJson(const GestureAnnotation &g) {
  Json assignment = Json::array();
  for (const ParticipantAssignment &p : g.fe_assignment) {
    assignment.push_back({{"fe", p.fe}, {"participant", p.participant}});
  }
  Json j = {{"id", g.id},
            {"document", g.document},
            {"members", g.members},
            {"features", ToJson(g.features)},
            {"fe_assignment", std::move(assignment)},
            {"provenance", ToString(g.provenance)},
            {"version", g.version}};
  if (g.evoked_frame) j["evoked_frame"] = *g.evoked_frame;
  if (g.classifier_verdict) j["classifier_verdict"] = ToJson(*g.classifier_verdict);
  return j;
}

GestureAnnotation GestureFromJson(const Json &j) {
  GestureAnnotation g;
  g.id = Str(j, "id");
  g.document = Str(j, "document");
  for (const Json &m : Arr(j, "members")) {
    if (!m.is_string()) Fail("gesture members must be strings");
    g.members.push_back(m.get<std::string>());
  }
  g.features = FeaturesFromJson(Field(j, "features"));
  g.evoked_frame = OptStr(j, "evoked_frame");
  for (const Json &p : OptArr(j, "fe_assignment")) {
    g.fe_assignment.push_back({Str(p, "fe"), Str(p, "participant")});
  }
  g.provenance = ParseProvenance(Str(j, "provenance"));
  if (const Json *v = OptionalField(j, "classifier_verdict")) {
    g.classifier_verdict = ClassificationResultFromJson(*v);
  }
  g.version = OptionalField(j, "version") != nullptr ? Int(j, "version") : 1;
  return g;
}

// Prototypes.

Json ToJson(const Prototype &p) {
  Json tmpl = Json::object();
  Json weights = Json::object();
  for (const auto &[field, c] : p.constraints) {
    const std::string key(ToString(field));
    const bool boolean = FieldValues(field)[0] == "false";
    Json values = Json::array();
    for (const std::string &v : c.accepted) {
      if (boolean) {
        values.push_back(v == "true");
      } else {
        values.push_back(v);
      }
    }
    tmpl[key] = values.size() == 1 ? values[0] : values;
    weights[key] = c.weight;
  }
  return {{"frame", p.frame}, {"template", tmpl}, {"weights", weights}};
}

Prototype PrototypeFromJson(const Json &j) {
  Prototype p;
  p.frame = Str(j, "frame");
  const Json &tmpl = Field(j, "template");
  const Json &weights = Field(j, "weights");
  if (!tmpl.is_object() || !weights.is_object()) {
    Fail("prototype template and weights must be objects");
  }
  for (const auto &[key, value] : tmpl.items()) {
    const FeatureField field = ParseFeatureField(key);
    FieldConstraint c;
    const Json values = value.is_array() ? value : Json::array({value});
    for (const Json &v : values) {
      if (v.is_boolean()) {
        c.accepted.push_back(v.get<bool>() ? "true" : "false");
      } else if (v.is_string()) {
        c.accepted.push_back(v.get<std::string>());
      } else {
        Fail("template values must be strings or booleans");
      }
    }
    auto w = weights.find(key);
    if (w == weights.end() || !w->is_number()) {
      throw Error(ErrorCode::kInvalidPrototype,
                  p.frame + "." + key + " has no numeric weight");
    }
    c.weight = w->get<double>();
    p.constraints.emplace(field, std::move(c));
  }
  for (const auto &[key, value] : weights.items()) {
    if (!tmpl.contains(key)) {
      throw Error(ErrorCode::kInvalidPrototype,
                  p.frame + "." + key + " is weighted but not constrained");
    }
  }
  return p;
}

// Blending networks.

Json ToJson(const MentalSpace &s) {
  Json elements = Json::array();
  for (const SpaceElement &e : s.elements) {
    Json je = {{"id", e.id}, {"label", e.label}};
    if (e.role) je["role"] = *e.role;
    elements.push_back(std::move(je));
  }
  Json j = {{"id", s.id},
            {"label", s.label},
            {"kind", ToString(s.kind)},
            {"elements", std::move(elements)}};
  if (s.structuring_frame) j["structuring_frame"] = *s.structuring_frame;
  return j;
}

Json ToJson(const CrossSpaceMapping &m) {
  Json pairs = Json::array();
  for (const auto &[a, b] : m.pairs) pairs.push_back({a, b});
  return {{"space_a", m.space_a}, {"space_b", m.space_b}, {"pairs", std::move(pairs)}};
}

Json ToJson(const IntegrationNetwork &n) {
  Json inputs = Json::array();
  for (const MentalSpace &s : n.inputs) inputs.push_back(ToJson(s));
  Json mappings = Json::array();
  for (const CrossSpaceMapping &m : n.mappings) mappings.push_back(ToJson(m));
  Json projections = Json::array();
  for (const Projection &p : n.projections) {
    projections.push_back({{"source", {p.source.space, p.source.element}},
                           {"blend_element", p.blend_element}});
  }
  Json j = {{"inputs", std::move(inputs)},
            {"blend", ToJson(n.blend)},
            {"mappings", std::move(mappings)},
            {"projections", std::move(projections)}};
  if (n.generic) j["generic"] = ToJson(*n.generic);
  return j;
}

Json ToJson(const Bcsn &bcsn) {
  Json spaces = Json::array();
  for (const MentalSpace &s : bcsn.spaces) spaces.push_back(ToJson(s));
  return {{"spaces", std::move(spaces)}};
}

CommunicativeContext ContextFromJson(const Json &j) {
  CommunicativeContext c;
  c.utterer = Str(j, "utterer");
  c.comprehender = Str(j, "comprehender");
  c.time = Str(j, "time");
  c.place = Str(j, "place");
  c.interaction_kind = Str(j, "interaction_kind");
  if (OptionalField(j, "include_content") != nullptr) {
    c.include_content = Bool(j, "include_content");
  }
  return c;
}

// Reports.

Json ToJson(const CorpusSummary &s) {
  Json by_frame = Json::object();
  for (const auto &[frame, n] : s.gestures_by_frame) by_frame[frame] = n;
  return {{"documents", s.documents},
          {"annotation_sets", s.annotation_sets},
          {"visual_objects", s.visual_objects},
          {"gestures", s.gestures},
          {"gestures_by_frame", std::move(by_frame)},
          {"unclassified_gestures", s.unclassified_gestures}};
}

Json ToJson(const ValidationReport &r) {
  Json findings = Json::array();
  for (const Finding &f : r.findings) {
    findings.push_back({{"entity", f.entity},
                        {"rule_id", ErrorCodeName(f.rule)},
                        {"message", f.message}});
  }
  return {{"count", r.findings.size()}, {"findings", std::move(findings)}};
}

// Whole documents.

std::string ExportStore(const Store &store) {
  ValidationReport report = store.Validate();
  if (!report.ok()) throw ValidationError(std::move(report));

  Json root = Envelope();
  const Ontology &o = store.ontology();
  PutTable(root, "frames", o.frames());
  PutTable(root, "lexical_units", o.lexical_units());
  if (!o.relations().empty()) {
    Json rels = Json::array();
    for (const FrameRelation &r : o.relations()) rels.push_back(ToJson(r));
    root["relations"] = std::move(rels);
  }
  PutTable(root, "documents", store.documents());
  PutTable(root, "sentences", store.sentences());
  PutTable(root, "annotation_sets", store.annotation_sets());
  PutTable(root, "visual_objects", store.visual_objects());
  PutTable(root, "gestures", store.gestures());
  return CanonicalDump(root);
}

Store ParseStore(std::string_view bytes) {
  const Json root = ParseJson(bytes);
  if (!root.is_object()) Fail("store document must be an object");
  CheckSchemaVersion(root);
  try {
    Ontology ontology = Ontology::Assemble(
        ParseArray<Frame>(OptArr(root, "frames"), FrameFromJson),
        ParseArray<LexicalUnit>(OptArr(root, "lexical_units"), LexicalUnitFromJson),
        ParseArray<FrameRelation>(OptArr(root, "relations"), RelationFromJson));
    return Store::Assemble(
        std::move(ontology),
        ParseArray<Document>(OptArr(root, "documents"), DocumentFromJson),
        ParseArray<Sentence>(OptArr(root, "sentences"), SentenceFromJson),
        ParseArray<AnnotationSet>(OptArr(root, "annotation_sets"),
                                  AnnotationSetFromJson),
        ParseArray<VisualObject>(OptArr(root, "visual_objects"),
                                 VisualObjectFromJson),
        ParseArray<GestureAnnotation>(OptArr(root, "gestures"), GestureFromJson));
  } catch (const Json::exception &e) {
    Fail(e.what());
  }
}

Store ImportStore(std::string_view bytes) {
  Store store = ParseStore(bytes);
  ValidationReport report = store.Validate();
  if (!report.ok()) throw ValidationError(std::move(report));
  return store;
}

std::string ExportPrototypes(std::span<const Prototype> prototypes) {
  Json root = Envelope();
  Json arr = Json::array();
  for (const Prototype &p : prototypes) arr.push_back(ToJson(p));
  root["prototypes"] = std::move(arr);
  return CanonicalDump(root);
}

std::vector<Prototype> ImportPrototypes(std::string_view bytes) {
  const Json root = ParseJson(bytes);
  CheckSchemaVersion(root);
  std::vector<Prototype> table;
  try {
    table = ParseArray<Prototype>(Arr(root, "prototypes"), PrototypeFromJson);
  } catch (const Json::exception &e) {
    Fail(e.what());
  }
  if (table.empty()) {
    throw Error(ErrorCode::kEmptyPrototypeSet, "prototype table is empty");
  }
  ValidatePrototypes(table);
  return table;
}

std::string ExportNetworks(std::span<const IntegrationNetwork> networks) {
  Json root = Envelope();
  Json arr = Json::array();
  for (const IntegrationNetwork &n : networks) arr.push_back(ToJson(n));
  root["networks"] = std::move(arr);
  return CanonicalDump(root);
}

}  // namespace framecast
