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

#include "framecast/service.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "httplib.h"

#include "framecast/blend.h"
#include "framecast/interchange.h"
#include "framecast/stats.h"

namespace framecast {

namespace {

std::vector<std::string_view> Segments(std::string_view path) {
  if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < path.size()) {
    if (path[i] == '/') {
      ++i;
      continue;
    }
    size_t j = path.find('/', i);
    if (j == std::string_view::npos) j = path.size();
    out.push_back(path.substr(i, j - i));
    i = j;
  }
  return out;
}

// Decodes %XX escapes in a path segment.
std::string Unescape(std::string_view s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size()) {
      out.push_back(static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16)));
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

Service::Response JsonResponse(int status, const Json &body) {
  return {status, CanonicalDump(body)};
}

Service::Response ErrorResponse(const ApiError &e) {
  Json err = {{"code", ToString(e.code)}, {"message", e.message}};
  if (!e.rule_id.empty()) err["rule_id"] = e.rule_id;
  return JsonResponse(HttpStatus(e.code), Json{{"error", std::move(err)}});
}

Service::Response NotFound(std::string message) {
  return ErrorResponse({ApiErrorCode::kNotFound, "", std::move(message)});
}

Json BodyObject(std::string_view body) {
  Json j = ParseJson(body);
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "body must be a JSON object");
  return j;
}

template <typename Table>
Json ListJson(const Table &table) {
  Json arr = Json::array();
  for (const auto &[id, record] : table) arr.push_back(ToJson(record));
  return arr;
}

// Upserts the optional "member_objects" of a gesture body.
void PutMemberObjects(Store &store, const Json &body) {
  auto it = body.find("member_objects");
  if (it == body.end() || it->is_null()) return;
  if (!it->is_array()) {
    throw Error(ErrorCode::kParseError, "'member_objects' must be an array");
  }
  for (const Json &v : *it) store.PutVisualObject(VisualObjectFromJson(v));
}

}  // namespace

std::string_view ToString(ApiErrorCode code) {
  switch (code) {
    case ApiErrorCode::kNotFound: return "not_found";
    case ApiErrorCode::kConflict: return "conflict";
    case ApiErrorCode::kValidationFailed: return "validation_failed";
    case ApiErrorCode::kBadRequest: return "bad_request";
  }
  return "bad_request";
}

int HttpStatus(ApiErrorCode code) {
  switch (code) {
    case ApiErrorCode::kNotFound: return 404;
    case ApiErrorCode::kConflict: return 409;
    case ApiErrorCode::kValidationFailed: return 422;
    case ApiErrorCode::kBadRequest: return 400;
  }
  return 400;
}

ApiError ToApiError(const Error &error) {
  ApiError api;
  api.rule_id = std::string(ErrorCodeName(error.code()));
  api.message = error.what();
  switch (error.code()) {
    case ErrorCode::kParseError:
    case ErrorCode::kSchemaVersionUnsupported:
    case ErrorCode::kInvalidArgument:
      api.code = ApiErrorCode::kBadRequest;
      break;
    case ErrorCode::kUnknownEntity:
      api.code = ApiErrorCode::kNotFound;
      break;
    case ErrorCode::kDuplicateId:
    case ErrorCode::kDuplicateFrameName:
    case ErrorCode::kDuplicateLexicalUnit:
    case ErrorCode::kDuplicateRelation:
    case ErrorCode::kStaleVersion:
    case ErrorCode::kIoError:
      api.code = ApiErrorCode::kConflict;
      break;
    default:
      api.code = ApiErrorCode::kValidationFailed;
      break;
  }
  if (const auto *v = dynamic_cast<const ValidationError *>(&error)) {
    if (!v->report().ok()) {
      api.rule_id = std::string(ErrorCodeName(v->report().findings.front().rule));
      api.message = v->report().findings.front().entity + ": " +
                    v->report().findings.front().message;
    }
  }
  return api;
}

void WriteFileAtomically(const std::string &path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIoError, "cannot replace " + path);
  }
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Service::Impl {
  httplib::Server server;
  std::thread thread;
};

Service::Service(Store store, std::string store_path,
                 std::vector<Prototype> prototypes, ClassifierOptions options)
    : store_(std::move(store)),
      store_path_(std::move(store_path)),
      prototypes_(std::move(prototypes)),
      options_(options),
      impl_(std::make_unique<Impl>()) {
  ValidatePrototypes(prototypes_);
}

Service::~Service() { Stop(); }

std::unique_ptr<Service> Service::Open(const std::string &store_path,
                                       std::vector<Prototype> prototypes) {
  Store store = ImportStore(ReadFile(store_path));
  return std::make_unique<Service>(std::move(store), store_path,
                                   std::move(prototypes));
}

Store Service::Snapshot() const {
  std::shared_lock lock(mu_);
  return store_;
}

template <typename Mutation>
Service::Response Service::Mutate(Mutation &&mutation, int status) {
  std::unique_lock lock(mu_);
  Store next = store_;
  Json result = mutation(next);
  const std::string bytes = ExportStore(next);
  if (!store_path_.empty()) WriteFileAtomically(store_path_, bytes);
  store_ = std::move(next);
  return JsonResponse(status, result);
}

Service::Response Service::Handle(std::string_view method, std::string_view path,
                                  std::string_view body) {
  try {
    return Route(method, path, body);
  } catch (const Error &e) {
    return ErrorResponse(ToApiError(e));
  } catch (const Json::exception &e) {
    return ErrorResponse({ApiErrorCode::kBadRequest, "ParseError", e.what()});
  }
}

Service::Response Service::Route(std::string_view method, std::string_view path,
                                 std::string_view body) {
  const std::vector<std::string_view> seg = Segments(path);
  const bool get = method == "GET";
  const bool post = method == "POST";
  const bool put = method == "PUT";
  if (seg.empty()) return NotFound("no resource");
  const std::string_view root = seg[0];

  if (root == "frames") {
    if (seg.size() == 1 && get) {
      std::shared_lock lock(mu_);
      return JsonResponse(200, {{"frames", ListJson(store_.ontology().frames())}});
    }
    if (seg.size() == 1 && post) {
      Frame frame = FrameFromJson(BodyObject(body));
      return Mutate([&frame](Store &s) {
        return ToJson(s.ontology().DefineFrame(std::move(frame)));
      });
    }
    if (seg.size() == 2 && get) {
      const std::string name = Unescape(seg[1]);
      std::shared_lock lock(mu_);
      const Frame *f = store_.ontology().FindFrame(name);
      if (f == nullptr) return NotFound("frame " + name);
      Json j = ToJson(*f);
      Json effective = Json::array();
      for (const auto &fe : store_.ontology().ResolveEffectiveFes(name)) {
        effective.push_back(ToJson(fe));
      }
      j["effective_frame_elements"] = std::move(effective);
      return JsonResponse(200, j);
    }
  } else if (root == "relations" && seg.size() == 1) {
    if (get) {
      std::shared_lock lock(mu_);
      Json arr = Json::array();
      for (const FrameRelation &r : store_.ontology().relations()) {
        arr.push_back(ToJson(r));
      }
      return JsonResponse(200, {{"relations", std::move(arr)}});
    }
    if (post) {
      FrameRelation r = RelationFromJson(BodyObject(body));
      return Mutate([&r](Store &s) {
        return ToJson(s.ontology().AddRelation(r.source, r.kind, r.target,
                                               r.fe_bindings));
      });
    }
  } else if (root == "documents") {
    if (seg.size() == 1 && get) {
      std::shared_lock lock(mu_);
      return JsonResponse(200, {{"documents", ListJson(store_.documents())}});
    }
    if (seg.size() == 1 && post) {
      Document d = DocumentFromJson(BodyObject(body));
      return Mutate([&d](Store &s) { return ToJson(s.AddDocument(std::move(d))); });
    }
    if (seg.size() == 3 && seg[2] == "sentences" && get) {
      const std::string id = Unescape(seg[1]);
      std::shared_lock lock(mu_);
      if (store_.FindDocument(id) == nullptr) return NotFound("document " + id);
      Json arr = Json::array();
      for (const Sentence *s : store_.SentencesOf(id)) arr.push_back(ToJson(*s));
      return JsonResponse(200, {{"sentences", std::move(arr)}});
    }
  } else if (root == "annotation-sets" && seg.size() == 1) {
    if (get) {
      std::shared_lock lock(mu_);
      return JsonResponse(200,
                          {{"annotation_sets", ListJson(store_.annotation_sets())}});
    }
    if (post) {
      Json j = BodyObject(body);
      if (!j.contains("id")) j["id"] = "";
      AnnotationSet a = AnnotationSetFromJson(j);
      return Mutate([&a](Store &s) {
        return ToJson(s.CreateAnnotationSet(std::move(a)));
      });
    }
  } else if (root == "gestures") {
    if (seg.size() == 1 && get) {
      std::shared_lock lock(mu_);
      return JsonResponse(200, {{"gestures", ListJson(store_.gestures())}});
    }
    if (seg.size() == 2 && get) {
      const std::string id = Unescape(seg[1]);
      std::shared_lock lock(mu_);
      const GestureAnnotation *g = store_.FindGesture(id);
      if (g == nullptr) return NotFound("gesture " + id);
      return JsonResponse(200, ToJson(*g));
    }
    if (seg.size() == 1 && post) {
      Json j = BodyObject(body);
      if (!j.contains("id")) j["id"] = "";
      if (!j.contains("provenance")) j["provenance"] = "manual";
      GestureAnnotation g = GestureFromJson(j);
      return Mutate([&](Store &s) {
        PutMemberObjects(s, j);
        return ToJson(s.CreateGesture(std::move(g)));
      });
    }
    if (seg.size() == 2 && put) {
      Json j = BodyObject(body);
      const std::string id = Unescape(seg[1]);
      if (!j.contains("version")) {
        throw Error(ErrorCode::kParseError, "PUT requires the last read 'version'");
      }
      j["id"] = id;
      if (!j.contains("provenance")) j["provenance"] = "manual";
      GestureAnnotation g = GestureFromJson(j);
      const int64_t expected = g.version;
      {
        std::shared_lock lock(mu_);
        if (store_.FindGesture(id) == nullptr) return NotFound("gesture " + id);
      }
      return Mutate(
          [&](Store &s) {
            // Version check first so stale writes never touch member objects.
            const GestureAnnotation *cur = s.FindGesture(id);
            if (cur == nullptr) throw Error(ErrorCode::kUnknownEntity, "gesture " + id);
            if (cur->version != expected) {
              throw Error(ErrorCode::kStaleVersion,
                          "gesture " + id + " is at version " +
                              std::to_string(cur->version));
            }
            PutMemberObjects(s, j);
            return ToJson(s.UpdateGesture(std::move(g), expected));
          },
          200);
    }
  } else if (root == "classify" && seg.size() == 1 && post) {
    const Json j = BodyObject(body);
    const Json &features = j.contains("features") ? j["features"] : j;
    ClassifierOptions options = options_;
    if (j.contains("tau")) options.tau = j["tau"].get<double>();
    if (j.contains("delta")) options.delta = j["delta"].get<double>();
    const ClassificationResult r =
        ClassifyTurnFrame(FeaturesFromJson(features), prototypes_, options);
    return JsonResponse(200, ToJson(r));
  } else if (root == "blend" && seg.size() == 2 && seg[1] == "explain" && post) {
    const Json j = BodyObject(body);
    if (!j.contains("frame") || !j["frame"].is_string()) {
      throw Error(ErrorCode::kParseError, "missing string 'frame'");
    }
    const CommunicativeContext context = ContextFromJson(j.at("context"));
    std::shared_lock lock(mu_);
    const auto chain =
        ExplainGesture(store_.ontology(), j["frame"].get<std::string>(), context);
    return {200, ExportNetworks(chain)};
  } else if (root == "stats" && seg.size() == 1 && get) {
    std::shared_lock lock(mu_);
    return JsonResponse(200, ToJson(Summarize(store_)));
  } else if (root == "validate" && seg.size() == 1 && post) {
    if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      std::shared_lock lock(mu_);
      return JsonResponse(200, ToJson(store_.Validate()));
    }
    return JsonResponse(200, ToJson(ParseStore(body).Validate()));
  }
  return NotFound(std::string(method) + " " + std::string(path));
}

bool Service::Listen(const std::string &host, int port) {
  auto handler = [this](const httplib::Request &req, httplib::Response &res) {
    Response r = Handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, "application/json");
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Options(".*", [](const httplib::Request &, httplib::Response &res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  if (port == 0) return true;
  return impl_->server.listen(host, port);
}

int Service::ListenInBackground(const std::string &host) {
  Listen(host, 0);
  const int port = impl_->server.bind_to_any_port(host);
  if (port < 0) return -1;
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port;
}

void Service::Stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace framecast
