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

#ifndef FRAMECAST_SERVICE_H_
#define FRAMECAST_SERVICE_H_

#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "framecast/annotation_store.h"
#include "framecast/classifier.h"
#include "framecast/error.h"

namespace framecast {

enum class ApiErrorCode { kNotFound, kConflict, kValidationFailed, kBadRequest };

std::string_view ToString(ApiErrorCode code);

struct ApiError {
  ApiErrorCode code = ApiErrorCode::kBadRequest;
  std::string rule_id;  // always set for kValidationFailed
  std::string message;
};

// Maps a library error onto the API vocabulary.
ApiError ToApiError(const Error &error);

// HTTP status for an API error code.
int HttpStatus(ApiErrorCode code);

// Atomically replaces `path` with `contents` (write to a sibling temp file,
// then rename). Throws Error(kIoError).
void WriteFileAtomically(const std::string &path, std::string_view contents);

// Reads a whole file. Throws Error(kIoError).
std::string ReadFile(const std::string &path);

// The annotation service: one store, concurrent readers, serialized writers.
// Each mutation runs on a copy of the store; the copy must validate and, when
// the service has a backing file, be written to it before it replaces the
// live store. A failed mutation leaves both the store and the file untouched.
//
// Routes (bodies are interchange-format JSON):
//   GET  /frames                  POST /frames
//   GET  /frames/{name}
//   GET  /relations               POST /relations
//   GET  /documents               POST /documents
//   GET  /documents/{id}/sentences
//   GET  /annotation-sets         POST /annotation-sets
//   GET  /gestures                POST /gestures
//   GET  /gestures/{id}           PUT  /gestures/{id}
//   POST /classify                POST /blend/explain
//   GET  /stats                   POST /validate
//
// Gesture bodies may carry "member_objects", visual objects upserted in the
// same transaction. PUT /gestures/{id} requires the "version" the client last
// read; a stale version is a conflict.
class Service {
 public:
  struct Response {
    int status = 200;
    std::string body;
  };

  // `store_path` may be empty for an in-memory service.
  Service(Store store, std::string store_path, std::vector<Prototype> prototypes,
          ClassifierOptions options = {});

  // Loads and validates the store file; throws ValidationError or Error.
  static std::unique_ptr<Service> Open(const std::string &store_path,
                                       std::vector<Prototype> prototypes);

  Response Handle(std::string_view method, std::string_view path,
                  std::string_view body);

  // Serves HTTP until Stop(). Returns false if the address cannot be bound.
  bool Listen(const std::string &host, int port);
  // Binds to an ephemeral port, returns it, and serves on a background
  // thread. Returns -1 on failure.
  int ListenInBackground(const std::string &host);
  void Stop();

  Store Snapshot() const;
  const std::vector<Prototype> &prototypes() const { return prototypes_; }

  Service(const Service &) = delete;
  Service &operator=(const Service &) = delete;
  ~Service();

 private:
  struct Impl;

  Response Route(std::string_view method, std::string_view path,
                 std::string_view body);
  template <typename Mutation>
  Response Mutate(Mutation &&mutation, int status = 201);

  mutable std::shared_mutex mu_;
  Store store_;
  std::string store_path_;
  std::vector<Prototype> prototypes_;
  ClassifierOptions options_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace framecast

#endif  // FRAMECAST_SERVICE_H_
