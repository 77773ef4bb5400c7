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

#ifndef FRAMECAST_ERROR_H_
#define FRAMECAST_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace framecast {

// Error vocabulary shared by every module. The enumerator name doubles as the
// rule id reported in validation findings and API errors.
enum class ErrorCode {
  kEmptyName,
  kInvalidName,
  kDuplicateFrameName,
  kDuplicateFrameElement,
  kDuplicateLexicalUnit,
  kDuplicateRelation,
  kDuplicateId,
  kUnknownFrame,
  kUnknownFrameElement,
  kUnknownFrameElementInBinding,
  kUnknownLexicalUnit,
  kUnknownEntity,
  kDanglingReference,
  kCycleDetected,
  kSpanOutOfBounds,
  kOverlappingFeSpans,
  kTimeOutsideTrack,
  kTimeOutsideMedia,
  kInvalidTrack,
  kInvalidBox,
  kInvalidMedia,
  kCategoryMismatch,
  kEmptyMembers,
  kCrossDocumentMembers,
  kEmptyTimeExtent,
  kNonPragmaticFrame,
  kInconsistentFeatures,
  kParseError,
  kSchemaVersionUnsupported,
  kValidationFailed,
  kEmptyPrototypeSet,
  kInvalidPrototype,
  kInvalidArgument,
  kDuplicateBinding,
  kUnknownSpaceElement,
  kInvalidMapping,
  kDegenerateGround,
  kTooFewInputs,
  kOrphanBlendElement,
  kFrameOutsideTurnFamily,
  kEmptyInterval,
  kSentenceHasNoTimeSpan,
  kStaleVersion,
  kIoError,
};

// Returns the rule id for a code, e.g. "CycleDetected".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// One broken rule found by a validator.
struct Finding {
  std::string entity;  // e.g. "frame:Turn_passing"
  ErrorCode rule;
  std::string message;

  bool operator==(const Finding &other) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  bool Has(ErrorCode rule) const;
  void Add(std::string entity, ErrorCode rule, std::string message) {
    findings.push_back({std::move(entity), rule, std::move(message)});
  }
  void Append(const ValidationReport &other) {
    findings.insert(findings.end(), other.findings.begin(),
                    other.findings.end());
  }
};

// Thrown when a whole store fails validation on import or load.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error(ErrorCode::kValidationFailed,
              std::to_string(report.findings.size()) + " finding(s)"),
        report_(std::move(report)) {}

  const ValidationReport &report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace framecast

#endif  // FRAMECAST_ERROR_H_
