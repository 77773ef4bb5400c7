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

#include "framecast/error.h"

#include <algorithm>

namespace framecast {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyName: return "EmptyName";
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kDuplicateFrameName: return "DuplicateFrameName";
    case ErrorCode::kDuplicateFrameElement: return "DuplicateFrameElement";
    case ErrorCode::kDuplicateLexicalUnit: return "DuplicateLexicalUnit";
    case ErrorCode::kDuplicateRelation: return "DuplicateRelation";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kUnknownFrame: return "UnknownFrame";
    case ErrorCode::kUnknownFrameElement: return "UnknownFrameElement";
    case ErrorCode::kUnknownFrameElementInBinding:
      return "UnknownFrameElementInBinding";
    case ErrorCode::kUnknownLexicalUnit: return "UnknownLexicalUnit";
    case ErrorCode::kUnknownEntity: return "UnknownEntity";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kSpanOutOfBounds: return "SpanOutOfBounds";
    case ErrorCode::kOverlappingFeSpans: return "OverlappingFeSpans";
    case ErrorCode::kTimeOutsideTrack: return "TimeOutsideTrack";
    case ErrorCode::kTimeOutsideMedia: return "TimeOutsideMedia";
    case ErrorCode::kInvalidTrack: return "InvalidTrack";
    case ErrorCode::kInvalidBox: return "InvalidBox";
    case ErrorCode::kInvalidMedia: return "InvalidMedia";
    case ErrorCode::kCategoryMismatch: return "CategoryMismatch";
    case ErrorCode::kEmptyMembers: return "EmptyMembers";
    case ErrorCode::kCrossDocumentMembers: return "CrossDocumentMembers";
    case ErrorCode::kEmptyTimeExtent: return "EmptyTimeExtent";
    case ErrorCode::kNonPragmaticFrame: return "NonPragmaticFrame";
    case ErrorCode::kInconsistentFeatures: return "InconsistentFeatures";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaVersionUnsupported: return "SchemaVersionUnsupported";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kEmptyPrototypeSet: return "EmptyPrototypeSet";
    case ErrorCode::kInvalidPrototype: return "InvalidPrototype";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDuplicateBinding: return "DuplicateBinding";
    case ErrorCode::kUnknownSpaceElement: return "UnknownSpaceElement";
    case ErrorCode::kInvalidMapping: return "InvalidMapping";
    case ErrorCode::kDegenerateGround: return "DegenerateGround";
    case ErrorCode::kTooFewInputs: return "TooFewInputs";
    case ErrorCode::kOrphanBlendElement: return "OrphanBlendElement";
    case ErrorCode::kFrameOutsideTurnFamily: return "FrameOutsideTurnFamily";
    case ErrorCode::kEmptyInterval: return "EmptyInterval";
    case ErrorCode::kSentenceHasNoTimeSpan: return "SentenceHasNoTimeSpan";
    case ErrorCode::kStaleVersion: return "StaleVersion";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

bool ValidationReport::Has(ErrorCode rule) const {
  return std::any_of(findings.begin(), findings.end(),
                     [rule](const Finding &f) { return f.rule == rule; });
}

}  // namespace framecast
