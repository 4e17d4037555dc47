// Copyright 2026 The factbench Authors.
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

#include "factbench/error.h"

namespace factbench {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kVersionUnsupported: return "VersionUnsupported";
    case ErrorCode::kUnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorCode::kEmptyAlternative: return "EmptyAlternative";
    case ErrorCode::kTokenNotInSentence: return "TokenNotInSentence";
    case ErrorCode::kAllOptional: return "AllOptional";
    case ErrorCode::kVariantLimitExceeded: return "VariantLimitExceeded";
    case ErrorCode::kUnknownSentence: return "UnknownSentence";
    case ErrorCode::kConfidenceOutOfRange: return "ConfidenceOutOfRange";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kTokenizationMismatch: return "TokenizationMismatch";
  }
  return "Unknown";
}

namespace {

std::string Compose(ErrorCode code, const std::string& message,
                    const std::string& location) {
  std::string out(ErrorCodeName(code));
  if (!location.empty()) out += " at " + location;
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, std::string location)
    : std::runtime_error(Compose(code, message, location)),
      code_(code),
      message_(std::move(message)),
      location_(std::move(location)) {}

Error Error::WithLocation(const std::string& prefix) const {
  std::string loc = location_.empty() ? prefix : prefix + ", " + location_;
  Error e(code_, message_, loc);
  e.set_count(count_);
  return e;
}

}  // namespace factbench
