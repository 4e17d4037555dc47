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

#ifndef FACTBENCH_ERROR_H_
#define FACTBENCH_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace factbench {

enum class ErrorCode {
  kInvalidArgument,
  kMalformedInput,
  kDuplicateId,
  kEmpty,
  kSchemaViolation,
  kVersionUnsupported,
  kUnbalancedBrackets,
  kEmptyAlternative,
  kTokenNotInSentence,
  kAllOptional,
  kVariantLimitExceeded,
  kUnknownSentence,
  kConfidenceOutOfRange,
  kEmptyText,
  kTokenizationMismatch,
};

// Stable name used in messages, HTTP error bodies and CLI output,
// e.g. "TokenNotInSentence".
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception. `location` is a
// line reference ("line 3"), a JSON path ("/sentences/0/id") or empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string location = "");

  ErrorCode code() const { return code_; }
  const std::string& location() const { return location_; }
  const std::string& message() const { return message_; }

  // Would-be variant count for kVariantLimitExceeded, 0 otherwise.
  std::uint64_t count() const { return count_; }
  Error& set_count(std::uint64_t n) {
    count_ = n;
    return *this;
  }

  // Returns a copy with `prefix` prepended to the location.
  Error WithLocation(const std::string& prefix) const;

 private:
  ErrorCode code_;
  std::string message_;
  std::string location_;
  std::uint64_t count_ = 0;
};

}  // namespace factbench

#endif  // FACTBENCH_ERROR_H_
