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

#ifndef FACTBENCH_JSON_CODEC_H_
#define FACTBENCH_JSON_CODEC_H_

// JSON encodings shared by the state file, the HTTP service and CLI
// reports.

#include <string>
#include <vector>

#include "factbench/core_model.h"
#include "factbench/scoring.h"
#include "json.hpp"

namespace factbench {

nlohmann::json SentenceToJson(const TaggedSentence& s);
TaggedSentence SentenceFromJson(const nlohmann::json& j,
                                const std::string& path);

nlohmann::json SlotToJson(const SlotTemplate& slot);
nlohmann::json SynsetToJson(const FactSynset& f);

nlohmann::json DiagnosticsToJson(const std::vector<Diagnostic>& diags);
nlohmann::json ScoreReportToJson(const ScoreReport& r);
nlohmann::json TokenOverlapReportToJson(const TokenOverlapReport& r);

}  // namespace factbench

#endif  // FACTBENCH_JSON_CODEC_H_
