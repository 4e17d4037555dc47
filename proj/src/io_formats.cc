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

#include "factbench/io_formats.h"

#include <charconv>
#include <cmath>
#include <set>

#include "factbench/error.h"
#include "factbench/json_codec.h"
#include "factbench/shorthand.h"

namespace factbench {

using json = nlohmann::json;

namespace {

bool IsValidUtf8(std::string_view s, std::size_t* bad_offset) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xe ? 3
                                   : (c >> 3) == 0x1e ? 4 : 0;
    if (len == 0 || i + len > s.size()) {
      *bad_offset = i;
      return false;
    }
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) {
        *bad_offset = i;
        return false;
      }
    }
    i += len;
  }
  return true;
}

void RequireUtf8(std::string_view bytes) {
  std::size_t off = 0;
  if (!IsValidUtf8(bytes, &off)) {
    throw Error(ErrorCode::kMalformedInput, "input is not valid UTF-8",
                "byte " + std::to_string(off));
  }
}

std::string_view StripBom(std::string_view bytes) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  return bytes;
}

// Splits into lines on LF, dropping a trailing CR from each.
std::vector<std::string_view> Lines(std::string_view bytes) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool IsBlank(std::string_view line) { return SplitWords(line).empty(); }

std::string LineRef(std::size_t n) { return "line " + std::to_string(n); }

[[noreturn]] void Schema(const std::string& msg, const std::string& path) {
  throw Error(ErrorCode::kSchemaViolation, msg, path.empty() ? "/" : path);
}

const json& Field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) Schema("expected an object", path);
  auto it = obj.find(key);
  if (it == obj.end()) Schema(std::string("missing field '") + key + "'", path);
  return *it;
}

std::string StringField(const json& obj, const char* key,
                        const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_string()) Schema("expected a string", path + "/" + key);
  return v.get<std::string>();
}

int IntField(const json& obj, const char* key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_number_integer()) Schema("expected an integer", path + "/" + key);
  return v.get<int>();
}

bool BoolField(const json& obj, const char* key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_boolean()) Schema("expected a boolean", path + "/" + key);
  return v.get<bool>();
}

const json& ArrayField(const json& obj, const char* key,
                       const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_array()) Schema("expected an array", path + "/" + key);
  return v;
}

SlotTemplate SlotFromJson(const json& j, const std::string& path) {
  if (!j.is_array()) Schema("slot must be an array of alternatives", path);
  SlotTemplate slot;
  for (std::size_t a = 0; a < j.size(); ++a) {
    const std::string apath = path + "/" + std::to_string(a);
    if (!j[a].is_array()) Schema("alternative must be an array", apath);
    Alternative alt;
    for (std::size_t k = 0; k < j[a].size(); ++k) {
      const std::string tpath = apath + "/" + std::to_string(k);
      alt.push_back({IntField(j[a][k], "token", tpath),
                     BoolField(j[a][k], "optional", tpath)});
    }
    slot.alternatives.push_back(std::move(alt));
  }
  return slot;
}

FactSynset SynsetFromJson(const json& j, const std::string& path) {
  FactSynset f;
  f.id = StringField(j, "id", path);
  const json& triples = ArrayField(j, "triples", path);
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const std::string tpath = path + "/triples/" + std::to_string(t);
    TripleTemplate tt;
    tt.subject = SlotFromJson(Field(triples[t], "subject", tpath),
                              tpath + "/subject");
    tt.predicate = SlotFromJson(Field(triples[t], "predicate", tpath),
                                tpath + "/predicate");
    tt.object =
        SlotFromJson(Field(triples[t], "object", tpath), tpath + "/object");
    f.triples.push_back(std::move(tt));
  }
  return f;
}

const std::set<std::string>& KnownStateFields() {
  static const std::set<std::string> kFields = {
      "version", "sentences", "synsets", "cursor", "meta"};
  return kFields;
}

}  // namespace

json SentenceToJson(const TaggedSentence& s) {
  json tokens = json::array();
  for (const Token& t : s.tokens) {
    tokens.push_back({{"index", t.index},
                      {"text", t.text},
                      {"pos", std::string(PosName(t.pos))},
                      {"ner", std::string(NerName(t.ner))},
                      {"highlight", std::string(HighlightName(t.highlight))}});
  }
  return {{"id", s.id},
          {"raw", s.raw},
          {"language", s.language},
          {"tokens", std::move(tokens)}};
}

TaggedSentence SentenceFromJson(const json& j, const std::string& path) {
  TaggedSentence s;
  s.id = StringField(j, "id", path);
  s.raw = StringField(j, "raw", path);
  s.language = StringField(j, "language", path);
  const json& tokens = ArrayField(j, "tokens", path);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string tpath = path + "/tokens/" + std::to_string(i);
    Token t;
    t.index = IntField(tokens[i], "index", tpath);
    t.text = StringField(tokens[i], "text", tpath);
    auto pos = ParsePos(StringField(tokens[i], "pos", tpath));
    auto ner = ParseNer(StringField(tokens[i], "ner", tpath));
    auto hl = ParseHighlight(StringField(tokens[i], "highlight", tpath));
    if (!pos) Schema("unknown pos label", tpath + "/pos");
    if (!ner) Schema("unknown ner label", tpath + "/ner");
    if (!hl) Schema("unknown highlight class", tpath + "/highlight");
    t.pos = *pos;
    t.ner = *ner;
    t.highlight = *hl;
    s.tokens.push_back(std::move(t));
  }
  return s;
}

json SlotToJson(const SlotTemplate& slot) {
  json out = json::array();
  for (const Alternative& alt : slot.alternatives) {
    json a = json::array();
    for (const SlotToken& st : alt) {
      a.push_back({{"token", st.token_index}, {"optional", st.optional}});
    }
    out.push_back(std::move(a));
  }
  return out;
}

json SynsetToJson(const FactSynset& f) {
  json triples = json::array();
  for (const TripleTemplate& t : f.triples) {
    triples.push_back({{"subject", SlotToJson(t.subject)},
                       {"predicate", SlotToJson(t.predicate)},
                       {"object", SlotToJson(t.object)}});
  }
  return {{"id", f.id}, {"triples", std::move(triples)}};
}

json DiagnosticsToJson(const std::vector<Diagnostic>& diags) {
  json out = json::array();
  for (const Diagnostic& d : diags) {
    out.push_back({{"severity", std::string(SeverityName(d.severity))},
                   {"sentence_id", d.sentence_id},
                   {"synset_id", d.synset_id},
                   {"code", std::string(LintCodeName(d.code))},
                   {"message", d.message}});
  }
  return out;
}

json ScoreReportToJson(const ScoreReport& r) {
  json per = json::object();
  for (const auto& [sid, c] : r.per_sentence) {
    per[sid] = {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}};
  }
  json matched = json::array();
  for (const SynsetMatch& m : r.matched) {
    matched.push_back({{"extraction", m.extraction_index},
                       {"sentence_id", m.sentence_id},
                       {"synset_id", m.synset_id}});
  }
  return {{"mode", "fact"},
          {"tp", r.tp},
          {"fp", r.fp},
          {"fn", r.fn},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f1", r.f1},
          {"per_sentence", std::move(per)},
          {"matched", std::move(matched)}};
}

json TokenOverlapReportToJson(const TokenOverlapReport& r) {
  json assigned = json::array();
  for (const OverlapAssignment& a : r.assignments) {
    assigned.push_back({{"extraction", a.extraction_index},
                        {"sentence_id", a.sentence_id},
                        {"gold", a.gold_index},
                        {"precision", a.score.precision},
                        {"recall", a.score.recall}});
  }
  return {{"mode", "token-overlap"},
          {"extractions", r.extraction_count},
          {"gold_triples", r.gold_count},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f1", r.f1},
          {"assignments", std::move(assigned)}};
}

GoldBenchmark AnnotationState::Gold() const {
  GoldBenchmark g;
  g.sentences = sentences;
  for (const auto& [sid, list] : synsets) {
    if (!list.empty()) g.synsets[sid] = list;
  }
  return g;
}

AnnotationState AnnotationState::FromGold(const GoldBenchmark& g) {
  AnnotationState st;
  st.sentences = g.sentences;
  st.synsets = g.synsets;
  return st;
}

std::vector<SentenceRecord> LoadSentences(std::string_view bytes) {
  RequireUtf8(bytes);
  bytes = StripBom(bytes);
  std::vector<SentenceRecord> out;
  std::size_t first = 0;
  while (first < bytes.size() && IsSeparatorChar(bytes[first])) ++first;
  if (first == bytes.size()) {
    throw Error(ErrorCode::kEmpty, "no sentences in input");
  }
  if (bytes[first] == '[') {
    json j;
    try {
      j = json::parse(bytes);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMalformedInput, e.what(), "/");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string path = "/" + std::to_string(i);
      const json& item = j[i];
      if (!item.is_object() || !item.contains("id") ||
          !item.contains("text") || !item["id"].is_string() ||
          !item["text"].is_string()) {
        throw Error(ErrorCode::kMalformedInput,
                    "expected {\"id\": string, \"text\": string}", path);
      }
      SentenceRecord r{item["id"].get<std::string>(),
                       item["text"].get<std::string>()};
      if (r.id.empty() ||
          r.id.find_first_of("\t\n\r") != std::string::npos) {
        throw Error(ErrorCode::kMalformedInput,
                    "sentence id must be non-empty without tabs or newlines",
                    path + "/id");
      }
      if (IsBlank(r.text)) {
        throw Error(ErrorCode::kMalformedInput, "sentence text is empty",
                    path + "/text");
      }
      if (!seen.insert(r.id).second) {
        throw Error(ErrorCode::kDuplicateId, "duplicate sentence id " + r.id,
                    path + "/id");
      }
      out.push_back(std::move(r));
    }
  } else {
    for (std::string_view line : Lines(bytes)) {
      if (IsBlank(line)) continue;
      while (IsSeparatorChar(line.front())) line.remove_prefix(1);
      while (IsSeparatorChar(line.back())) line.remove_suffix(1);
      out.push_back({"s" + std::to_string(out.size() + 1), std::string(line)});
    }
  }
  if (out.empty()) throw Error(ErrorCode::kEmpty, "no sentences in input");
  return out;
}

std::string SaveState(const AnnotationState& st) {
  json j = json::object();
  for (const auto& [key, text] : st.extra) j[key] = json::parse(text);
  j["version"] = st.version;
  json sentences = json::array();
  for (const TaggedSentence& s : st.sentences) {
    sentences.push_back(SentenceToJson(s));
  }
  j["sentences"] = std::move(sentences);
  json synsets = json::object();
  for (const auto& [sid, list] : st.synsets) {
    json arr = json::array();
    for (const FactSynset& f : list) arr.push_back(SynsetToJson(f));
    synsets[sid] = std::move(arr);
  }
  j["synsets"] = std::move(synsets);
  if (st.cursor) j["cursor"] = *st.cursor;
  j["meta"] = st.meta;
  return j.dump(2) + "\n";
}

AnnotationState LoadState(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what(), "/");
  }
  if (!j.is_object()) Schema("state must be a JSON object", "/");
  AnnotationState st;
  const json& version = Field(j, "version", "");
  if (!version.is_string()) Schema("expected a string", "/version");
  st.version = version.get<std::string>();
  if (st.version != kStateVersion) {
    throw Error(ErrorCode::kVersionUnsupported,
                "state version " + st.version + " is not supported (expected " +
                    std::string(kStateVersion) + ")",
                "/version");
  }
  const json& sentences = ArrayField(j, "sentences", "");
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    st.sentences.push_back(
        SentenceFromJson(sentences[i], "/sentences/" + std::to_string(i)));
  }
  const json& synsets = Field(j, "synsets", "");
  if (!synsets.is_object()) Schema("expected an object", "/synsets");
  for (const auto& [sid, list] : synsets.items()) {
    const std::string path = "/synsets/" + sid;
    if (!list.is_array()) Schema("expected an array", path);
    auto& out = st.synsets[sid];
    for (std::size_t k = 0; k < list.size(); ++k) {
      out.push_back(SynsetFromJson(list[k], path + "/" + std::to_string(k)));
    }
  }
  if (j.contains("cursor") && !j["cursor"].is_null()) {
    if (!j["cursor"].is_string()) Schema("expected a string", "/cursor");
    st.cursor = j["cursor"].get<std::string>();
  }
  if (j.contains("meta")) {
    const json& meta = j["meta"];
    if (!meta.is_object()) Schema("expected an object", "/meta");
    for (const auto& [k, v] : meta.items()) {
      if (!v.is_string()) Schema("expected a string", "/meta/" + k);
      st.meta[k] = v.get<std::string>();
    }
  }
  for (const auto& [key, value] : j.items()) {
    if (!KnownStateFields().count(key)) st.extra[key] = value.dump();
  }
  ValidateState(st);
  return st;
}

void ValidateState(const AnnotationState& st) {
  std::map<std::string, std::size_t> sentence_pos;
  for (std::size_t i = 0; i < st.sentences.size(); ++i) {
    const std::string path = "/sentences/" + std::to_string(i);
    try {
      ValidateSentence(st.sentences[i]);
    } catch (const Error& e) {
      Schema(e.message(), path);
    }
    if (!sentence_pos.emplace(st.sentences[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate sentence id " + st.sentences[i].id, path + "/id");
    }
  }
  if (st.cursor && !sentence_pos.count(*st.cursor)) {
    Schema("cursor names unknown sentence " + *st.cursor, "/cursor");
  }
  for (const auto& [sid, list] : st.synsets) {
    const std::string path = "/synsets/" + sid;
    auto it = sentence_pos.find(sid);
    if (it == sentence_pos.end()) {
      throw Error(ErrorCode::kUnknownSentence,
                  "synsets reference unknown sentence " + sid, path);
    }
    std::set<std::string> ids;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string fpath = path + "/" + std::to_string(k);
      const FactSynset& f = list[k];
      if (f.id.empty() || f.id.find_first_of("\t\n\r") != std::string::npos) {
        Schema("synset id must be non-empty without tabs or newlines",
               fpath + "/id");
      }
      if (!ids.insert(f.id).second) {
        throw Error(ErrorCode::kDuplicateId, "duplicate synset id " + f.id,
                    fpath + "/id");
      }
      try {
        ValidateSynset(f, st.sentences[it->second]);
      } catch (const Error& e) {
        Schema(e.what(), fpath);
      }
    }
  }
}

std::string ExportTsv(const GoldBenchmark& g) {
  std::string out;
  for (const TaggedSentence& s : g.sentences) {
    auto it = g.synsets.find(s.id);
    if (it == g.synsets.end()) continue;
    for (const FactSynset& f : it->second) {
      for (const TripleTemplate& t : f.triples) {
        out += s.id;
        out += '\t';
        out += f.id;
        out += '\t';
        out += FormatSlotShorthand(t.subject, s);
        out += '\t';
        out += FormatSlotShorthand(t.predicate, s);
        out += '\t';
        out += FormatSlotShorthand(t.object, s);
        out += '\n';
      }
    }
  }
  return out;
}

std::string ExportTsv(const AnnotationState& st) { return ExportTsv(st.Gold()); }

namespace {

struct TsvRow {
  std::size_t line = 0;
  std::string sentence_id;
  std::string synset_id;
  std::string_view slots[3];
};

std::vector<TsvRow> ReadGoldRows(std::string_view bytes) {
  RequireUtf8(bytes);
  bytes = StripBom(bytes);
  std::vector<TsvRow> rows;
  std::vector<std::string_view> lines = Lines(bytes);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (IsBlank(lines[n])) continue;
    std::vector<std::string_view> f = SplitTabs(lines[n]);
    if (f.size() != 5) {
      throw Error(ErrorCode::kMalformedInput,
                  "expected 5 tab-separated fields, found " +
                      std::to_string(f.size()),
                  LineRef(n + 1));
    }
    if (f[0].empty() || f[1].empty()) {
      throw Error(ErrorCode::kMalformedInput, "empty sentence or synset id",
                  LineRef(n + 1));
    }
    rows.push_back({n + 1, std::string(f[0]), std::string(f[1]),
                    {f[2], f[3], f[4]}});
  }
  return rows;
}

const char* kTsvSlotNames[] = {"subject", "predicate", "object"};

}  // namespace

GoldBenchmark ImportGoldTsv(std::string_view bytes,
                            const std::vector<TaggedSentence>& sentences,
                            const NormalizationConfig& cfg) {
  GoldBenchmark g;
  g.sentences = sentences;
  for (const TsvRow& row : ReadGoldRows(bytes)) {
    const TaggedSentence* s = g.FindSentence(row.sentence_id);
    if (s == nullptr) {
      throw Error(ErrorCode::kUnknownSentence,
                  "unknown sentence " + row.sentence_id, LineRef(row.line));
    }
    SlotTemplate slots[3];
    for (int k = 0; k < 3; ++k) {
      try {
        slots[k] = ParseSlotShorthand(row.slots[k], *s, cfg);
      } catch (const Error& e) {
        throw e.WithLocation(LineRef(row.line) + " " + kTsvSlotNames[k]);
      }
    }
    auto& list = g.synsets[row.sentence_id];
    FactSynset* target = nullptr;
    for (FactSynset& f : list) {
      if (f.id == row.synset_id) target = &f;
    }
    if (target == nullptr) {
      list.push_back({row.synset_id, {}});
      target = &list.back();
    }
    target->triples.push_back(
        {std::move(slots[0]), std::move(slots[1]), std::move(slots[2])});
  }
  return g;
}

std::vector<Diagnostic> LintGoldTsv(
    std::string_view bytes, const std::vector<TaggedSentence>& sentences,
    const NormalizationConfig& cfg, const ExpansionLimits& lim) {
  GoldBenchmark g;
  g.sentences = sentences;
  std::vector<Diagnostic> parse_diags;
  for (const TsvRow& row : ReadGoldRows(bytes)) {
    const TaggedSentence* s = g.FindSentence(row.sentence_id);
    if (s == nullptr) {
      throw Error(ErrorCode::kUnknownSentence,
                  "unknown sentence " + row.sentence_id, LineRef(row.line));
    }
    auto& list = g.synsets[row.sentence_id];
    FactSynset* target = nullptr;
    for (FactSynset& f : list) {
      if (f.id == row.synset_id) target = &f;
    }
    if (target == nullptr) {
      list.push_back({row.synset_id, {}});
      target = &list.back();
    }
    SlotTemplate slots[3];
    bool ok = true;
    for (int k = 0; k < 3; ++k) {
      try {
        slots[k] = ParseSlotShorthand(row.slots[k], *s, cfg);
      } catch (const Error& e) {
        LintCode code = LintCode::kEmptySlot;
        Severity sev = Severity::kError;
        switch (e.code()) {
          case ErrorCode::kTokenNotInSentence:
            code = LintCode::kExplicitnessViolation;
            break;
          case ErrorCode::kAllOptional:
            code = LintCode::kAllOptionalAlternative;
            break;
          case ErrorCode::kEmptyAlternative:
            code = LintCode::kEmptySlot;
            break;
          default:
            throw e.WithLocation(LineRef(row.line) + " " + kTsvSlotNames[k]);
        }
        parse_diags.push_back({sev, row.sentence_id, row.synset_id, code,
                               LineRef(row.line) + " " + kTsvSlotNames[k] +
                                   ": " + e.message()});
        ok = false;
      }
    }
    if (ok) {
      target->triples.push_back(
          {std::move(slots[0]), std::move(slots[1]), std::move(slots[2])});
    }
  }
  // Synsets whose every row failed to parse are already reported; keep them
  // out of the EMPTY_SYNSET check.
  std::set<std::pair<std::string, std::string>> failed;
  for (const Diagnostic& d : parse_diags) {
    failed.emplace(d.sentence_id, d.synset_id);
  }
  for (auto& [sid, list] : g.synsets) {
    std::erase_if(list, [&](const FactSynset& f) {
      return f.triples.empty() && failed.count({sid, f.id});
    });
  }
  std::vector<Diagnostic> out = LintGold(g, cfg, lim);
  out.insert(out.end(), parse_diags.begin(), parse_diags.end());
  SortDiagnostics(g, out);
  return out;
}

std::vector<SystemExtraction> LoadSystemExtractions(std::string_view bytes) {
  RequireUtf8(bytes);
  bytes = StripBom(bytes);
  std::vector<SystemExtraction> out;
  std::vector<std::string_view> lines = Lines(bytes);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (IsBlank(lines[n])) continue;
    std::vector<std::string_view> f = SplitTabs(lines[n]);
    if (f.size() != 4 && f.size() != 5) {
      throw Error(ErrorCode::kMalformedInput,
                  "expected 4 or 5 tab-separated fields, found " +
                      std::to_string(f.size()),
                  LineRef(n + 1));
    }
    SystemExtraction e;
    e.sentence_id = std::string(f[0]);
    e.subject = std::string(f[1]);
    e.predicate = std::string(f[2]);
    e.object = std::string(f[3]);
    if (e.sentence_id.empty()) {
      throw Error(ErrorCode::kMalformedInput, "empty sentence id",
                  LineRef(n + 1));
    }
    if (f.size() == 5) {
      std::string_view text = f[4];
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                       value);
      if (ec != std::errc() || ptr != text.data() + text.size() ||
          std::isnan(value)) {
        throw Error(ErrorCode::kMalformedInput,
                    "confidence '" + std::string(text) + "' is not a number",
                    LineRef(n + 1));
      }
      e.confidence = value;
    }
    try {
      ValidateExtraction(e);
    } catch (const Error& err) {
      throw err.WithLocation(LineRef(n + 1));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string WriteSystemExtractions(
    const std::vector<SystemExtraction>& extractions) {
  std::string out;
  for (const SystemExtraction& e : extractions) {
    out += e.sentence_id + '\t' + e.subject + '\t' + e.predicate + '\t' +
           e.object;
    if (e.confidence) {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, *e.confidence);
      out += '\t';
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace factbench
