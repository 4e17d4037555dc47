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

// Command-line front end: score, expand, prune, lint, tag, serve.
//
// Exit codes: 0 success, 1 runtime/environment failure, 2 input error.

#include <pthread.h>
#include <signal.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "factbench/core_model.h"
#include "factbench/error.h"
#include "factbench/io_formats.h"
#include "factbench/json_codec.h"
#include "factbench/scoring.h"
#include "factbench/service.h"
#include "factbench/shorthand.h"
#include "factbench/tagger.h"

namespace fb = factbench;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitInput = 2;

std::string ReadInputFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw fb::Error(fb::ErrorCode::kMalformedInput, "cannot read file", path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutputFile(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << bytes)) {
    throw std::runtime_error("cannot write " + path);
  }
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct CommonFlags {
  bool case_sensitive = false;
  bool strip_terminal_punct = false;
  std::uint64_t max_variants = fb::ExpansionLimits{}.max_variants_per_triple;
  std::uint64_t max_synset_variants =
      fb::ExpansionLimits{}.max_variants_per_synset;
  std::string unknown_sentences = "strict";
  std::string tagger_config;

  fb::NormalizationConfig Normalization() const {
    return {!case_sensitive, strip_terminal_punct};
  }
  fb::ExpansionLimits Limits() const {
    return {max_variants, max_synset_variants};
  }
  fb::FactScoreOptions ScoreOptions() const {
    fb::FactScoreOptions o;
    if (unknown_sentences == "fp") {
      o.unknown_sentences = fb::UnknownSentencePolicy::kCountAsFalsePositive;
    }
    return o;
  }
  fb::TaggerConfig Tagger() const {
    return tagger_config.empty() ? fb::DefaultTaggerConfig()
                                 : fb::LoadTaggerConfig(tagger_config);
  }
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--case-sensitive", f.case_sensitive,
                "Compare tokens without case folding");
  cmd->add_flag("--strip-terminal-punct", f.strip_terminal_punct,
                "Ignore a final single punctuation token in each slot");
  cmd->add_option("--max-variants", f.max_variants,
                  "Variant limit per triple template")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-synset-variants", f.max_synset_variants,
                  "Variant limit per fact synset")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--unknown-sentences", f.unknown_sentences,
                  "Extractions for sentences not in the gold: strict|fp")
      ->check(CLI::IsMember({"strict", "fp"}));
  cmd->add_option("--tagger-config", f.tagger_config,
                  "Tagger config JSON used when tagging sentence files");
}

struct GoldInput {
  std::string path;
  std::string sentences;
  std::string format = "auto";  // auto|state|tsv|extractions
};

void AddGoldOptions(CLI::App* cmd, GoldInput& g) {
  cmd->add_option("gold", g.path, "Gold benchmark (.json state or TSV)")
      ->required();
  cmd->add_option("--sentences", g.sentences,
                  "Sentence file for TSV gold (text or JSON array)");
}

std::string ResolvedFormat(const GoldInput& g) {
  if (g.format != "auto") return g.format;
  return EndsWith(g.path, ".json") ? "state" : "tsv";
}

std::vector<fb::TaggedSentence> TagSentenceFile(const std::string& path,
                                                const fb::TaggerConfig& tagger) {
  std::vector<fb::TaggedSentence> out;
  for (const fb::SentenceRecord& r : fb::LoadSentences(ReadInputFile(path))) {
    out.push_back(fb::Tag(r.text, r.id, tagger));
  }
  return out;
}

fb::GoldBenchmark LoadGold(const GoldInput& g, const CommonFlags& flags) {
  const std::string bytes = ReadInputFile(g.path);
  if (ResolvedFormat(g) == "state") {
    try {
      return fb::LoadState(bytes).Gold();
    } catch (const fb::Error& e) {
      throw e.WithLocation(g.path);
    }
  }
  if (g.sentences.empty()) {
    throw fb::Error(fb::ErrorCode::kInvalidArgument,
                    "TSV gold needs --sentences", g.path);
  }
  auto sentences = TagSentenceFile(g.sentences, flags.Tagger());
  try {
    return fb::ImportGoldTsv(bytes, sentences, flags.Normalization());
  } catch (const fb::Error& e) {
    throw e.WithLocation(g.path);
  }
}

std::vector<fb::SystemExtraction> LoadSystem(const std::string& path) {
  try {
    return fb::LoadSystemExtractions(ReadInputFile(path));
  } catch (const fb::Error& e) {
    throw e.WithLocation(path);
  }
}

std::string Fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

int RunScore(const GoldInput& gold, const std::string& system,
             const std::string& mode, const std::string& report_path,
             const CommonFlags& flags) {
  auto extractions = LoadSystem(system);
  json report;
  if (mode == "fact") {
    fb::GoldBenchmark g = LoadGold(gold, flags);
    fb::ScoreReport r = fb::ScoreFactBased(
        extractions, g, flags.Normalization(), flags.Limits(),
        flags.ScoreOptions());
    std::cout << "mode         fact\n"
              << "sentences    " << g.sentences.size() << "\n"
              << "synsets      " << g.SynsetCount() << "\n"
              << "extractions  " << extractions.size() << "\n"
              << "TP " << r.tp << "  FP " << r.fp << "  FN " << r.fn << "\n"
              << "P " << Fixed2(r.precision) << " R " << Fixed2(r.recall)
              << " F1 " << Fixed2(r.f1) << "\n";
    report = fb::ScoreReportToJson(r);
  } else {
    fb::GoldTriples golds;
    if (ResolvedFormat(gold) == "extractions") {
      for (const auto& e : LoadSystem(gold.path)) {
        golds[e.sentence_id].push_back(fb::ToConcrete(e));
      }
    } else {
      golds = fb::FullestRealizations(LoadGold(gold, flags));
    }
    fb::TokenOverlapReport r =
        fb::ScoreTokenOverlap(extractions, golds, flags.Normalization());
    std::cout << "mode          token-overlap\n"
              << "extractions   " << r.extraction_count << "\n"
              << "gold triples  " << r.gold_count << "\n"
              << "P " << Fixed2(r.precision) << " R " << Fixed2(r.recall)
              << " F1 " << Fixed2(r.f1) << "\n";
    report = fb::TokenOverlapReportToJson(r);
  }
  if (!report_path.empty()) WriteOutputFile(report_path, report.dump(2) + "\n");
  return kExitOk;
}

int RunExpand(const GoldInput& gold, bool counts_only,
              const CommonFlags& flags) {
  fb::GoldBenchmark g = LoadGold(gold, flags);
  std::size_t synsets = 0;
  std::size_t triples = 0;
  std::ostringstream out;
  for (const fb::TaggedSentence& s : g.sentences) {
    auto it = g.synsets.find(s.id);
    if (it == g.synsets.end()) continue;
    for (const fb::FactSynset& f : it->second) {
      fb::Expansion exp;
      try {
        exp = fb::ExpandSynset(f, s, flags.Normalization(), flags.Limits());
      } catch (const fb::Error& e) {
        throw e.WithLocation("sentence " + s.id + ", synset " + f.id);
      }
      ++synsets;
      triples += exp.triples.size();
      if (counts_only) {
        out << s.id << '\t' << f.id << '\t' << exp.triples.size() << '\n';
        continue;
      }
      for (const fb::ConcreteTriple& t : exp.triples) {
        out << s.id << '\t' << f.id << '\t' << fb::JoinWords(t.subject) << '\t'
            << fb::JoinWords(t.predicate) << '\t' << fb::JoinWords(t.object)
            << '\n';
      }
    }
  }
  std::cout << out.str() << "# total: " << synsets << " synsets, " << triples
            << " triples\n";
  return kExitOk;
}

int RunPrune(const GoldInput& gold, const std::string& system,
             const std::string& target, const CommonFlags& flags) {
  fb::GoldBenchmark g = LoadGold(gold, flags);
  auto extractions = LoadSystem(system);
  auto source = target == "ner-spans" ? fb::ArgumentSource::kNerSpans
                                      : fb::ArgumentSource::kGoldArguments;
  auto kept = fb::PruneNeCentric(extractions, g, flags.Normalization(),
                                 flags.Limits(), source);
  std::cout << fb::WriteSystemExtractions(kept);
  std::cerr << "kept " << kept.size() << " of " << extractions.size() << "\n";
  return kExitOk;
}

int RunLint(const GoldInput& gold, bool as_json, const CommonFlags& flags) {
  std::vector<fb::Diagnostic> diags;
  if (ResolvedFormat(gold) == "state") {
    diags = fb::LintGold(LoadGold(gold, flags), flags.Normalization(),
                         flags.Limits());
  } else {
    if (gold.sentences.empty()) {
      throw fb::Error(fb::ErrorCode::kInvalidArgument,
                      "TSV gold needs --sentences", gold.path);
    }
    auto sentences = TagSentenceFile(gold.sentences, flags.Tagger());
    try {
      diags = fb::LintGoldTsv(ReadInputFile(gold.path), sentences,
                              flags.Normalization(), flags.Limits());
    } catch (const fb::Error& e) {
      throw e.WithLocation(gold.path);
    }
  }
  std::size_t errors = 0;
  for (const auto& d : diags) errors += d.severity == fb::Severity::kError;
  if (as_json) {
    std::cout << fb::DiagnosticsToJson(diags).dump(2) << "\n";
  } else {
    for (const auto& d : diags) {
      std::cout << fb::SeverityName(d.severity) << '\t' << d.sentence_id
                << '\t' << d.synset_id << '\t' << fb::LintCodeName(d.code)
                << '\t' << d.message << '\n';
    }
    std::cout << "# " << diags.size() << " diagnostics, " << errors
              << " errors\n";
  }
  return errors > 0 ? kExitInput : kExitOk;
}

int RunTag(const std::string& input, bool pretagged, const std::string& scheme,
           const CommonFlags& flags) {
  fb::TaggerConfig tagger = flags.Tagger();
  if (!scheme.empty()) tagger.highlight_scheme = *fb::ParseHighlightScheme(scheme);
  json out = json::array();
  if (pretagged) {
    json doc = json::parse(ReadInputFile(input), nullptr, false);
    if (doc.is_discarded()) {
      throw fb::Error(fb::ErrorCode::kSchemaViolation, "invalid JSON", input);
    }
    if (!doc.is_array()) doc = json::array({doc});
    for (std::size_t i = 0; i < doc.size(); ++i) {
      try {
        out.push_back(
            fb::SentenceToJson(fb::IngestPretagged(doc[i].dump(), tagger)));
      } catch (const fb::Error& e) {
        throw e.WithLocation(input + ":/" + std::to_string(i));
      }
    }
  } else {
    for (const auto& s : TagSentenceFile(input, tagger)) {
      out.push_back(fb::SentenceToJson(s));
    }
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct ServeFlags {
  std::string host;
  int port = -1;
  std::string data_dir;
  std::string static_dir;
};

int RunServe(ServeFlags sf, const CommonFlags& flags) {
  fb::ServiceConfig cfg;
  if (const char* bind = std::getenv("BIND_ADDR"); bind && *bind) {
    std::string b = bind;
    auto colon = b.rfind(':');
    if (colon == std::string::npos) {
      cfg.host = b;
    } else {
      cfg.host = b.substr(0, colon);
      cfg.port = std::stoi(b.substr(colon + 1));
    }
  }
  if (const char* dir = std::getenv("DATA_DIR"); dir && *dir) {
    cfg.data_dir = dir;
  }
  CommonFlags tagger_flags = flags;
  if (tagger_flags.tagger_config.empty()) {
    if (const char* tc = std::getenv("TAGGER_CONFIG"); tc && *tc) {
      tagger_flags.tagger_config = tc;
    }
  }
  if (!sf.host.empty()) cfg.host = sf.host;
  if (sf.port >= 0) cfg.port = sf.port;
  if (!sf.data_dir.empty()) cfg.data_dir = sf.data_dir;
  if (!sf.static_dir.empty()) cfg.static_dir = sf.static_dir;
  cfg.tagger = tagger_flags.Tagger();
  cfg.normalization = flags.Normalization();

  // Handle SIGINT/SIGTERM on a dedicated thread so shutdown can run
  // ordinary code.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  fb::AnnotationServer server(cfg);
  if (!server.Bind()) {
    std::cerr << "error: cannot bind " << cfg.host << ":" << cfg.port << "\n";
    return kExitRuntime;
  }
  std::cout << "listening on " << cfg.host << ":" << server.port() << std::endl;

  std::thread waiter([&server, signals] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.Stop();
  });
  server.Run();
  // Run() returned without a signal only on internal failure; wake the
  // waiter either way.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fact-synset OIE benchmark toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  GoldInput gold;

  auto* score = app.add_subcommand("score", "Score system extractions");
  std::string system_path, mode = "fact", report_path;
  AddGoldOptions(score, gold);
  score->add_option("system", system_path, "System extractions TSV")->required();
  score->add_option("--mode", mode, "fact|token-overlap")
      ->check(CLI::IsMember({"fact", "token-overlap"}));
  score->add_option("--gold-format", gold.format,
                    "auto|state|tsv|extractions (extractions: token-overlap "
                    "only)")
      ->check(CLI::IsMember({"auto", "state", "tsv", "extractions"}));
  score->add_option("--report", report_path, "Write a JSON report here");
  AddCommonFlags(score, flags);

  auto* expand = app.add_subcommand("expand", "List gold surface realizations");
  bool counts_only = false;
  AddGoldOptions(expand, gold);
  expand->add_flag("--counts-only", counts_only, "Print counts only");
  AddCommonFlags(expand, flags);

  auto* prune = app.add_subcommand("prune", "Keep NE-centric extractions");
  std::string prune_target = "gold-args";
  AddGoldOptions(prune, gold);
  prune->add_option("system", system_path, "System extractions TSV")->required();
  prune->add_option("--prune-target", prune_target,
                    "Argument strings to look for: gold-args|ner-spans")
      ->check(CLI::IsMember({"gold-args", "ner-spans"}));
  AddCommonFlags(prune, flags);

  auto* lint = app.add_subcommand("lint", "Check gold annotations");
  bool lint_json = false;
  AddGoldOptions(lint, gold);
  lint->add_flag("--json", lint_json, "Emit diagnostics as JSON");
  AddCommonFlags(lint, flags);

  auto* tag = app.add_subcommand("tag", "Tokenize and tag sentences");
  std::string tag_input, scheme;
  bool pretagged = false;
  tag->add_option("input", tag_input, "Sentence file")->required();
  tag->add_flag("--pretagged", pretagged,
                "Input is pre-tagged JSON (object or array)");
  tag->add_option("--scheme", scheme, "FULL|VERBS|NAMED_ENTITIES|NONE")
      ->check(CLI::IsMember({"FULL", "VERBS", "NAMED_ENTITIES", "NONE"}));
  tag->add_option("--tagger-config", flags.tagger_config, "Tagger config JSON");

  auto* serve = app.add_subcommand("serve", "Run the annotation service");
  ServeFlags sf;
  serve->add_option("--host", sf.host, "Bind host (default 127.0.0.1)");
  serve->add_option("--port", sf.port, "Bind port (default 8080, 0 = any)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--data-dir", sf.data_dir, "Session directory");
  serve->add_option("--static-dir", sf.static_dir, "Web UI assets");
  serve->add_option("--tagger-config", flags.tagger_config, "Tagger config JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*score) {
      if (mode == "fact" && gold.format == "extractions") {
        throw fb::Error(fb::ErrorCode::kInvalidArgument,
                        "--gold-format extractions requires "
                        "--mode token-overlap");
      }
      return RunScore(gold, system_path, mode, report_path, flags);
    }
    if (*expand) return RunExpand(gold, counts_only, flags);
    if (*prune) return RunPrune(gold, system_path, prune_target, flags);
    if (*lint) return RunLint(gold, lint_json, flags);
    if (*tag) return RunTag(tag_input, pretagged, scheme, flags);
    if (*serve) return RunServe(sf, flags);
  } catch (const fb::Error& e) {
    std::cerr << "error: " << e.what();
    if (e.code() == fb::ErrorCode::kVariantLimitExceeded) {
      std::cerr << " (would-be count " << e.count() << ")";
    }
    std::cerr << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
