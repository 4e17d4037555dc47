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

#include "factbench/service.h"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "factbench/error.h"
#include "factbench/json_codec.h"
#include "httplib.h"

namespace factbench {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string NowIso8601() {
  using namespace std::chrono;
  auto now = system_clock::now();
  std::time_t t = system_clock::to_time_t(now);
  auto ms = duration_cast<milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

std::string RandomId() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(rng()));
  return buf;
}

// Write-then-rename with fsync of both the file and its directory.
void WriteFileAtomically(const fs::path& path, const std::string& bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) {
    throw std::runtime_error("cannot open " + tmp.string() + " for writing");
  }
  std::size_t written = 0;
  while (written < bytes.size()) {
    ssize_t n = ::write(fd, bytes.data() + written, bytes.size() - written);
    if (n < 0) {
      ::close(fd);
      throw std::runtime_error("write failed for " + tmp.string());
    }
    written += static_cast<std::size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
  fs::rename(tmp, path);
  int dfd = ::open(path.parent_path().c_str(), O_RDONLY | O_DIRECTORY);
  if (dfd >= 0) {
    ::fsync(dfd);
    ::close(dfd);
  }
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string EncodeSessionFile(const Session& s) {
  json j = {{"session",
             {{"id", s.id}, {"created", s.created}, {"updated", s.updated}}},
            {"state", json::parse(SaveState(s.state))}};
  return j.dump(2) + "\n";
}

Session DecodeSessionFile(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, e.what(), "/");
  }
  if (!j.is_object() || !j.contains("session") || !j.contains("state")) {
    throw Error(ErrorCode::kSchemaViolation, "not a session file", "/");
  }
  Session s;
  const json& meta = j["session"];
  s.id = meta.value("id", "");
  s.created = meta.value("created", "");
  s.updated = meta.value("updated", "");
  if (s.id.empty()) {
    throw Error(ErrorCode::kSchemaViolation, "missing id", "/session/id");
  }
  s.state = LoadState(j["state"].dump());
  return s;
}

std::shared_ptr<const Session> SessionStore::Entry::Load() const {
  std::lock_guard<std::mutex> lock(ptr_mu);
  return current;
}

void SessionStore::Entry::Store(std::shared_ptr<const Session> s) {
  std::lock_guard<std::mutex> lock(ptr_mu);
  current = std::move(s);
}

SessionStore::SessionStore(fs::path data_dir) : data_dir_(std::move(data_dir)) {
  fs::create_directories(data_dir_);
  for (const auto& entry : fs::directory_iterator(data_dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") {
      continue;
    }
    try {
      Session s = DecodeSessionFile(ReadAll(entry.path()));
      if (entry.path().stem() != s.id) continue;
      auto e = std::make_unique<Entry>();
      e->current = std::make_shared<const Session>(std::move(s));
      sessions_.emplace(entry.path().stem().string(), std::move(e));
    } catch (const Error&) {
      // Unreadable files are left in place for inspection.
    }
  }
}

fs::path SessionStore::PathFor(const std::string& id) const {
  return data_dir_ / (id + ".json");
}

void SessionStore::Persist(const Session& s) const {
  WriteFileAtomically(PathFor(s.id), EncodeSessionFile(s));
}

SessionStore::Entry* SessionStore::Find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second.get();
}

std::string SessionStore::Create(AnnotationState state) {
  auto session = std::make_shared<Session>();
  session->state = std::move(state);
  session->created = session->updated = NowIso8601();
  std::unique_lock lock(mu_);
  do {
    session->id = RandomId();
  } while (sessions_.count(session->id));
  Persist(*session);
  auto e = std::make_unique<Entry>();
  e->current = std::move(session);
  std::string id = e->current->id;
  sessions_.emplace(id, std::move(e));
  return id;
}

std::shared_ptr<const Session> SessionStore::Get(const std::string& id) const {
  Entry* e = Find(id);
  return e == nullptr ? nullptr : e->Load();
}

bool SessionStore::ReplaceState(const std::string& id, AnnotationState state) {
  Entry* e = Find(id);
  if (e == nullptr) return false;
  std::lock_guard<std::mutex> write(e->write_mu);
  auto next = std::make_shared<Session>(*e->Load());
  next->state = std::move(state);
  next->updated = NowIso8601();
  next->dirty = true;
  try {
    Persist(*next);
    next->dirty = false;
  } catch (...) {
    e->Store(next);
    throw;
  }
  e->Store(std::move(next));
  return true;
}

void SessionStore::Flush() {
  std::shared_lock lock(mu_);
  for (auto& [id, e] : sessions_) {
    std::lock_guard<std::mutex> write(e->write_mu);
    auto current = e->Load();
    if (!current->dirty) continue;
    auto clean = std::make_shared<Session>(*current);
    Persist(*clean);
    clean->dirty = false;
    e->Store(std::move(clean));
  }
}

std::vector<std::string> SessionStore::Ids() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> ids;
  for (const auto& [id, e] : sessions_) ids.push_back(id);
  return ids;
}

namespace {

void SendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, int status, const std::string& code,
               const std::string& message, const std::string& location = "") {
  json body = {{"error", code}, {"message", message}};
  if (!location.empty()) body["location"] = location;
  SendJson(res, status, body);
}

void SendError(httplib::Response& res, int status, const Error& e) {
  SendError(res, status, std::string(ErrorCodeName(e.code())), e.message(),
            e.location());
}

}  // namespace

AnnotationServer::AnnotationServer(ServiceConfig cfg)
    : cfg_(std::move(cfg)),
      store_(cfg_.data_dir),
      http_(std::make_unique<httplib::Server>()) {
  Routes();
}

AnnotationServer::~AnnotationServer() { Stop(); }

bool AnnotationServer::Bind() {
  if (cfg_.port == 0) {
    bound_port_ = http_->bind_to_any_port(cfg_.host);
    return bound_port_ > 0;
  }
  if (!http_->bind_to_port(cfg_.host, cfg_.port)) return false;
  bound_port_ = cfg_.port;
  return true;
}

void AnnotationServer::Run() {
  http_->listen_after_bind();
  store_.Flush();
}

void AnnotationServer::Stop() {
  if (http_ && http_->is_running()) http_->stop();
}

void AnnotationServer::Routes() {
  httplib::Server& srv = *http_;

  if (!cfg_.static_dir.empty() && fs::is_directory(cfg_.static_dir)) {
    srv.set_mount_point("/", cfg_.static_dir.string());
  }

  auto with_session = [this](const httplib::Request& req,
                             httplib::Response& res)
      -> std::shared_ptr<const Session> {
    auto s = store_.Get(req.path_params.at("id"));
    if (!s) SendError(res, 404, "NotFound", "unknown session");
    return s;
  };

  srv.Post("/api/sessions", [this](const httplib::Request& req,
                                   httplib::Response& res) {
    try {
      std::vector<SentenceRecord> records = LoadSentences(req.body);
      AnnotationState st;
      for (const SentenceRecord& r : records) {
        st.sentences.push_back(Tag(r.text, r.id, cfg_.tagger));
      }
      st.cursor = st.sentences.front().id;
      st.meta["created"] = NowIso8601();
      std::string id = store_.Create(std::move(st));
      SendJson(res, 201,
               {{"session_id", id}, {"sentence_count", records.size()}});
    } catch (const Error& e) {
      SendError(res, 400, e);
    }
  });

  srv.Get("/api/sessions/:id", [with_session](const httplib::Request& req,
                                              httplib::Response& res) {
    auto s = with_session(req, res);
    if (!s) return;
    json ids = json::array();
    for (const TaggedSentence& t : s->state.sentences) ids.push_back(t.id);
    json body = {{"session_id", s->id},
                 {"sentence_count", s->state.sentences.size()},
                 {"sentence_ids", std::move(ids)},
                 {"created", s->created},
                 {"updated", s->updated},
                 {"dirty", s->dirty}};
    if (s->state.cursor) body["cursor"] = *s->state.cursor;
    SendJson(res, 200, body);
  });

  srv.Get("/api/sessions/:id/sentences/:sid",
          [with_session](const httplib::Request& req, httplib::Response& res) {
            auto s = with_session(req, res);
            if (!s) return;
            const std::string& sid = req.path_params.at("sid");
            for (const TaggedSentence& t : s->state.sentences) {
              if (t.id == sid) {
                SendJson(res, 200, SentenceToJson(t));
                return;
              }
            }
            SendError(res, 404, "NotFound", "unknown sentence " + sid);
          });

  srv.Get("/api/sessions/:id/state",
          [with_session](const httplib::Request& req, httplib::Response& res) {
            auto s = with_session(req, res);
            if (!s) return;
            res.set_content(SaveState(s->state), "application/json");
          });

  srv.Put("/api/sessions/:id/state", [this, with_session](
                                         const httplib::Request& req,
                                         httplib::Response& res) {
    auto s = with_session(req, res);
    if (!s) return;
    AnnotationState st;
    try {
      st = LoadState(req.body);
    } catch (const Error& e) {
      SendError(res, e.code() == ErrorCode::kUnknownSentence ? 409 : 400, e);
      return;
    }
    std::map<std::string, const TaggedSentence*> known;
    for (const TaggedSentence& t : s->state.sentences) known[t.id] = &t;
    for (const TaggedSentence& t : st.sentences) {
      auto it = known.find(t.id);
      if (it == known.end()) {
        SendError(res, 409, "UnknownSentence",
                  "sentence " + t.id + " does not belong to this session");
        return;
      }
      if (it->second->raw != t.raw) {
        SendError(res, 409, "SentenceMismatch",
                  "sentence " + t.id + " differs from the uploaded text");
        return;
      }
    }
    try {
      if (!store_.ReplaceState(s->id, std::move(st))) {
        SendError(res, 404, "NotFound", "unknown session");
        return;
      }
    } catch (const std::exception& e) {
      SendError(res, 500, "PersistFailed", e.what());
      return;
    }
    res.status = 204;
  });

  srv.Get("/api/sessions/:id/export",
          [with_session](const httplib::Request& req, httplib::Response& res) {
            auto s = with_session(req, res);
            if (!s) return;
            std::string format =
                req.has_param("format") ? req.get_param_value("format") : "tsv";
            if (format == "tsv") {
              res.set_content(ExportTsv(s->state),
                              "text/tab-separated-values; charset=utf-8");
            } else if (format == "json") {
              res.set_content(SaveState(s->state), "application/json");
            } else {
              SendError(res, 400, "UnknownFormat",
                        "format must be tsv or json");
              return;
            }
            res.set_header("Content-Disposition",
                           "attachment; filename=\"" + s->id + "." + format +
                               "\"");
          });

  srv.Get("/api/sessions/:id/lint", [this, with_session](
                                        const httplib::Request& req,
                                        httplib::Response& res) {
    auto s = with_session(req, res);
    if (!s) return;
    SendJson(res, 200,
             DiagnosticsToJson(LintGold(s->state.Gold(), cfg_.normalization)));
  });
}

}  // namespace factbench
