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

#ifndef FACTBENCH_SERVICE_H_
#define FACTBENCH_SERVICE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "factbench/io_formats.h"
#include "factbench/tagger.h"

namespace httplib {
class Server;
}

namespace factbench {

struct Session {
  std::string id;
  AnnotationState state;
  bool dirty = false;  // not yet on disk
  std::string created;
  std::string updated;
};

// Sessions persisted as one JSON file each under a data directory. A write
// lands on disk (temp file, fsync, rename) before it becomes visible, so a
// restarted store recovers exactly the last acknowledged state.
class SessionStore {
 public:
  // Loads every readable session file in `data_dir`, creating the
  // directory if needed.
  explicit SessionStore(std::filesystem::path data_dir);

  std::string Create(AnnotationState state);

  // Immutable snapshot; nullptr for unknown ids.
  std::shared_ptr<const Session> Get(const std::string& id) const;

  // Returns false for unknown ids. Writers to one session are serialized.
  bool ReplaceState(const std::string& id, AnnotationState state);

  // Rewrites any session whose last write did not reach disk.
  void Flush();

  std::vector<std::string> Ids() const;
  const std::filesystem::path& data_dir() const { return data_dir_; }

  std::filesystem::path PathFor(const std::string& id) const;

 private:
  struct Entry {
    std::mutex write_mu;
    mutable std::mutex ptr_mu;
    std::shared_ptr<const Session> current;

    std::shared_ptr<const Session> Load() const;
    void Store(std::shared_ptr<const Session> s);
  };

  void Persist(const Session& s) const;
  Entry* Find(const std::string& id) const;

  std::filesystem::path data_dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::unique_ptr<Entry>> sessions_;
};

// Encodes/decodes the on-disk session file.
std::string EncodeSessionFile(const Session& s);
Session DecodeSessionFile(std::string_view bytes);

struct ServiceConfig {
  std::filesystem::path data_dir = "factbench-data";
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  TaggerConfig tagger = DefaultTaggerConfig();
  NormalizationConfig normalization;
  std::filesystem::path static_dir;  // web UI assets; empty disables
};

// HTTP front end over SessionStore:
//   POST /api/sessions                         upload sentences
//   GET  /api/sessions/{id}                    session summary
//   GET  /api/sessions/{id}/sentences/{sid}    tagged sentence
//   GET  /api/sessions/{id}/state              saved state
//   PUT  /api/sessions/{id}/state              replace state
//   GET  /api/sessions/{id}/export?format=tsv|json
//   GET  /api/sessions/{id}/lint
class AnnotationServer {
 public:
  explicit AnnotationServer(ServiceConfig cfg);
  ~AnnotationServer();

  AnnotationServer(const AnnotationServer&) = delete;
  AnnotationServer& operator=(const AnnotationServer&) = delete;

  // Binds the listening socket; false when the address is unavailable.
  bool Bind();
  // Serves until Stop(). Requires a successful Bind().
  void Run();
  void Stop();
  // Bound port, valid after Bind().
  int port() const { return bound_port_; }

  SessionStore& store() { return store_; }

 private:
  void Routes();

  ServiceConfig cfg_;
  SessionStore store_;
  std::unique_ptr<httplib::Server> http_;
  int bound_port_ = -1;
};

}  // namespace factbench

#endif  // FACTBENCH_SERVICE_H_
