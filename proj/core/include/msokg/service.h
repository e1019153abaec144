// Copyright 2026 The msokg Authors.
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

#ifndef MSOKG_SERVICE_H_
#define MSOKG_SERVICE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "msokg/dataset.h"
#include "msokg/json_io.h"

namespace msokg {

// One immutable published unit. Requests hold a shared_ptr to it for their
// whole duration.
struct ServiceState {
  Schema schema;
  MaterializedGraph graph;
  std::vector<std::string> dataset_paths;
  std::chrono::system_clock::time_point started_at;
  std::uint64_t generation = 0;
};

struct HttpRequest {
  std::string method;
  // Raw request target: percent-encoded path plus optional "?query".
  std::string target;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  Json body;
};

inline constexpr std::size_t kDefaultPageSize = 50;
inline constexpr std::size_t kMaxPageSize = 500;

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string cors_origin = "*";
};

class KgService {
 public:
  KgService(LoadedDataset initial, std::vector<std::string> dataset_paths,
            std::optional<std::string> schema_path = {});
  ~KgService();

  KgService(const KgService&) = delete;
  KgService& operator=(const KgService&) = delete;

  // Loads `paths` with the service's schema path and publishes the result.
  // Throws LoadError and keeps the current state on failure. Reloads are
  // serialized; readers are never blocked by one.
  InferenceStats ReloadDataset(const std::vector<std::string>& paths);

  std::shared_ptr<const ServiceState> state() const;

  // Routes one request against the current state. Never throws; failures
  // become ApiError bodies.
  HttpResponse Handle(const HttpRequest& request) const;

  // Runs the HTTP server until Stop(). `on_ready` receives the bound port.
  // Returns false if binding failed. Writes one JSON line per request to
  // `log`.
  bool Serve(const ServeOptions& options, std::ostream& log,
             std::function<void(int)> on_ready = {});
  void Stop();

 private:
  struct Server;

  void Publish(LoadedDataset loaded, std::vector<std::string> paths);

  std::optional<std::string> schema_path_;
  std::chrono::system_clock::time_point started_at_;

  mutable std::mutex state_mu_;
  std::shared_ptr<const ServiceState> state_;
  std::mutex reload_mu_;

  std::mutex server_mu_;
  std::unique_ptr<Server> server_;
};

// Percent-decodes `s`; '+' is kept. Returns nullopt on a malformed escape.
std::optional<std::string> PercentDecode(std::string_view s);
std::string PercentEncode(std::string_view s);

}  // namespace msokg

#endif  // MSOKG_SERVICE_H_
