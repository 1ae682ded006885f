// Copyright 2026 The wikidispute Authors.
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

#ifndef WIKIDISPUTE_API_SERVER_H_
#define WIKIDISPUTE_API_SERVER_H_

#include <filesystem>
#include <json.hpp>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

namespace wikidispute {

struct ApiResponse {
  int status = 200;
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

// Immutable set of serialized ArticleReports, keyed by language and
// normalized title, and the read-only JSON API over them. Responses are a
// pure function of the loaded reports.
class ReportCatalog {
 public:
  static constexpr int kApiSchemaVersion = 1;

  // Throws std::invalid_argument for documents without the report fields.
  void Add(nlohmann::ordered_json report);

  // Loads every *.report.json in dir (sorted by file name).
  static ReportCatalog LoadDirectory(const std::filesystem::path& dir);

  size_t size() const { return reports_.size(); }

  // raw_path is the undecoded request path (no query string); each path
  // segment is percent-decoded separately so titles may contain "%2F".
  ApiResponse Handle(std::string_view raw_path, const QueryParams& query) const;

 private:
  ApiResponse Articles() const;
  ApiResponse Report(const nlohmann::ordered_json& report,
                     const QueryParams& query) const;
  ApiResponse LinkDetail(const nlohmann::ordered_json& report,
                         const std::string& link) const;
  const nlohmann::ordered_json* Find(const std::string& lang,
                                     const std::string& title) const;

  std::map<std::pair<std::string, std::string>, nlohmann::ordered_json>
      reports_;
};

std::string PercentDecode(std::string_view text);

// HTTP front end. Routes every GET to ReportCatalog::Handle.
class ApiServer {
 public:
  explicit ApiServer(std::shared_ptr<const ReportCatalog> catalog);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Returns the bound port, or -1. port 0 picks a free one.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  bool Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wikidispute

#endif  // WIKIDISPUTE_API_SERVER_H_
