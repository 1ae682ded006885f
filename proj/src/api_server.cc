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

#include "wikidispute/api_server.h"

#include <httplib.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>
#include <vector>

#include "wikidispute/ingest.h"
#include "wikidispute/wikitext.h"

namespace wikidispute {
namespace {

using nlohmann::ordered_json;

std::string Dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

ApiResponse Error(int status, const std::string& code,
                  const std::string& message) {
  ordered_json body;
  body["error"] = code;
  body["message"] = message;
  return {status, Dump(body)};
}

std::vector<std::string> SplitPath(std::string_view path) {
  std::vector<std::string> segments;
  size_t start = 0;
  while (start <= path.size()) {
    size_t slash = path.find('/', start);
    if (slash == std::string_view::npos) slash = path.size();
    if (slash > start) {
      segments.push_back(PercentDecode(path.substr(start, slash - start)));
    }
    start = slash + 1;
  }
  return segments;
}

std::optional<std::string> QueryValue(const QueryParams& query,
                                      const std::string& key) {
  auto it = query.find(key);
  if (it == query.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::string PercentDecode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%' && i + 2 < text.size() && hex(text[i + 1]) >= 0 &&
        hex(text[i + 2]) >= 0) {
      out.push_back(
          static_cast<char>(hex(text[i + 1]) * 16 + hex(text[i + 2])));
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

void ReportCatalog::Add(ordered_json report) {
  if (!report.is_object() || !report.contains("article_title") ||
      !report.contains("language_code") || !report.contains("links")) {
    throw std::invalid_argument("not an article report");
  }
  std::string lang = report["language_code"].get<std::string>();
  std::string title =
      NormalizeTitle(report["article_title"].get<std::string>());
  reports_[{lang, title}] = std::move(report);
}

ReportCatalog ReportCatalog::LoadDirectory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.ends_with(".report.json")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  ReportCatalog catalog;
  for (const auto& path : files) {
    std::ifstream in(path);
    try {
      catalog.Add(ordered_json::parse(in));
    } catch (const std::exception& e) {
      throw std::runtime_error("cannot load " + path.string() + ": " +
                               e.what());
    }
  }
  return catalog;
}

const ordered_json* ReportCatalog::Find(const std::string& lang,
                                        const std::string& title) const {
  auto it = reports_.find({lang, NormalizeTitle(title)});
  return it == reports_.end() ? nullptr : &it->second;
}

ApiResponse ReportCatalog::Handle(std::string_view raw_path,
                                  const QueryParams& query) const {
  std::vector<std::string> seg = SplitPath(raw_path);
  if (seg.size() == 1 && seg[0] == "healthz") {
    ordered_json body;
    body["status"] = "ok";
    body["articles"] = reports_.size();
    return {200, Dump(body)};
  }
  if (seg.size() < 2 || seg[0] != "api" || seg[1] != "articles") {
    return Error(404, "not_found", "no such endpoint");
  }
  if (seg.size() == 2) return Articles();
  if (seg.size() != 4 && !(seg.size() == 6 && seg[4] == "links")) {
    return Error(404, "not_found", "no such endpoint");
  }
  const ordered_json* report = Find(seg[2], seg[3]);
  if (!report) {
    return Error(404, "article_not_found",
                 "no report for " + seg[2] + ":" + NormalizeTitle(seg[3]));
  }
  if (seg.size() == 4) return Report(*report, query);
  return LinkDetail(*report, seg[5]);
}

ApiResponse ReportCatalog::Articles() const {
  ordered_json list = ordered_json::array();
  for (const auto& [key, report] : reports_) {
    ordered_json entry;
    entry["language_code"] = key.first;
    entry["article_title"] = report["article_title"];
    entry["analyzed_revisions"] = report.value("analyzed_revisions", 0);
    entry["n_links"] = report["links"].size();
    entry["generated_at"] = report.value("generated_at", "");
    list.push_back(std::move(entry));
  }
  ordered_json body;
  body["schema_version"] = kApiSchemaVersion;
  body["articles"] = std::move(list);
  return {200, Dump(body)};
}

ApiResponse ReportCatalog::Report(const ordered_json& report,
                                  const QueryParams& query) const {
  size_t top = report["links"].size();
  if (auto value = QueryValue(query, "top")) {
    try {
      size_t used = 0;
      long long n = std::stoll(*value, &used);
      if (used != value->size() || n < 0) throw std::invalid_argument("top");
      top = std::min(top, static_cast<size_t>(n));
    } catch (const std::exception&) {
      return Error(400, "bad_request", "top must be a non-negative integer");
    }
  }
  std::string bucket = QueryValue(query, "bucket").value_or("month");
  if (bucket != "month" && bucket != "week") {
    return Error(400, "bad_request", "bucket must be month or week");
  }

  ordered_json body;
  for (const auto& [key, value] : report.items()) {
    if (key == "links") {
      ordered_json links = ordered_json::array();
      for (size_t i = 0; i < top; ++i) links.push_back(value[i]);
      body["links"] = std::move(links);
    } else if (key == "series") {
      std::set<std::string> kept;
      for (size_t i = 0; i < top; ++i) {
        kept.insert(report["links"][i]["link"].get<std::string>());
      }
      ordered_json series = ordered_json::array();
      if (value.contains(bucket)) {
        for (const ordered_json& s : value[bucket]) {
          if (kept.contains(s["link"].get<std::string>())) series.push_back(s);
        }
      }
      body["bucket"] = bucket;
      body["series"] = std::move(series);
    } else {
      body[key] = value;
    }
  }
  return {200, Dump(body)};
}

ApiResponse ReportCatalog::LinkDetail(const ordered_json& report,
                                      const std::string& link) const {
  std::string canonical = CanonicalizeTarget(link);
  for (const ordered_json& entry : report["links"]) {
    if (entry["link"].get<std::string>() != canonical) continue;
    ordered_json body;
    body["schema_version"] = kApiSchemaVersion;
    body["article_title"] = report["article_title"];
    body["language_code"] = report["language_code"];
    for (const auto& [key, value] : entry.items()) {
      if (key != "events") body[key] = value;
    }
    ordered_json rows = ordered_json::array();
    const ordered_json& events = entry["events"];
    for (auto it = events.rbegin(); it != events.rend(); ++it)
      rows.push_back(*it);
    body["rows"] = std::move(rows);
    return {200, Dump(body)};
  }
  return Error(404, "link_not_found",
               "no controversial link '" + canonical + "'");
}

struct ApiServer::Impl {
  std::shared_ptr<const ReportCatalog> catalog;
  httplib::Server server;
};

ApiServer::ApiServer(std::shared_ptr<const ReportCatalog> catalog)
    : impl_(std::make_unique<Impl>()) {
  impl_->catalog = std::move(catalog);
  impl_->server.Get(
      ".*", [this](const httplib::Request& req, httplib::Response& res) {
        std::string_view target = req.target;
        target = target.substr(0, target.find('?'));
        QueryParams query(req.params.begin(), req.params.end());
        ApiResponse response = impl_->catalog->Handle(target, query);
        res.status = response.status;
        res.set_content(response.body, "application/json; charset=utf-8");
      });
}

ApiServer::~ApiServer() { Stop(); }

int ApiServer::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::Run() { return impl_->server.listen_after_bind(); }

void ApiServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace wikidispute
