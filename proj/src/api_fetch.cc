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

#include <httplib.h>

#include <json.hpp>
#include <set>
#include <thread>

#include "wikidispute/ingest.h"

namespace wikidispute {
namespace {

using nlohmann::json;

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

SplitUrl SplitBaseUrl(const std::string& url) {
  size_t scheme_end = url.find("://");
  size_t path_start =
      url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

enum class Attempt { kOk, kRetry, kFatal };

struct PageResult {
  Attempt status = Attempt::kFatal;
  json body;
  std::string error;
};

PageResult RequestPage(httplib::Client& client, const std::string& path,
                       const httplib::Params& params,
                       const httplib::Headers& headers) {
  PageResult result;
  auto res = client.Get(path, params, headers);
  if (!res) {
    result.status = Attempt::kRetry;
    result.error = "request failed: " + httplib::to_string(res.error());
    return result;
  }
  if (res->status == 429 || res->status == 503) {
    result.status = Attempt::kRetry;
    result.error = "HTTP " + std::to_string(res->status);
    return result;
  }
  if (res->status != 200) {
    result.error = "HTTP " + std::to_string(res->status);
    return result;
  }
  try {
    result.body = json::parse(res->body);
  } catch (const json::parse_error& e) {
    result.error = std::string("bad JSON from API: ") + e.what();
    return result;
  }
  if (result.body.contains("error")) {
    std::string code = result.body["error"].value("code", "");
    result.error = "API error " + code;
    result.status = (code == "ratelimited" || code == "maxlag")
                        ? Attempt::kRetry
                        : Attempt::kFatal;
    return result;
  }
  result.status = Attempt::kOk;
  return result;
}

RawRevision RevisionFromApi(const json& r) {
  RawRevision rev;
  rev.rev_id = r.value("revid", int64_t{0});
  rev.parent_id = r.value("parentid", int64_t{0});
  auto ts = ParseTimestamp(r.value("timestamp", ""));
  if (!ts) {
    throw IngestError(
        IngestError::Kind::kNetwork,
        "revision " + std::to_string(rev.rev_id) + " has a bad timestamp");
  }
  rev.timestamp = *ts;
  rev.user = r.value("user", "");
  rev.comment = r.value("comment", "");
  const json* content = nullptr;
  if (r.contains("slots") && r["slots"].contains("main")) {
    content = &r["slots"]["main"];
  }
  if (r.value("texthidden", false) || r.value("sha1hidden", false) ||
      !content || content->value("texthidden", false) ||
      !content->contains("content")) {
    rev.suppressed = true;
  } else {
    rev.wikitext = (*content)["content"].get<std::string>();
  }
  FinalizeRevision(rev);
  return rev;
}

}  // namespace

std::string ResolveApiUrl(std::string_view base_url,
                          std::string_view language_code) {
  std::string url(base_url);
  const std::string placeholder = "{lang}";
  for (size_t pos = url.find(placeholder); pos != std::string::npos;
       pos = url.find(placeholder, pos)) {
    url.replace(pos, placeholder.size(), language_code);
    pos += language_code.size();
  }
  return url;
}

ArticleHistory FetchHistory(std::string_view article_title,
                            std::string_view language_code,
                            std::optional<int64_t> resume_from,
                            const ApiOptions& options,
                            const PageSink& on_page) {
  ArticleHistory history;
  history.article_title = NormalizeTitle(article_title);
  history.language_code = std::string(language_code);
  history.source = HistorySource::kApi;
  history.fetched_at = NowOrSourceDateEpoch();

  SplitUrl url = SplitBaseUrl(ResolveApiUrl(options.base_url, language_code));
  httplib::Client client(url.origin);
  client.set_follow_location(true);
  client.set_read_timeout(options.timeout);
  client.set_connection_timeout(options.timeout);
  httplib::Headers headers = {{"User-Agent", options.user_agent}};

  httplib::Params base = {
      {"action", "query"},
      {"format", "json"},
      {"formatversion", "2"},
      {"prop", "revisions"},
      {"titles", history.article_title},
      {"rvprop", "ids|timestamp|user|comment|content|sha1"},
      {"rvslots", "main"},
      {"rvlimit", "max"},
      {"rvdir", "newer"},
  };
  if (resume_from) base.emplace("rvstartid", std::to_string(*resume_from));

  std::set<int64_t> known;
  if (resume_from) known.insert(*resume_from);
  std::optional<json> continuation;
  while (true) {
    httplib::Params params = base;
    if (continuation) {
      for (auto& [key, value] : continuation->items()) {
        params.emplace(
            key, value.is_string() ? value.get<std::string>() : value.dump());
      }
    }

    PageResult page;
    auto backoff = options.initial_backoff;
    for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
      page = RequestPage(client, url.path, params, headers);
      if (page.status != Attempt::kRetry) break;
      if (attempt < options.max_attempts) {
        std::this_thread::sleep_for(backoff);
        backoff *= 2;
      }
    }
    if (page.status != Attempt::kOk) {
      if (!history.revisions.empty()) {
        history.complete = false;
        return history;
      }
      throw IngestError(page.status == Attempt::kRetry
                            ? IngestError::Kind::kRateLimited
                            : IngestError::Kind::kNetwork,
                        page.error);
    }

    const json& pages = page.body["query"]["pages"];
    if (!pages.is_array() || pages.empty() ||
        pages[0].value("missing", false) || pages[0].value("invalid", false)) {
      throw IngestError(IngestError::Kind::kArticleNotFound,
                        "article '" + history.article_title +
                            "' not found on " + std::string(language_code) +
                            " wiki");
    }

    size_t first_new = history.revisions.size();
    if (pages[0].contains("revisions")) {
      for (const json& r : pages[0]["revisions"]) {
        RawRevision rev = RevisionFromApi(r);
        if (resume_from && rev.rev_id <= *resume_from) continue;
        // Parents outside the fetched range were deleted (or, when resuming,
        // live in the cache, which repairs them on load).
        if (!resume_from && rev.parent_id != 0 &&
            !known.contains(rev.parent_id)) {
          rev.parent_id = 0;
        }
        known.insert(rev.rev_id);
        history.revisions.push_back(std::move(rev));
      }
    }
    if (on_page) {
      on_page(
          std::span<const RawRevision>(history.revisions).subspan(first_new));
    }

    if (!page.body.contains("continue")) break;
    continuation = page.body["continue"];
  }
  return history;
}

}  // namespace wikidispute
