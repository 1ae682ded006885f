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

#ifndef WIKIDISPUTE_INGEST_H_
#define WIKIDISPUTE_INGEST_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wikidispute/timeutil.h"

namespace wikidispute {

// One stored revision of an article.
struct RawRevision {
  int64_t rev_id = 0;
  int64_t parent_id = 0;  // 0 for the first revision or a deleted parent
  Timestamp timestamp{};
  std::string user;
  bool is_ip_user = false;
  std::string comment;
  std::string wikitext;
  std::string text_hash;  // hex SHA-1 of wikitext
  // Text was deleted or suppressed on the wiki; wikitext is empty and the
  // revision is skipped by diffing.
  bool suppressed = false;

  bool operator==(const RawRevision&) const = default;
};

enum class HistorySource { kApi, kDump, kFixture };

const char* HistorySourceName(HistorySource source);
std::optional<HistorySource> ParseHistorySource(std::string_view name);

struct ArticleHistory {
  std::string article_title;
  std::string language_code;
  std::vector<RawRevision> revisions;  // oldest first
  Timestamp fetched_at{};
  HistorySource source = HistorySource::kFixture;
  // False when fetching stopped early; such a history must never be
  // treated as the full record.
  bool complete = true;
};

class IngestError : public std::runtime_error {
 public:
  enum class Kind {
    kArticleNotFound,
    kRateLimited,
    kTruncatedHistory,
    kMalformedXml,
    kPageNotInDump,
    kNetwork,
    kStore,
  };

  IngestError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// True when the user string is an IPv4 or IPv6 address literal.
bool IsIpAddress(std::string_view user);

// Lowercase hex SHA-1 of the text.
std::string TextHash(std::string_view text);

// Fills text_hash and is_ip_user from wikitext and user.
void FinalizeRevision(RawRevision& rev);

// Normalizes an article title the way the wiki does: underscores become
// spaces, surrounding whitespace is dropped and the first letter is
// uppercased. Used to match titles from URLs, dumps and the command line.
std::string NormalizeTitle(std::string_view title);

// Checks ordering and parent invariants; returns a description of the first
// violation, or an empty string.
std::string ValidateHistory(const ArticleHistory& history);

//
// Offline XML export.
//

using RevisionSink = std::function<void(RawRevision&&)>;

struct DumpParseStats {
  size_t revisions = 0;
  // Largest number of bytes of character data held at once. Bounded by the
  // largest revision, not by the size of the history.
  size_t peak_buffered_bytes = 0;
  std::string language_code;  // from <mediawiki xml:lang>
};

// Streams the revisions of one page of a wiki XML export into sink, oldest
// first as they appear in the file. Throws IngestError (kMalformedXml,
// kPageNotInDump).
DumpParseStats StreamDump(std::istream& in, std::string_view article_title,
                          const RevisionSink& sink);

// Collects StreamDump's output into an ArticleHistory. An empty
// language_code takes the dump's xml:lang.
ArticleHistory ParseDump(std::istream& in, std::string_view article_title,
                         std::string_view language_code = {});

//
// Live MediaWiki API.
//

struct ApiOptions {
  // "{lang}" is replaced with the language code.
  std::string base_url = "https://{lang}.wikipedia.org/w/api.php";
  std::string user_agent = "wikidispute/0.1";
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::seconds timeout{60};
};

// Called once per API page with the revisions it added; the caller persists
// them so an interrupted fetch can resume.
using PageSink = std::function<void(std::span<const RawRevision>)>;

// Fetches every revision newer than resume_from (or all of them). Throws
// IngestError kArticleNotFound; kRateLimited or kNetwork when nothing at all
// could be fetched. A fetch that fails after some pages returns what it has
// with complete=false.
ArticleHistory FetchHistory(std::string_view article_title,
                            std::string_view language_code,
                            std::optional<int64_t> resume_from,
                            const ApiOptions& options,
                            const PageSink& on_page = {});

// Expands "{lang}" in a base URL.
std::string ResolveApiUrl(std::string_view base_url,
                          std::string_view language_code);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_INGEST_H_
