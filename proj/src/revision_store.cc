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

#include "wikidispute/revision_store.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>
#include <zlib.h>

#include <json.hpp>
#include <memory>
#include <set>

namespace wikidispute {
namespace {

using nlohmann::ordered_json;

IngestError StoreError(const std::string& what) {
  return IngestError(IngestError::Kind::kStore, what);
}

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path)
      : fd_(::open(path.c_str(), O_CREAT | O_RDWR, 0644)) {
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) {
      throw StoreError("cannot lock " + path.string());
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

struct GzCloser {
  void operator()(gzFile f) const { gzclose(f); }
};
using GzFile = std::unique_ptr<gzFile_s, GzCloser>;

ordered_json RevisionRecord(const RawRevision& rev) {
  ordered_json j;
  j["kind"] = "revision";
  j["rev_id"] = rev.rev_id;
  j["parent_id"] = rev.parent_id;
  j["timestamp"] = FormatTimestamp(rev.timestamp);
  j["user"] = rev.user;
  j["is_ip_user"] = rev.is_ip_user;
  j["comment"] = rev.comment;
  j["suppressed"] = rev.suppressed;
  j["text_hash"] = rev.text_hash;
  j["wikitext"] = rev.wikitext;
  return j;
}

RawRevision RevisionFromRecord(const ordered_json& j) {
  RawRevision rev;
  rev.rev_id = j.at("rev_id").get<int64_t>();
  rev.parent_id = j.at("parent_id").get<int64_t>();
  auto ts = ParseTimestamp(j.at("timestamp").get<std::string>());
  if (!ts) throw StoreError("bad timestamp in record");
  rev.timestamp = *ts;
  rev.user = j.at("user").get<std::string>();
  rev.is_ip_user = j.at("is_ip_user").get<bool>();
  rev.comment = j.at("comment").get<std::string>();
  rev.suppressed = j.at("suppressed").get<bool>();
  rev.text_hash = j.at("text_hash").get<std::string>();
  rev.wikitext = j.at("wikitext").get<std::string>();
  return rev;
}

}  // namespace

RevisionStore::RevisionStore(std::filesystem::path dir)
    : dir_(std::move(dir)) {}

std::string RevisionStore::Slug(std::string_view title) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : NormalizeTitle(title)) {
    if (c == ' ') {
      out.push_back('_');
    } else if (std::isalnum(c) || c == '.' || c == '-' || c == '_') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xf]);
    }
  }
  return out;
}

std::filesystem::path RevisionStore::PathFor(std::string_view language_code,
                                             std::string_view title) const {
  return dir_ / (std::string(language_code) + "__" + Slug(title) + ".revs");
}

bool RevisionStore::Contains(std::string_view language_code,
                             std::string_view title) const {
  return std::filesystem::exists(PathFor(language_code, title));
}

void RevisionStore::Append(const ArticleHistory& meta,
                           std::span<const RawRevision> revs) {
  std::filesystem::create_directories(dir_);
  auto path = PathFor(meta.language_code, meta.article_title);
  auto lock_path = path;
  lock_path += ".lock";
  FileLock lock(lock_path);

  std::string payload;
  ordered_json batch;
  batch["kind"] = "batch";
  batch["schema_version"] = kSchemaVersion;
  batch["article_title"] = meta.article_title;
  batch["language_code"] = meta.language_code;
  batch["source"] = HistorySourceName(meta.source);
  batch["fetched_at"] = FormatTimestamp(meta.fetched_at);
  batch["complete"] = meta.complete;
  batch["count"] = revs.size();
  payload += batch.dump() + "\n";
  for (const RawRevision& rev : revs) {
    payload += RevisionRecord(rev).dump() + "\n";
  }

  GzFile out(gzopen(path.c_str(), "ab"));
  if (!out) throw StoreError("cannot open " + path.string());
  if (gzwrite(out.get(), payload.data(),
              static_cast<unsigned>(payload.size())) !=
      static_cast<int>(payload.size())) {
    throw StoreError("write failed on " + path.string());
  }
  if (gzclose(out.release()) != Z_OK) {
    throw StoreError("close failed on " + path.string());
  }
}

ArticleHistory RevisionStore::Load(std::string_view language_code,
                                   std::string_view title) const {
  auto path = PathFor(language_code, title);
  GzFile in(gzopen(path.c_str(), "rb"));
  if (!in) throw StoreError("no cached history at " + path.string());

  ArticleHistory history;
  history.article_title = NormalizeTitle(title);
  history.language_code = std::string(language_code);
  std::set<int64_t> seen;
  bool saw_batch = false;

  std::string data;
  char buf[1 << 16];
  int got;
  while ((got = gzread(in.get(), buf, sizeof(buf))) > 0) {
    data.append(buf, static_cast<size_t>(got));
  }
  if (got < 0) throw StoreError("corrupt store file " + path.string());

  size_t line_start = 0;
  while (line_start < data.size()) {
    size_t line_end = data.find('\n', line_start);
    if (line_end == std::string::npos) {
      // Torn final record from an interrupted write.
      break;
    }
    std::string_view line(data.data() + line_start, line_end - line_start);
    line_start = line_end + 1;
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "batch") {
        saw_batch = true;
        history.article_title = j.at("article_title").get<std::string>();
        history.language_code = j.at("language_code").get<std::string>();
        history.source = ParseHistorySource(j.at("source").get<std::string>())
                             .value_or(HistorySource::kFixture);
        auto ts = ParseTimestamp(j.at("fetched_at").get<std::string>());
        if (ts) history.fetched_at = *ts;
        history.complete = j.at("complete").get<bool>();
      } else if (kind == "revision") {
        RawRevision rev = RevisionFromRecord(j);
        if (seen.insert(rev.rev_id).second) {
          history.revisions.push_back(std::move(rev));
        }
      }
    } catch (const ordered_json::exception& e) {
      throw StoreError("corrupt record in " + path.string() + ": " + e.what());
    }
  }
  if (!saw_batch) throw StoreError("empty store file " + path.string());

  std::set<int64_t> known;
  for (RawRevision& rev : history.revisions) {
    if (rev.parent_id != 0 && !known.contains(rev.parent_id)) rev.parent_id = 0;
    known.insert(rev.rev_id);
  }
  return history;
}

std::optional<int64_t> RevisionStore::LastRevId(std::string_view language_code,
                                                std::string_view title) const {
  if (!Contains(language_code, title)) return std::nullopt;
  ArticleHistory history = Load(language_code, title);
  if (history.revisions.empty()) return std::nullopt;
  return history.revisions.back().rev_id;
}

}  // namespace wikidispute
