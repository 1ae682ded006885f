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

#ifndef WIKIDISPUTE_REVISION_STORE_H_
#define WIKIDISPUTE_REVISION_STORE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "wikidispute/ingest.h"

namespace wikidispute {

// Append-only per-article revision cache. Each article lives in
// <dir>/<lang>__<title-slug>.revs, a sequence of gzip members holding
// newline-delimited JSON records (see docs/formats.md). Every Append writes
// one batch header followed by its revisions, so a crash can lose at most
// the batch in flight.
//
// One writer per article at a time (guarded by an advisory lock file); any
// number of readers.
class RevisionStore {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit RevisionStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  // File-name-safe form of a title: spaces become underscores, anything
  // outside [A-Za-z0-9._-] is percent-encoded.
  static std::string Slug(std::string_view title);

  std::filesystem::path PathFor(std::string_view language_code,
                                std::string_view title) const;

  bool Contains(std::string_view language_code, std::string_view title) const;

  void Append(const ArticleHistory& meta, std::span<const RawRevision> revs);

  // Loads the cached history. Duplicate rev_ids keep their first record.
  // Throws IngestError(kStore) when the file is missing or corrupt.
  ArticleHistory Load(std::string_view language_code,
                      std::string_view title) const;

  std::optional<int64_t> LastRevId(std::string_view language_code,
                                   std::string_view title) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace wikidispute

#endif  // WIKIDISPUTE_REVISION_STORE_H_
