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

#include <expat.h>

#include <istream>
#include <memory>
#include <set>
#include <string>

#include "wikidispute/ingest.h"

namespace wikidispute {
namespace {

constexpr size_t kReadChunk = 1 << 16;

// Element-path state machine over <mediawiki><page><revision>. Character
// data is only buffered for the fields we keep, so memory stays at the size
// of one revision.
class DumpHandler {
 public:
  DumpHandler(std::string_view title, const RevisionSink& sink)
      : wanted_title_(NormalizeTitle(title)), sink_(sink) {}

  void Start(const XML_Char* name, const XML_Char** attrs) {
    std::string_view tag(name);
    ++depth_;
    if (depth_ == 1 && tag == "mediawiki") {
      saw_root_ = true;
      for (const XML_Char** a = attrs; a && a[0]; a += 2) {
        if (std::string_view(a[0]) == "xml:lang") stats_.language_code = a[1];
      }
    } else if (tag == "page" && depth_ == 2) {
      in_page_ = true;
      page_matches_ = false;
      page_title_.clear();
    } else if (in_page_ && depth_ == 3 && tag == "title") {
      Capture(&page_title_);
    } else if (in_page_ && depth_ == 3 && tag == "revision") {
      in_revision_ = true;
      rev_ = RawRevision{};
      field_.clear();
    } else if (in_revision_ && depth_ == 4) {
      if (tag == "id" || tag == "parentid" || tag == "timestamp" ||
          tag == "comment") {
        Capture(&field_);
      } else if (tag == "text") {
        for (const XML_Char** a = attrs; a && a[0]; a += 2) {
          std::string_view key(a[0]);
          if (key == "deleted") rev_.suppressed = true;
        }
        if (page_matches_) Capture(&rev_.wikitext);
      } else if (tag == "contributor") {
        in_contributor_ = true;
      }
    } else if (in_contributor_ && depth_ == 5 &&
               (tag == "username" || tag == "ip")) {
      Capture(&rev_.user);
    }
  }

  void End(const XML_Char* name) {
    std::string_view tag(name);
    if (in_revision_ && depth_ == 4) {
      if (tag == "id") {
        rev_.rev_id = ParseInt(field_);
      } else if (tag == "parentid") {
        rev_.parent_id = ParseInt(field_);
      } else if (tag == "timestamp") {
        auto ts = ParseTimestamp(field_);
        if (!ts) Fail("bad timestamp '" + field_ + "'");
        rev_.timestamp = *ts;
      } else if (tag == "comment") {
        rev_.comment = field_;
      } else if (tag == "contributor") {
        in_contributor_ = false;
      }
      field_.clear();
    } else if (in_page_ && depth_ == 3 && tag == "title") {
      page_matches_ = NormalizeTitle(page_title_) == wanted_title_;
      found_page_ = found_page_ || page_matches_;
    } else if (in_page_ && depth_ == 3 && tag == "revision") {
      in_revision_ = false;
      if (page_matches_) Emit();
    } else if (depth_ == 2 && tag == "page") {
      in_page_ = false;
    }
    capture_ = nullptr;
    --depth_;
  }

  void Text(const XML_Char* text, int len) {
    if (!capture_) return;
    capture_->append(text, static_cast<size_t>(len));
    buffered_ += static_cast<size_t>(len);
    if (buffered_ > stats_.peak_buffered_bytes) {
      stats_.peak_buffered_bytes = buffered_;
    }
  }

  bool found_page() const { return found_page_; }
  bool saw_root() const { return saw_root_; }
  const DumpParseStats& stats() const { return stats_; }
  const std::string& error() const { return error_; }

 private:
  void Capture(std::string* target) { capture_ = target; }

  void Fail(const std::string& message) {
    if (error_.empty()) error_ = message;
  }

  int64_t ParseInt(const std::string& text) {
    try {
      size_t used = 0;
      int64_t value = std::stoll(text, &used);
      if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    Fail("bad integer '" + text + "'");
    return 0;
  }

  void Emit() {
    if (rev_.suppressed) rev_.wikitext.clear();
    // Parents that are not part of the exported history were deleted.
    if (rev_.parent_id != 0 && !seen_ids_.contains(rev_.parent_id)) {
      rev_.parent_id = 0;
    }
    seen_ids_.insert(rev_.rev_id);
    FinalizeRevision(rev_);
    ++stats_.revisions;
    sink_(std::move(rev_));
    rev_ = RawRevision{};
    buffered_ = 0;
  }

  std::string wanted_title_;
  const RevisionSink& sink_;
  DumpParseStats stats_;
  std::string error_;
  std::set<int64_t> seen_ids_;

  int depth_ = 0;
  bool saw_root_ = false;
  bool in_page_ = false;
  bool page_matches_ = false;
  bool found_page_ = false;
  bool in_revision_ = false;
  bool in_contributor_ = false;
  std::string page_title_;
  std::string field_;
  RawRevision rev_;
  std::string* capture_ = nullptr;
  size_t buffered_ = 0;
};

extern "C" {
static void OnStart(void* data, const XML_Char* name, const XML_Char** attrs) {
  static_cast<DumpHandler*>(data)->Start(name, attrs);
}
static void OnEnd(void* data, const XML_Char* name) {
  static_cast<DumpHandler*>(data)->End(name);
}
static void OnText(void* data, const XML_Char* text, int len) {
  static_cast<DumpHandler*>(data)->Text(text, len);
}
}

}  // namespace

DumpParseStats StreamDump(std::istream& in, std::string_view article_title,
                          const RevisionSink& sink) {
  DumpHandler handler(article_title, sink);
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw std::bad_alloc();
  XML_SetUserData(parser.get(), &handler);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);

  auto fail = [&](const std::string& message) {
    throw IngestError(
        IngestError::Kind::kMalformedXml,
        "malformed XML at line " +
            std::to_string(XML_GetCurrentLineNumber(parser.get())) + ": " +
            message);
  };

  std::string chunk(kReadChunk, '\0');
  bool done = false;
  while (!done) {
    in.read(chunk.data(), static_cast<std::streamsize>(chunk.size()));
    std::streamsize got = in.gcount();
    done = got < static_cast<std::streamsize>(chunk.size());
    if (XML_Parse(parser.get(), chunk.data(), static_cast<int>(got),
                  done ? 1 : 0) == XML_STATUS_ERROR) {
      fail(XML_ErrorString(XML_GetErrorCode(parser.get())));
    }
    if (!handler.error().empty()) fail(handler.error());
  }
  if (!handler.saw_root()) fail("missing <mediawiki> root element");
  if (!handler.found_page()) {
    throw IngestError(
        IngestError::Kind::kPageNotInDump,
        "page '" + std::string(article_title) + "' not found in dump");
  }
  return handler.stats();
}

ArticleHistory ParseDump(std::istream& in, std::string_view article_title,
                         std::string_view language_code) {
  ArticleHistory history;
  history.article_title = NormalizeTitle(article_title);
  history.source = HistorySource::kDump;
  DumpParseStats stats = StreamDump(in, article_title, [&](RawRevision&& rev) {
    history.revisions.push_back(std::move(rev));
  });
  history.language_code =
      language_code.empty() ? stats.language_code : std::string(language_code);
  // A dump has no fetch time; the newest revision stands in for it.
  if (!history.revisions.empty()) {
    history.fetched_at = history.revisions.back().timestamp;
  }
  return history;
}

}  // namespace wikidispute
