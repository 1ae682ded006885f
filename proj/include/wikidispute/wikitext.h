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

#ifndef WIKIDISPUTE_WIKITEXT_H_
#define WIKIDISPUTE_WIKITEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wikidispute {

// Half-open byte range [begin, end).
struct CharSpan {
  size_t begin = 0;
  size_t end = 0;

  bool Overlaps(CharSpan other) const {
    return begin < other.end && other.begin < end;
  }
  bool operator==(const CharSpan&) const = default;
};

// An internal [[target]] or [[target|display]] link.
struct WikiLink {
  std::string canonical_target;
  std::string display_text;
  CharSpan raw_span;  // the whole [[...]] markup, relative to the sentence

  bool operator==(const WikiLink&) const = default;
};

struct Sentence {
  std::string text;
  std::vector<WikiLink> links;
  int token_count = 0;
};

struct Section {
  std::string key;      // normalized heading, "abstract" for the lead
  int ordinal = 0;      // disambiguates repeated keys
  int level = 0;        // 0 for the lead, otherwise the number of '='
  std::string heading;  // heading text as written, empty for the lead
  std::string body;     // raw text between this heading and the next
  std::vector<Sentence> sentences;
};

inline constexpr std::string_view kLeadSectionKey = "abstract";

// Template and comment interiors in masked text.
inline constexpr char kMaskChar = '\x1f';

// Returns a same-length copy of text in which everything strictly inside
// {{...}} (nesting aware) and <!--...--> is replaced by kMaskChar, so byte
// offsets in the masked copy match the original. Unterminated openers are
// left alone.
std::string MaskTemplates(std::string_view text);

// Wiki title normalization: underscores become spaces, whitespace runs
// collapse, the ends are trimmed and the first letter is uppercased.
// Idempotent.
std::string CanonicalizeTarget(std::string_view target);

// True for File:, Image:, Category: and other non-article namespaces, and
// for interlanguage/interwiki prefixes such as "de:" or "wikt:".
bool IsNamespacedTarget(std::string_view raw_target);

// Internal links in one sentence, in order of appearance. Links inside
// templates and namespaced links (including anything nested in them) are
// skipped; an unterminated "[[" yields no link and is logged.
std::vector<WikiLink> ExtractLinks(std::string_view sentence_text);

// Splits a section body into sentences. Every non-whitespace byte of body
// ends up in exactly one sentence; whitespace between sentences is dropped.
std::vector<Sentence> SplitSentences(std::string_view body);

// Splits a revision into sections (with sentences). Content before the
// first "== heading ==" is the "abstract" section, which always exists.
std::vector<Section> SplitSections(std::string_view wikitext);

// Normalized heading key: markup stripped, lowercased, whitespace
// collapsed and trimmed.
std::string HeadingKey(std::string_view heading_text);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_WIKITEXT_H_
