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

#include "wikidispute/wikitext.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "utf8.h"
#include "wikidispute/log.h"

namespace wikidispute {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::string CollapseWhitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

void MaskRange(std::string& masked, size_t begin, size_t end) {
  std::fill(masked.begin() + static_cast<std::ptrdiff_t>(begin),
            masked.begin() + static_cast<std::ptrdiff_t>(end), kMaskChar);
}

// Outermost balanced [[...]] spans of masked text. An opener that never
// closes is reported through *unterminated and skipped.
std::vector<CharSpan> MatchedLinkSpans(std::string_view masked,
                                       std::vector<size_t>* unterminated) {
  std::vector<CharSpan> spans;
  size_t i = 0;
  while ((i = masked.find("[[", i)) != std::string_view::npos) {
    int depth = 0;
    size_t close = std::string_view::npos;
    for (size_t j = i; j + 1 < masked.size();) {
      if (masked[j] == '[' && masked[j + 1] == '[') {
        ++depth;
        j += 2;
      } else if (masked[j] == ']' && masked[j + 1] == ']') {
        if (--depth == 0) {
          close = j;
          break;
        }
        j += 2;
      } else {
        ++j;
      }
    }
    if (close == std::string_view::npos) {
      if (unterminated) unterminated->push_back(i);
      i += 2;
      continue;
    }
    spans.push_back({i, close + 2});
    i = close + 2;
  }
  return spans;
}

const std::set<std::string, std::less<>>& NamespacePrefixes() {
  static const std::set<std::string, std::less<>> kPrefixes = {
      // Namespaces.
      "media", "file", "image", "category", "template", "wikipedia", "wp",
      "project", "help", "portal", "user", "special", "mediawiki", "module",
      "draft", "book", "timedtext", "talk", "gadget",
      // Interwiki.
      "w", "wikt", "wiktionary", "commons", "c", "meta", "m", "wikisource", "s",
      "wikiquote", "q", "wikinews", "n", "wikibooks", "b", "wikiversity", "v",
      "wikivoyage", "voy", "wikidata", "d", "species", "wikispecies", "mw",
      "simple", "phab", "foundation", "wmf", "wikimedia"};
  return kPrefixes;
}

bool LooksLikeLanguageCode(std::string_view prefix) {
  // ll, lll, and subtags such as zh-min-nan or be-tarask.
  size_t first = prefix.find('-');
  std::string_view head = prefix.substr(0, first);
  if (head.size() < 2 || head.size() > 3) return false;
  for (char c : head) {
    if (c < 'a' || c > 'z') return false;
  }
  if (first == std::string_view::npos) return true;
  std::string_view rest = prefix.substr(first + 1);
  if (rest.empty()) return false;
  for (char c : rest) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')) {
      return false;
    }
  }
  return rest.back() != '-';
}

const std::set<std::string, std::less<>>& Abbreviations() {
  static const std::set<std::string, std::less<>> kAbbrev = {
      "e.g.",  "i.e.", "Dr.",   "Mr.",     "Mrs.", "Ms.",  "Prof.", "St.",
      "Jr.",   "Sr.",  "U.S.",  "U.K.",    "U.N.", "vs.",  "cf.",   "No.",
      "no.",   "ca.",  "c.",    "approx.", "Inc.", "Ltd.", "Co.",   "Corp.",
      "Fig.",  "fig.", "al.",   "Gen.",    "Gov.", "Sen.", "Rep.",  "Mt.",
      "Jan.",  "Feb.", "Mar.",  "Apr.",    "Jun.", "Jul.", "Aug.",  "Sep.",
      "Sept.", "Oct.", "Nov.",  "Dec.",    "pp.",  "p.",   "ed.",   "eds.",
      "vol.",  "Vol.", "Ph.D.", "B.C.",    "A.D."};
  return kAbbrev;
}

bool IsProtectedAbbreviation(std::string_view text, size_t start,
                             size_t period) {
  size_t word_start = period;
  while (word_start > start && !IsSpace(text[word_start - 1])) --word_start;
  std::string_view word = text.substr(word_start, period + 1 - word_start);
  while (!word.empty() &&
         (word.front() == '(' || word.front() == '"' || word.front() == '\'')) {
    word.remove_prefix(1);
  }
  if (Abbreviations().contains(word)) return true;
  // Initials such as "J. Smith".
  return word.size() == 2 && word[0] >= 'A' && word[0] <= 'Z';
}

bool StartsSentence(std::string_view text, size_t pos) {
  if (pos >= text.size()) return false;
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c >= '0' && c <= '9') return true;
  if (text.substr(pos, 2) == "[[") return true;
  size_t len = 0;
  return utf8::IsUpper(utf8::Decode(text, pos, &len));
}

// Skips <ref>...</ref>, <ref .../> and masked templates that directly
// follow a terminator ("...warming.<ref>x</ref> Next").
size_t SkipTrailingMarkup(std::string_view masked, size_t pos, size_t end) {
  while (pos < end) {
    std::string_view rest = masked.substr(pos, end - pos);
    if (rest.starts_with("<ref")) {
      size_t gt = rest.find('>');
      if (gt == std::string_view::npos) break;
      if (gt > 0 && rest[gt - 1] == '/') {
        pos += gt + 1;
        continue;
      }
      size_t close = rest.find("</ref>", gt);
      if (close == std::string_view::npos) break;
      pos += close + 6;
    } else if (rest.starts_with("{{")) {
      size_t close = rest.find("}}", 2);
      if (close == std::string_view::npos) break;
      pos += close + 2;
    } else {
      break;
    }
  }
  return pos;
}

int CountTokens(std::string_view text) {
  int count = 0;
  bool in_token = false;
  for (char c : text) {
    if (IsSpace(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

void EmitSentence(std::string_view body, size_t begin, size_t end,
                  std::vector<Sentence>& out) {
  std::string_view text = TrimView(body.substr(begin, end - begin));
  if (text.empty()) return;
  Sentence sentence;
  sentence.text = std::string(text);
  sentence.links = ExtractLinks(sentence.text);
  sentence.token_count = CountTokens(sentence.text);
  out.push_back(std::move(sentence));
}

void SplitParagraph(std::string_view body, std::string_view masked,
                    const std::vector<bool>& in_link, size_t begin, size_t end,
                    std::vector<Sentence>& out) {
  size_t start = begin;
  for (size_t i = begin; i < end; ++i) {
    char c = masked[i];
    if ((c != '.' && c != '!' && c != '?' && c != ';') || in_link[i]) continue;
    size_t after = SkipTrailingMarkup(masked, i + 1, end);
    if (after >= end || !IsSpace(masked[after])) continue;
    size_t next = after;
    while (next < end && IsSpace(masked[next])) ++next;
    if (!StartsSentence(masked, next)) continue;
    if (c == '.' && IsProtectedAbbreviation(masked, start, i)) continue;
    EmitSentence(body, start, after, out);
    start = next;
    i = next - 1;
  }
  EmitSentence(body, start, end, out);
}

bool IsTemplateOnlyLine(std::string_view masked_line) {
  std::string_view rest = TrimView(masked_line);
  while (!rest.empty()) {
    if (!rest.starts_with("{{")) return false;
    size_t close = rest.find("}}", 2);
    if (close == std::string_view::npos) return false;
    rest = TrimView(rest.substr(close + 2));
  }
  return true;
}

bool IsLineMarkupStart(std::string_view masked_line) {
  if (masked_line.empty()) return false;
  char c = masked_line.front();
  return c == '*' || c == '#' || c == ':' || c == ';' || c == '|' || c == '!' ||
         masked_line.starts_with("{|");
}

}  // namespace

std::string MaskTemplates(std::string_view text) {
  std::string masked(text);
  // Comments first: they may contain braces.
  for (size_t i = masked.find("<!--"); i != std::string::npos;
       i = masked.find("<!--", i)) {
    size_t close = masked.find("-->", i + 4);
    if (close == std::string::npos) break;
    MaskRange(masked, i + 4, close);
    i = close + 3;
  }
  std::vector<size_t> open;
  std::vector<CharSpan> matched;
  for (size_t i = 0; i + 1 < masked.size();) {
    if (masked[i] == '{' && masked[i + 1] == '{') {
      open.push_back(i);
      i += 2;
    } else if (masked[i] == '}' && masked[i + 1] == '}' && !open.empty()) {
      matched.push_back({open.back() + 2, i});
      open.pop_back();
      i += 2;
    } else {
      ++i;
    }
  }
  for (CharSpan span : matched) MaskRange(masked, span.begin, span.end);
  return masked;
}

std::string CanonicalizeTarget(std::string_view target) {
  std::string spaced(target);
  std::replace(spaced.begin(), spaced.end(), '_', ' ');
  return utf8::UpperFirst(CollapseWhitespace(spaced));
}

bool IsNamespacedTarget(std::string_view raw_target) {
  std::string_view s = TrimView(raw_target);
  if (!s.empty() && s.front() == ':') s = TrimView(s.substr(1));
  size_t colon = s.find(':');
  if (colon == std::string_view::npos) return false;
  std::string_view raw_prefix = TrimView(s.substr(0, colon));
  if (LooksLikeLanguageCode(raw_prefix)) return true;
  std::string prefix = CollapseWhitespace(raw_prefix);
  std::replace(prefix.begin(), prefix.end(), '_', ' ');
  prefix = utf8::Lower(CollapseWhitespace(prefix));
  if (NamespacePrefixes().contains(prefix)) return true;
  return prefix.ends_with(" talk");
}

std::vector<WikiLink> ExtractLinks(std::string_view sentence_text) {
  std::vector<WikiLink> links;
  if (sentence_text.find("[[") == std::string_view::npos) return links;
  std::string masked = MaskTemplates(sentence_text);
  std::vector<size_t> unterminated;
  for (CharSpan span : MatchedLinkSpans(masked, &unterminated)) {
    std::string_view inner =
        sentence_text.substr(span.begin + 2, span.end - span.begin - 4);
    std::string_view masked_inner(masked.data() + span.begin + 2, inner.size());
    size_t pipe = masked_inner.find('|');
    std::string_view raw_target = inner.substr(0, pipe);
    std::string_view masked_target = masked_inner.substr(0, pipe);
    if (IsNamespacedTarget(raw_target)) continue;
    if (masked_target.find_first_of("{}[]<>\x1f\n") != std::string_view::npos) {
      continue;
    }
    std::string_view target = TrimView(raw_target);
    if (!target.empty() && target.front() == ':') target.remove_prefix(1);
    target = target.substr(0, target.find('#'));
    std::string canonical = CanonicalizeTarget(target);
    if (canonical.empty()) continue;
    WikiLink link;
    link.canonical_target = std::move(canonical);
    link.display_text = std::string(TrimView(
        pipe == std::string_view::npos ? raw_target : inner.substr(pipe + 1)));
    link.raw_span = span;
    links.push_back(std::move(link));
  }
  for (size_t pos : unterminated) {
    Log(LogLevel::kDebug,
        "unterminated [[ at offset " + std::to_string(pos) +
            " in: " + std::string(sentence_text.substr(0, 80)));
  }
  return links;
}

std::vector<Sentence> SplitSentences(std::string_view body) {
  std::vector<Sentence> out;
  std::string masked = MaskTemplates(body);
  std::vector<bool> in_link(masked.size(), false);
  for (CharSpan span : MatchedLinkSpans(masked, nullptr)) {
    for (size_t i = span.begin; i < span.end; ++i) in_link[i] = true;
  }

  size_t para_begin = std::string::npos;
  auto flush = [&](size_t end) {
    if (para_begin != std::string::npos) {
      SplitParagraph(body, masked, in_link, para_begin, end, out);
      para_begin = std::string::npos;
    }
  };

  size_t line_start = 0;
  while (line_start < masked.size()) {
    size_t line_end = masked.find('\n', line_start);
    if (line_end == std::string::npos) line_end = masked.size();
    std::string_view line(masked.data() + line_start, line_end - line_start);
    if (TrimView(line).empty()) {
      flush(line_start);
    } else if (IsLineMarkupStart(line) ||
               (line.starts_with("{{") && IsTemplateOnlyLine(line))) {
      flush(line_start);
      EmitSentence(body, line_start, line_end, out);
    } else {
      if (line.starts_with("{{")) flush(line_start);
      if (para_begin == std::string::npos) para_begin = line_start;
    }
    line_start = line_end + 1;
  }
  flush(masked.size());
  return out;
}

std::string HeadingKey(std::string_view heading_text) {
  std::string masked = MaskTemplates(heading_text);
  std::string plain;
  plain.reserve(heading_text.size());
  std::vector<CharSpan> links = MatchedLinkSpans(masked, nullptr);
  size_t next_link = 0;
  for (size_t i = 0; i < heading_text.size();) {
    if (next_link < links.size() && links[next_link].begin == i) {
      CharSpan span = links[next_link++];
      std::string_view inner =
          heading_text.substr(span.begin + 2, span.end - span.begin - 4);
      size_t pipe = inner.rfind('|');
      plain.append(pipe == std::string_view::npos ? inner
                                                  : inner.substr(pipe + 1));
      i = span.end;
    } else if (masked.compare(i, 2, "{{") == 0) {
      size_t close = masked.find("}}", i + 2);
      i = close == std::string::npos ? i + 2 : close + 2;
    } else if (heading_text[i] == '<') {
      size_t gt = heading_text.find('>', i);
      i = gt == std::string_view::npos ? heading_text.size() : gt + 1;
    } else if (heading_text.compare(i, 2, "''") == 0) {
      i += 2;
      while (i < heading_text.size() && heading_text[i] == '\'') ++i;
    } else {
      plain.push_back(heading_text[i++]);
    }
  }
  return utf8::Lower(CollapseWhitespace(plain));
}

std::vector<Section> SplitSections(std::string_view wikitext) {
  std::string masked = MaskTemplates(wikitext);
  std::vector<Section> sections;
  std::map<std::string, int> seen;

  Section lead;
  lead.key = std::string(kLeadSectionKey);
  seen[lead.key] = 1;
  sections.push_back(std::move(lead));
  size_t body_start = 0;

  auto close_body = [&](size_t end) {
    sections.back().body =
        std::string(wikitext.substr(body_start, end - body_start));
  };

  size_t line_start = 0;
  while (line_start < masked.size()) {
    size_t line_end = masked.find('\n', line_start);
    if (line_end == std::string::npos) line_end = masked.size();
    std::string_view line(masked.data() + line_start, line_end - line_start);
    while (!line.empty() &&
           (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
      line.remove_suffix(1);
    }
    size_t left = 0;
    while (left < line.size() && line[left] == '=') ++left;
    size_t right = 0;
    while (right < line.size() && line[line.size() - 1 - right] == '=') ++right;
    int level = static_cast<int>(std::min({left, right, size_t{6}}));
    if (level >= 2 && line.size() > 2 * static_cast<size_t>(level)) {
      std::string_view heading = TrimView(
          wikitext.substr(line_start + level, line.size() - 2 * level));
      close_body(line_start);
      Section section;
      section.heading = std::string(heading);
      section.key = HeadingKey(heading);
      section.ordinal = seen[section.key]++;
      section.level = level;
      sections.push_back(std::move(section));
      body_start = std::min(line_end + 1, wikitext.size());
    }
    line_start = line_end + 1;
  }
  close_body(wikitext.size());
  for (Section& section : sections) {
    section.sentences = SplitSentences(section.body);
  }
  return sections;
}

}  // namespace wikidispute
