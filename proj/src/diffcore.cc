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

#include "wikidispute/diffcore.h"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <thread>

namespace wikidispute {
namespace {

constexpr size_t kMaxSentenceTableCells = size_t{16} << 20;

std::vector<std::string_view> WordSet(std::string_view text) {
  std::vector<std::string_view> words;
  size_t i = 0;
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    while (i < text.size() && space(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && !space(text[j])) ++j;
    if (j > i) words.push_back(text.substr(i, j - i));
    i = j;
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

struct Overlap {
  int64_t intersection = 0;
  int64_t union_size = 0;
};

Overlap WordOverlap(const std::vector<std::string_view>& a,
                    const std::vector<std::string_view>& b) {
  Overlap o;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++o.intersection;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  o.union_size = static_cast<int64_t>(a.size() + b.size()) - o.intersection;
  return o;
}

std::vector<std::string> UnionTargets(const std::vector<WikiLink>& a,
                                      const std::vector<WikiLink>& b) {
  std::set<std::string> targets;
  for (const WikiLink& l : a) targets.insert(l.canonical_target);
  for (const WikiLink& l : b) targets.insert(l.canonical_target);
  return {targets.begin(), targets.end()};
}

// Exact LCS over sentence texts; fills the match arrays with partner
// indices (-1 when unmatched).
void AlignExact(const std::vector<Sentence>& a, const std::vector<Sentence>& b,
                std::vector<int>& a_match, std::vector<int>& b_match) {
  size_t n = a.size(), m = b.size();
  a_match.assign(n, -1);
  b_match.assign(m, -1);
  size_t prefix = 0;
  while (prefix < n && prefix < m && a[prefix].text == b[prefix].text) {
    a_match[prefix] = b_match[prefix] = static_cast<int>(prefix);
    ++prefix;
  }
  size_t suffix = 0;
  while (suffix < n - prefix && suffix < m - prefix &&
         a[n - 1 - suffix].text == b[m - 1 - suffix].text) {
    a_match[n - 1 - suffix] = static_cast<int>(m - 1 - suffix);
    b_match[m - 1 - suffix] = static_cast<int>(n - 1 - suffix);
    ++suffix;
  }
  size_t rn = n - prefix - suffix, rm = m - prefix - suffix;
  if (rn == 0 || rm == 0 || (rn + 1) * (rm + 1) > kMaxSentenceTableCells) {
    return;
  }
  const size_t width = rm + 1;
  std::vector<uint32_t> lcs((rn + 1) * width, 0);
  for (size_t i = rn; i-- > 0;) {
    for (size_t j = rm; j-- > 0;) {
      lcs[i * width + j] =
          a[prefix + i].text == b[prefix + j].text
              ? lcs[(i + 1) * width + j + 1] + 1
              : std::max(lcs[(i + 1) * width + j], lcs[i * width + j + 1]);
    }
  }
  size_t i = 0, j = 0;
  while (i < rn && j < rm) {
    if (a[prefix + i].text == b[prefix + j].text) {
      a_match[prefix + i] = static_cast<int>(prefix + j);
      b_match[prefix + j] = static_cast<int>(prefix + i);
      ++i;
      ++j;
    } else if (lcs[(i + 1) * width + j] >= lcs[i * width + j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
}

SentencePair ModifiedPair(const SectionId& section, const Sentence& old_s,
                          const Sentence& new_s, int old_index, int new_index) {
  SentencePair pair;
  pair.section = section;
  pair.kind = PairKind::kModified;
  pair.old_text = old_s.text;
  pair.new_text = new_s.text;
  pair.old_links = old_s.links;
  pair.new_links = new_s.links;
  pair.links_union = UnionTargets(old_s.links, new_s.links);
  pair.w = static_cast<int>(pair.links_union.size());
  pair.token_diff = DiffTokens(old_s.text, new_s.text);
  pair.has_deletion =
      std::any_of(pair.token_diff.begin(), pair.token_diff.end(),
                  [](const DiffRun& r) { return r.op == DiffOp::kDelete; });
  pair.old_index = old_index;
  pair.new_index = new_index;
  return pair;
}

}  // namespace

const char* PairKindName(PairKind kind) {
  switch (kind) {
    case PairKind::kModified:
      return "modified";
    case PairKind::kDeleted:
      return "deleted";
    case PairKind::kInserted:
      return "inserted";
  }
  return "modified";
}

const char* EditTypeName(EditType type) {
  switch (type) {
    case EditType::kDelete:
      return "delete";
    case EditType::kInsert:
      return "insert";
    case EditType::kElementChange:
      return "element_change";
    case EditType::kSentenceChange:
      return "sentence_change";
    case EditType::kSectionChange:
      return "section_change";
  }
  return "sentence_change";
}

char EditTypeCode(EditType type) {
  switch (type) {
    case EditType::kDelete:
      return 'd';
    case EditType::kInsert:
      return 'i';
    case EditType::kElementChange:
      return 'e';
    case EditType::kSentenceChange:
      return 's';
    case EditType::kSectionChange:
      return 'S';
  }
  return 's';
}

SectionPairing PairSections(const std::vector<Section>& old_sections,
                            const std::vector<Section>& new_sections) {
  SectionPairing pairing;
  std::map<SectionId, const Section*> new_by_id;
  for (const Section& s : new_sections) new_by_id[{s.key, s.ordinal}] = &s;
  std::set<const Section*> used;
  for (const Section& s : old_sections) {
    auto it = new_by_id.find({s.key, s.ordinal});
    if (it == new_by_id.end()) {
      pairing.removed.push_back(&s);
      continue;
    }
    used.insert(it->second);
    if (s.body != it->second->body)
      pairing.matched.emplace_back(&s, it->second);
  }
  for (const Section& s : new_sections) {
    if (!used.contains(&s)) pairing.added.push_back(&s);
  }
  return pairing;
}

double WordJaccard(std::string_view a, std::string_view b) {
  Overlap o = WordOverlap(WordSet(a), WordSet(b));
  if (o.union_size == 0) return 1.0;
  return static_cast<double>(o.intersection) /
         static_cast<double>(o.union_size);
}

SentencePair OneSidedPair(const SectionId& section, const Sentence& sentence,
                          PairKind kind, int index) {
  SentencePair pair;
  pair.section = section;
  pair.kind = kind;
  if (kind == PairKind::kDeleted) {
    pair.old_text = sentence.text;
    pair.old_links = sentence.links;
    pair.old_index = index;
    pair.has_deletion = true;
  } else {
    pair.new_text = sentence.text;
    pair.new_links = sentence.links;
    pair.new_index = index;
    pair.has_deletion = false;
  }
  pair.links_union = UnionTargets(sentence.links, {});
  pair.w = static_cast<int>(pair.links_union.size());
  return pair;
}

std::vector<SentencePair> PairSentences(const Section& old_section,
                                        const Section& new_section,
                                        double jaccard_threshold) {
  const auto& a = old_section.sentences;
  const auto& b = new_section.sentences;
  const SectionId id{new_section.key, new_section.ordinal};
  std::vector<int> a_match, b_match;
  AlignExact(a, b, a_match, b_match);

  // Gap index: number of exact anchors before a position, so a candidate
  // pair "keeps relative order" when both sides sit in the same gap.
  std::vector<int> a_gap(a.size()), b_gap(b.size());
  for (size_t i = 0, count = 0; i < a.size(); ++i) {
    a_gap[i] = static_cast<int>(count);
    if (a_match[i] >= 0) ++count;
  }
  for (size_t j = 0, count = 0; j < b.size(); ++j) {
    b_gap[j] = static_cast<int>(count);
    if (b_match[j] >= 0) ++count;
  }

  // Moved sentences: identical text left unaligned on both sides.
  for (size_t i = 0; i < a.size(); ++i) {
    if (a_match[i] >= 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b_match[j] < 0 && a[i].text == b[j].text) {
        a_match[i] = static_cast<int>(j);
        b_match[j] = static_cast<int>(i);
        break;
      }
    }
  }

  std::vector<int> old_left, new_left;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a_match[i] < 0) old_left.push_back(static_cast<int>(i));
  }
  for (size_t j = 0; j < b.size(); ++j) {
    if (b_match[j] < 0) new_left.push_back(static_cast<int>(j));
  }

  struct Candidate {
    int old_index;
    int new_index;
    Overlap overlap;
    bool same_gap;
  };
  std::vector<Candidate> candidates;
  if (!old_left.empty() && !new_left.empty()) {
    std::vector<std::vector<std::string_view>> old_words, new_words;
    for (int i : old_left) old_words.push_back(WordSet(a[i].text));
    for (int j : new_left) new_words.push_back(WordSet(b[j].text));
    for (size_t x = 0; x < old_left.size(); ++x) {
      for (size_t y = 0; y < new_left.size(); ++y) {
        Overlap o = WordOverlap(old_words[x], new_words[y]);
        double jac = o.union_size == 0 ? 1.0
                                       : static_cast<double>(o.intersection) /
                                             static_cast<double>(o.union_size);
        if (jac + 1e-12 < jaccard_threshold) continue;
        candidates.push_back({old_left[x], new_left[y], o,
                              a_gap[old_left[x]] == b_gap[new_left[y]]});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& l, const Candidate& r) {
              int64_t lhs = l.overlap.intersection * r.overlap.union_size;
              int64_t rhs = r.overlap.intersection * l.overlap.union_size;
              if (lhs != rhs) return lhs > rhs;
              if (l.same_gap != r.same_gap) return l.same_gap;
              if (l.old_index != r.old_index) return l.old_index < r.old_index;
              return l.new_index < r.new_index;
            });

  std::vector<SentencePair> pairs;
  std::vector<bool> old_used(a.size(), false), new_used(b.size(), false);
  for (const Candidate& c : candidates) {
    if (old_used[c.old_index] || new_used[c.new_index]) continue;
    old_used[c.old_index] = new_used[c.new_index] = true;
    pairs.push_back(ModifiedPair(id, a[c.old_index], b[c.new_index],
                                 c.old_index, c.new_index));
  }
  for (int i : old_left) {
    if (!old_used[i]) {
      pairs.push_back(OneSidedPair(id, a[i], PairKind::kDeleted, i));
    }
  }
  for (int j : new_left) {
    if (!new_used[j]) {
      pairs.push_back(OneSidedPair(id, b[j], PairKind::kInserted, j));
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const SentencePair& l, const SentencePair& r) {
              int ln = l.new_index >= 0 ? l.new_index : INT_MAX;
              int rn = r.new_index >= 0 ? r.new_index : INT_MAX;
              if (ln != rn) return ln < rn;
              return l.old_index < r.old_index;
            });
  return pairs;
}

bool DiffTouchesLink(const SentencePair& pair, const std::string& link) {
  std::vector<CharSpan> deleted, inserted;
  size_t old_pos = 0, new_pos = 0;
  for (const DiffRun& run : pair.token_diff) {
    size_t len = run.text.size();
    switch (run.op) {
      case DiffOp::kEqual:
        old_pos += len;
        new_pos += len;
        break;
      case DiffOp::kDelete:
        deleted.push_back({old_pos, old_pos + len});
        old_pos += len;
        break;
      case DiffOp::kInsert:
        inserted.push_back({new_pos, new_pos + len});
        new_pos += len;
        break;
    }
  }
  auto touched = [&](const std::vector<WikiLink>& links,
                     const std::vector<CharSpan>& changes) {
    for (const WikiLink& l : links) {
      if (l.canonical_target != link) continue;
      for (CharSpan change : changes) {
        if (change.Overlaps(l.raw_span)) return true;
      }
    }
    return false;
  };
  return touched(pair.old_links, deleted) || touched(pair.new_links, inserted);
}

std::vector<EditEvent> ClassifyEvents(const RawRevision& prev,
                                      const RawRevision& cur,
                                      const SectionPairing& pairing,
                                      const std::vector<SentencePair>& pairs,
                                      const RevertMap& revert_map) {
  std::vector<EditEvent> events;
  std::optional<int64_t> reverted_by;
  if (auto it = revert_map.find(cur.rev_id); it != revert_map.end()) {
    reverted_by = it->second;
  }
  bool is_revert =
      std::any_of(revert_map.begin(), revert_map.end(),
                  [&](const auto& e) { return e.second == cur.rev_id; });

  auto emit = [&](const std::shared_ptr<const SentencePair>& pair,
                  const std::string& link, EditType type) {
    EditEvent event;
    event.rev_id = cur.rev_id;
    event.prev_rev_id = prev.rev_id;
    event.timestamp = cur.timestamp;
    event.user = cur.user;
    event.comment = cur.comment;
    event.section = pair->section;
    event.sentence_pair = pair;
    event.link = link;
    event.type = type;
    event.scored = IsScoredType(type);
    event.reverted_by = reverted_by;
    event.is_revert = is_revert;
    events.push_back(std::move(event));
  };

  auto whole_section = [&](const Section* section, PairKind kind) {
    for (size_t i = 0; i < section->sentences.size(); ++i) {
      if (section->sentences[i].links.empty()) continue;
      auto pair = std::make_shared<const SentencePair>(
          OneSidedPair({section->key, section->ordinal}, section->sentences[i],
                       kind, static_cast<int>(i)));
      for (const std::string& link : pair->links_union) {
        emit(pair, link, EditType::kSectionChange);
      }
    }
  };

  for (const Section* section : pairing.removed) {
    whole_section(section, PairKind::kDeleted);
  }
  for (const SentencePair& p : pairs) {
    if (p.w == 0) continue;
    auto pair = std::make_shared<const SentencePair>(p);
    for (const std::string& link : pair->links_union) {
      EditType type;
      switch (pair->kind) {
        case PairKind::kDeleted:
          type = EditType::kDelete;
          break;
        case PairKind::kInserted:
          type = EditType::kInsert;
          break;
        case PairKind::kModified:
        default:
          if (!pair->has_deletion) {
            type = EditType::kInsert;
          } else if (DiffTouchesLink(*pair, link)) {
            type = EditType::kElementChange;
          } else {
            type = EditType::kSentenceChange;
          }
          break;
      }
      emit(pair, link, type);
    }
  }
  for (const Section* section : pairing.added) {
    whole_section(section, PairKind::kInserted);
  }
  return events;
}

std::vector<EditEvent> DiffRevisionPair(
    const RawRevision& prev, const std::vector<Section>& prev_sections,
    const RawRevision& cur, const std::vector<Section>& cur_sections,
    const RevertMap& revert_map, const DiffOptions& options) {
  if (prev.text_hash == cur.text_hash && prev.wikitext == cur.wikitext)
    return {};
  SectionPairing pairing = PairSections(prev_sections, cur_sections);
  std::vector<SentencePair> pairs;
  for (const auto& [old_section, new_section] : pairing.matched) {
    auto section_pairs =
        PairSentences(*old_section, *new_section, options.jaccard_threshold);
    std::move(section_pairs.begin(), section_pairs.end(),
              std::back_inserter(pairs));
  }
  return ClassifyEvents(prev, cur, pairing, pairs, revert_map);
}

std::vector<EditEvent> ExtractEvents(const CleanChain& chain,
                                     const DiffOptions& options) {
  std::vector<size_t> live;
  for (size_t i = 0; i < chain.revisions.size(); ++i) {
    if (!chain.revisions[i].suppressed) live.push_back(i);
  }
  if (live.size() < 2) return {};
  const size_t num_pairs = live.size() - 1;

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, num_pairs));

  std::vector<std::vector<EditEvent>> per_pair(num_pairs);
  auto work = [&](size_t begin, size_t end) {
    const RawRevision* prev = &chain.revisions[live[begin]];
    std::vector<Section> prev_sections = SplitSections(prev->wikitext);
    for (size_t p = begin; p < end; ++p) {
      const RawRevision& cur = chain.revisions[live[p + 1]];
      std::vector<Section> cur_sections = SplitSections(cur.wikitext);
      per_pair[p] = DiffRevisionPair(*prev, prev_sections, cur, cur_sections,
                                     chain.revert_map, options);
      prev = &cur;
      prev_sections = std::move(cur_sections);
    }
  };

  if (threads <= 1) {
    work(0, num_pairs);
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (num_pairs + threads - 1) / threads;
    for (size_t begin = 0; begin < num_pairs; begin += chunk) {
      pool.emplace_back(work, begin, std::min(num_pairs, begin + chunk));
    }
    for (std::thread& t : pool) t.join();
  }

  std::vector<EditEvent> events;
  for (auto& batch : per_pair) {
    std::move(batch.begin(), batch.end(), std::back_inserter(events));
  }
  return events;
}

}  // namespace wikidispute
