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

#ifndef WIKIDISPUTE_DIFFCORE_H_
#define WIKIDISPUTE_DIFFCORE_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wikidispute/chain.h"
#include "wikidispute/token_diff.h"
#include "wikidispute/wikitext.h"

namespace wikidispute {

struct SectionId {
  std::string key;
  int ordinal = 0;

  auto operator<=>(const SectionId&) const = default;
};

enum class PairKind { kModified, kDeleted, kInserted };

const char* PairKindName(PairKind kind);

// One aligned old/new sentence across a revision pair.
struct SentencePair {
  SectionId section;
  std::optional<std::string> old_text;
  std::optional<std::string> new_text;
  PairKind kind = PairKind::kModified;
  std::vector<std::string> links_union;  // sorted canonical targets
  int w = 0;                             // links_union.size()
  std::vector<DiffRun> token_diff;       // modified pairs only
  bool has_deletion = false;

  // Link occurrences with spans, for telling element from sentence changes.
  std::vector<WikiLink> old_links;
  std::vector<WikiLink> new_links;
  int old_index = -1;  // sentence position within the section, -1 if absent
  int new_index = -1;
};

enum class EditType {
  kDelete,
  kInsert,
  kElementChange,
  kSentenceChange,
  kSectionChange,
};

inline constexpr EditType kAllEditTypes[] = {
    EditType::kDelete, EditType::kInsert, EditType::kElementChange,
    EditType::kSentenceChange, EditType::kSectionChange};

const char* EditTypeName(EditType type);  // "delete", "element_change", ...
char EditTypeCode(EditType type);         // 'd', 'i', 'e', 's', 'S'

// Deletions, element changes and sentence changes express disagreement;
// inserts and whole-section changes do not.
constexpr bool IsScoredType(EditType type) {
  return type == EditType::kDelete || type == EditType::kElementChange ||
         type == EditType::kSentenceChange;
}

// One classified change touching one wiki link.
struct EditEvent {
  int64_t rev_id = 0;
  int64_t prev_rev_id = 0;
  Timestamp timestamp{};
  std::string user;
  std::string comment;
  SectionId section;
  std::shared_ptr<const SentencePair> sentence_pair;
  std::string link;
  EditType type = EditType::kSentenceChange;
  bool scored = false;
  std::optional<int64_t> reverted_by;
  bool is_revert = false;  // this revision is itself an identity revert
};

struct SectionPairing {
  std::vector<std::pair<const Section*, const Section*>> matched;  // differing
  std::vector<const Section*> removed;
  std::vector<const Section*> added;
};

// Matches sections by (key, ordinal). Matched pairs whose bodies are
// identical are dropped.
SectionPairing PairSections(const std::vector<Section>& old_sections,
                            const std::vector<Section>& new_sections);

// |A ∩ B| / |A ∪ B| over whitespace-separated words; 1 for two empty texts.
double WordJaccard(std::string_view a, std::string_view b);

// Aligns the sentences of a matched section pair: exact LCS first, then
// greedy highest-Jaccard pairing of the leftovers (ties: pairs that stay in
// the same LCS gap, then lower old index, then lower new index). Leftovers
// identical to each other are moves and produce no pair.
std::vector<SentencePair> PairSentences(const Section& old_section,
                                        const Section& new_section,
                                        double jaccard_threshold = 0.3);

// Builds the pair for a sentence that only exists on one side.
SentencePair OneSidedPair(const SectionId& section, const Sentence& sentence,
                          PairKind kind, int index);

// True when a delete run overlaps the link's markup in the old text or an
// insert run overlaps it in the new text.
bool DiffTouchesLink(const SentencePair& pair, const std::string& link);

// One event per (sentence pair, link). Whole removed/added sections give
// section_change events; modified pairs without any deletion are demoted to
// insert.
std::vector<EditEvent> ClassifyEvents(const RawRevision& prev,
                                      const RawRevision& cur,
                                      const SectionPairing& pairing,
                                      const std::vector<SentencePair>& pairs,
                                      const RevertMap& revert_map);

struct DiffOptions {
  double jaccard_threshold = 0.3;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Diffs one revision pair end to end.
std::vector<EditEvent> DiffRevisionPair(
    const RawRevision& prev, const std::vector<Section>& prev_sections,
    const RawRevision& cur, const std::vector<Section>& cur_sections,
    const RevertMap& revert_map, const DiffOptions& options);

// All events of a chain, in chain order. Suppressed revisions are skipped
// (their neighbours are compared directly). Output does not depend on the
// thread count.
std::vector<EditEvent> ExtractEvents(const CleanChain& chain,
                                     const DiffOptions& options);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_DIFFCORE_H_
