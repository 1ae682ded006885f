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

#ifndef WIKIDISPUTE_CHAIN_H_
#define WIKIDISPUTE_CHAIN_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wikidispute/config.h"
#include "wikidispute/ingest.h"

namespace wikidispute {

enum class ExclusionReason {
  kVandalismComment,
  kAntivandalBot,
  kIpFastRevert,
  kAesBlankOrReplace,
  kCollapsedIntermediate,
};

const char* ExclusionReasonName(ExclusionReason reason);

// reverted rev_id -> rev_id of the identity revert that undid it.
using RevertMap = std::map<int64_t, int64_t>;

struct Exclusion {
  int64_t rev_id = 0;
  ExclusionReason reason = ExclusionReason::kCollapsedIntermediate;

  bool operator==(const Exclusion&) const = default;
};

// The revision sequence the scoring runs on.
struct CleanChain {
  std::vector<RawRevision> revisions;  // oldest first
  RevertMap revert_map;
  std::vector<Exclusion> excluded;
};

struct BotList {
  std::set<std::string, std::less<>> names;

  bool Contains(std::string_view user) const { return names.contains(user); }
};

struct ChainOptions {
  BotList bots;
  int ip_revert_window_seconds = 60;
  std::vector<std::string> aes_patterns;

  static ChainOptions FromConfig(const Config& config);
};

// Keeps only the last revision of every run of consecutive same-user
// revisions. Dropped ids are appended to *excluded when it is non-null.
std::vector<RawRevision> CollapseConsecutive(std::vector<RawRevision> revisions,
                                             std::vector<Exclusion>* excluded);

// Identity reverts: a revision whose text hash equals that of an earlier
// revision other than its direct predecessor reverts everything in between.
// The most recent matching earlier revision is used, and a revision keeps
// the first revert that undid it. Suppressed revisions neither revert nor
// get matched.
RevertMap DetectReverts(const std::vector<RawRevision>& revisions);

// True when the comment, with any leading arrow marker stripped, starts
// with one of the automatic blank/replace summary prefixes.
bool MatchesAutoSummary(std::string_view comment,
                        const std::vector<std::string>& patterns);

// Drops vandalism and the reverts that undid it, then collapses any
// same-user runs the removal created. revert_map is pruned to surviving
// revisions.
CleanChain FilterVandalism(std::vector<RawRevision> revisions,
                           const RevertMap& revert_map,
                           const ChainOptions& options);

// collapse -> detect reverts -> filter.
CleanChain BuildChain(const ArticleHistory& history,
                      const ChainOptions& options);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_CHAIN_H_
