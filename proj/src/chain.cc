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

#include "wikidispute/chain.h"

#include <algorithm>
#include <unordered_map>

#include "utf8.h"

namespace wikidispute {

const char* ExclusionReasonName(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::kVandalismComment:
      return "vandalism_comment";
    case ExclusionReason::kAntivandalBot:
      return "antivandal_bot";
    case ExclusionReason::kIpFastRevert:
      return "ip_fast_revert";
    case ExclusionReason::kAesBlankOrReplace:
      return "aes_blank_or_replace";
    case ExclusionReason::kCollapsedIntermediate:
      return "collapsed_intermediate";
  }
  return "unknown";
}

ChainOptions ChainOptions::FromConfig(const Config& config) {
  ChainOptions options;
  options.bots.names.insert(config.bots.begin(), config.bots.end());
  options.ip_revert_window_seconds = config.ip_revert_window_seconds;
  options.aes_patterns = config.aes_patterns;
  return options;
}

std::vector<RawRevision> CollapseConsecutive(std::vector<RawRevision> revisions,
                                             std::vector<Exclusion>* excluded) {
  std::vector<RawRevision> kept;
  kept.reserve(revisions.size());
  for (size_t i = 0; i < revisions.size(); ++i) {
    bool run_continues =
        i + 1 < revisions.size() && revisions[i + 1].user == revisions[i].user;
    if (run_continues) {
      if (excluded) {
        excluded->push_back(
            {revisions[i].rev_id, ExclusionReason::kCollapsedIntermediate});
      }
    } else {
      kept.push_back(std::move(revisions[i]));
    }
  }
  return kept;
}

RevertMap DetectReverts(const std::vector<RawRevision>& revisions) {
  RevertMap reverts;
  std::unordered_map<std::string, std::vector<size_t>> positions;
  for (size_t j = 0; j < revisions.size(); ++j) {
    const RawRevision& rev = revisions[j];
    if (rev.suppressed) continue;
    std::vector<size_t>& earlier = positions[rev.text_hash];
    // Most recent match that is not the direct predecessor.
    auto it =
        std::lower_bound(earlier.begin(), earlier.end(), j == 0 ? 0 : j - 1);
    if (it != earlier.begin()) {
      size_t i = *std::prev(it);
      for (size_t k = i + 1; k < j; ++k) {
        reverts.try_emplace(revisions[k].rev_id, rev.rev_id);
      }
    }
    earlier.push_back(j);
  }
  return reverts;
}

bool MatchesAutoSummary(std::string_view comment,
                        const std::vector<std::string>& patterns) {
  // "←" (U+2190) followed by optional spaces marks automatic summaries.
  static constexpr std::string_view kArrow = "\xE2\x86\x90";
  while (!comment.empty() && comment.front() == ' ') comment.remove_prefix(1);
  if (comment.starts_with(kArrow)) comment.remove_prefix(kArrow.size());
  while (!comment.empty() && comment.front() == ' ') comment.remove_prefix(1);
  return std::any_of(patterns.begin(), patterns.end(),
                     [&](const std::string& p) {
                       return !p.empty() && comment.starts_with(p);
                     });
}

namespace {

bool MentionsVandal(std::string_view comment) {
  return utf8::Lower(comment).find("vandal") != std::string::npos;
}

}  // namespace

CleanChain FilterVandalism(std::vector<RawRevision> revisions,
                           const RevertMap& revert_map,
                           const ChainOptions& options) {
  std::unordered_map<int64_t, size_t> index;
  for (size_t i = 0; i < revisions.size(); ++i) index[revisions[i].rev_id] = i;

  std::map<int64_t, ExclusionReason> dropped;
  for (const auto& [reverted_id, reverter_id] : revert_map) {
    auto ki = index.find(reverted_id);
    auto ji = index.find(reverter_id);
    if (ki == index.end() || ji == index.end()) continue;
    const RawRevision& reverted = revisions[ki->second];
    const RawRevision& reverter = revisions[ji->second];

    std::optional<ExclusionReason> reason;
    if (MentionsVandal(reverter.comment)) {
      reason = ExclusionReason::kVandalismComment;
    } else if (options.bots.Contains(reverter.user)) {
      reason = ExclusionReason::kAntivandalBot;
    } else if (reverted.is_ip_user &&
               reverter.timestamp >= reverted.timestamp &&
               reverter.timestamp - reverted.timestamp <=
                   std::chrono::seconds(options.ip_revert_window_seconds)) {
      reason = ExclusionReason::kIpFastRevert;
    } else if (MatchesAutoSummary(reverted.comment, options.aes_patterns)) {
      reason = ExclusionReason::kAesBlankOrReplace;
    }
    if (reason) {
      dropped.try_emplace(reverted_id, *reason);
      dropped.try_emplace(reverter_id, *reason);
    }
  }

  CleanChain chain;
  std::vector<RawRevision> survivors;
  survivors.reserve(revisions.size());
  for (RawRevision& rev : revisions) {
    auto it = dropped.find(rev.rev_id);
    if (it != dropped.end()) {
      chain.excluded.push_back({rev.rev_id, it->second});
    } else {
      survivors.push_back(std::move(rev));
    }
  }
  // Removing a pair can leave the same user twice in a row.
  chain.revisions = CollapseConsecutive(std::move(survivors), &chain.excluded);

  std::set<int64_t> kept;
  for (const RawRevision& rev : chain.revisions) kept.insert(rev.rev_id);
  for (const auto& [reverted_id, reverter_id] : revert_map) {
    if (kept.contains(reverted_id) && kept.contains(reverter_id)) {
      chain.revert_map.emplace(reverted_id, reverter_id);
    }
  }
  return chain;
}

CleanChain BuildChain(const ArticleHistory& history,
                      const ChainOptions& options) {
  std::vector<Exclusion> collapsed;
  std::vector<RawRevision> revisions =
      CollapseConsecutive(history.revisions, &collapsed);
  RevertMap reverts = DetectReverts(revisions);
  CleanChain chain = FilterVandalism(std::move(revisions), reverts, options);
  collapsed.insert(collapsed.end(), chain.excluded.begin(),
                   chain.excluded.end());
  chain.excluded = std::move(collapsed);
  return chain;
}

}  // namespace wikidispute
