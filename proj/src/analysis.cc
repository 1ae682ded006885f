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

#include "wikidispute/analysis.h"

#include <set>

namespace wikidispute {

AnalyzeOptions AnalyzeOptions::FromConfig(const Config& config) {
  AnalyzeOptions options;
  options.chain = ChainOptions::FromConfig(config);
  options.diff.jaccard_threshold = config.jaccard_threshold;
  return options;
}

CleanChain TruncateChain(const CleanChain& chain, size_t count) {
  CleanChain out;
  count = std::min(count, chain.revisions.size());
  out.revisions.assign(
      chain.revisions.begin(),
      chain.revisions.begin() + static_cast<std::ptrdiff_t>(count));
  std::set<int64_t> kept;
  for (const RawRevision& rev : out.revisions) kept.insert(rev.rev_id);
  for (const auto& [reverted, reverter] : chain.revert_map) {
    if (kept.contains(reverted) && kept.contains(reverter)) {
      out.revert_map.emplace(reverted, reverter);
    }
  }
  out.excluded = chain.excluded;
  return out;
}

ChainStats ComputeChainStats(const ArticleHistory& history,
                             const CleanChain& chain) {
  ChainStats stats;
  stats.raw_revisions = static_cast<int>(history.revisions.size());
  stats.kept_revisions = static_cast<int>(chain.revisions.size());
  for (ExclusionReason reason :
       {ExclusionReason::kVandalismComment, ExclusionReason::kAntivandalBot,
        ExclusionReason::kIpFastRevert, ExclusionReason::kAesBlankOrReplace,
        ExclusionReason::kCollapsedIntermediate}) {
    stats.excluded[reason] = 0;
  }
  for (const Exclusion& e : chain.excluded) ++stats.excluded[e.reason];
  stats.reverted_revisions = static_cast<int>(chain.revert_map.size());
  std::set<int64_t> reverters;
  for (const auto& [unused, reverter] : chain.revert_map) {
    reverters.insert(reverter);
  }
  stats.reverting_revisions = static_cast<int>(reverters.size());
  return stats;
}

ArticleReport BuildReport(const ArticleHistory& history,
                          const CleanChain& chain,
                          const std::vector<EditEvent>& events,
                          const AnalyzeOptions& options) {
  ArticleReport report;
  report.article_title = history.article_title;
  report.language_code = history.language_code;
  report.analyzed_revisions = static_cast<int>(chain.revisions.size());
  report.generated_at = options.generated_at.value_or(NowOrSourceDateEpoch());
  report.links = AccumulateScores(events);
  std::vector<std::string> order;
  for (const LinkScore& ls : report.links) order.push_back(ls.link);
  report.series_month = ScoreSeriesFor(events, Bucket::kMonth, order);
  report.series_week = ScoreSeriesFor(events, Bucket::kWeek, order);
  report.chain_stats = ComputeChainStats(history, chain);
  for (auto it = chain.revisions.rbegin(); it != chain.revisions.rend(); ++it) {
    if (it->suppressed) continue;
    report.latest_rev_id = it->rev_id;
    report.latest_timestamp = it->timestamp;
    report.latest_wikitext = it->wikitext;
    break;
  }
  return report;
}

ArticleReport AnalyzeHistory(const ArticleHistory& history,
                             const AnalyzeOptions& options) {
  CleanChain chain = BuildChain(history, options.chain);
  std::vector<EditEvent> events = ExtractEvents(chain, options.diff);
  return BuildReport(history, chain, events, options);
}

}  // namespace wikidispute
