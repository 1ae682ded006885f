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

#ifndef WIKIDISPUTE_ANALYSIS_H_
#define WIKIDISPUTE_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wikidispute/chain.h"
#include "wikidispute/config.h"
#include "wikidispute/diffcore.h"
#include "wikidispute/ingest.h"
#include "wikidispute/scoring.h"

namespace wikidispute {

struct ChainStats {
  int raw_revisions = 0;
  int kept_revisions = 0;
  std::map<ExclusionReason, int> excluded;  // every reason present
  int reverted_revisions = 0;               // revert_map entries
  int reverting_revisions = 0;              // distinct reverters
};

// Everything the views need, with no reference back to the raw history.
struct ArticleReport {
  static constexpr int kSchemaVersion = 1;

  std::string article_title;
  std::string language_code;
  int analyzed_revisions = 0;
  Timestamp generated_at{};
  std::vector<LinkScore> links;  // by rank
  std::vector<ScoreSeries> series_month;
  std::vector<ScoreSeries> series_week;
  ChainStats chain_stats;
  int64_t latest_rev_id = 0;
  Timestamp latest_timestamp{};
  std::string latest_wikitext;
};

struct AnalyzeOptions {
  ChainOptions chain;
  DiffOptions diff;
  // Defaults to NowOrSourceDateEpoch().
  std::optional<Timestamp> generated_at;

  static AnalyzeOptions FromConfig(const Config& config);
};

// First `count` revisions of a chain, with revert_map restricted to them.
CleanChain TruncateChain(const CleanChain& chain, size_t count);

ChainStats ComputeChainStats(const ArticleHistory& history,
                             const CleanChain& chain);

ArticleReport BuildReport(const ArticleHistory& history,
                          const CleanChain& chain,
                          const std::vector<EditEvent>& events,
                          const AnalyzeOptions& options);

// ingest output -> chain -> events -> report.
ArticleReport AnalyzeHistory(const ArticleHistory& history,
                             const AnalyzeOptions& options);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_ANALYSIS_H_
