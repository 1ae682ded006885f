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

#ifndef WIKIDISPUTE_SCORING_H_
#define WIKIDISPUTE_SCORING_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wikidispute/chain.h"
#include "wikidispute/diffcore.h"

namespace wikidispute {

// Scores are sums of 1/w and are kept exact until serialization.
using Rational = boost::multiprecision::cpp_rational;

// "3/2", "1", "0".
std::string RationalToString(const Rational& value);
// Nearest double rounded to 6 decimals.
double RationalToDouble6(const Rational& value);

// Weight an event contributes to its link: 1/w when scored, else 0.
Rational EventWeight(const EditEvent& event);

// One row of a link's edit table.
struct DetailRow {
  int64_t rev_id = 0;
  int64_t prev_rev_id = 0;
  std::optional<int64_t> reverted_by;
  Timestamp timestamp{};
  std::string user;
  std::string comment;
  SectionId section;
  EditType type = EditType::kSentenceChange;
  bool scored = false;
  Rational weight;
  PairKind kind = PairKind::kModified;
  std::optional<std::string> old_text;
  std::optional<std::string> new_text;
  std::vector<DiffRun> diff;
};

struct LinkScore {
  std::string link;
  Rational score;
  int rank = 0;
  int bin = 0;  // 1..5, 5 = most controversial
  int n_edits = 0;
  int n_users = 0;
  int n_reverts_involved = 0;
  std::map<EditType, int> type_counts;      // every type present, zeros too
  std::map<SectionId, int> section_counts;  // scored events per section
  std::vector<DetailRow> events;            // chain order
};

enum class Bucket { kMonth, kWeek };

const char* BucketName(Bucket bucket);
std::optional<Bucket> ParseBucket(std::string_view name);

struct SeriesPoint {
  Timestamp period_start{};
  Rational cumulative;
  Rational incremental;
  int events = 0;
};

struct ScoreSeries {
  std::string link;
  Bucket bucket = Bucket::kMonth;
  std::vector<SeriesPoint> points;
};

// Adds 1/w(S) to the link of every scored event and ranks the links that
// end up with a positive score (score desc, then more events, then link
// name). Counts cover all of a link's events, scored or not, except
// section_counts which counts scored events only. An event counts toward
// n_reverts_involved when its revision was later reverted.
std::vector<LinkScore> AccumulateScores(const std::vector<EditEvent>& events);

// Per-link scored weight grouped into UTC calendar buckets. Empty buckets
// produce no point; links without scored events produce no series. Series
// follow the order of `order` when given, else link name.
std::vector<ScoreSeries> ScoreSeriesFor(
    const std::vector<EditEvent>& events, Bucket bucket,
    const std::vector<std::string>& order = {});

// Five equal-width bins over [log lo, log hi], lo = smallest positive score,
// hi = largest. All-equal scores land in bin 5; zero scores in bin 1.
void AssignBins(std::vector<LinkScore>& links);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_SCORING_H_
