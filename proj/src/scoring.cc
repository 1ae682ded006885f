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

#include "wikidispute/scoring.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace wikidispute {

std::string RationalToString(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double RationalToDouble6(const Rational& value) {
  double d = value.convert_to<double>();
  double rounded = std::round(d * 1e6) / 1e6;
  return rounded == 0.0 ? 0.0 : rounded;  // no "-0"
}

Rational EventWeight(const EditEvent& event) {
  if (!event.scored || !event.sentence_pair || event.sentence_pair->w <= 0) {
    return Rational(0);
  }
  return Rational(1, event.sentence_pair->w);
}

const char* BucketName(Bucket bucket) {
  return bucket == Bucket::kWeek ? "week" : "month";
}

std::optional<Bucket> ParseBucket(std::string_view name) {
  if (name == "month") return Bucket::kMonth;
  if (name == "week") return Bucket::kWeek;
  return std::nullopt;
}

std::vector<LinkScore> AccumulateScores(const std::vector<EditEvent>& events) {
  std::map<std::string, LinkScore> by_link;
  std::map<std::string, std::set<std::string>> users;
  for (const EditEvent& event : events) {
    LinkScore& ls = by_link[event.link];
    ls.link = event.link;
    Rational weight = EventWeight(event);
    ls.score += weight;
    ++ls.n_edits;
    ++ls.type_counts[event.type];
    users[event.link].insert(event.user);
    if (event.reverted_by) ++ls.n_reverts_involved;
    if (event.scored) ++ls.section_counts[event.section];

    DetailRow row;
    row.rev_id = event.rev_id;
    row.prev_rev_id = event.prev_rev_id;
    row.reverted_by = event.reverted_by;
    row.timestamp = event.timestamp;
    row.user = event.user;
    row.comment = event.comment;
    row.section = event.section;
    row.type = event.type;
    row.scored = event.scored;
    row.weight = weight;
    if (event.sentence_pair) {
      row.kind = event.sentence_pair->kind;
      row.old_text = event.sentence_pair->old_text;
      row.new_text = event.sentence_pair->new_text;
      row.diff = event.sentence_pair->token_diff;
    }
    ls.events.push_back(std::move(row));
  }

  std::vector<LinkScore> ranked;
  for (auto& [link, ls] : by_link) {
    if (ls.score <= 0) continue;
    ls.n_users = static_cast<int>(users[link].size());
    for (EditType type : kAllEditTypes) ls.type_counts.try_emplace(type, 0);
    ranked.push_back(std::move(ls));
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const LinkScore& a, const LinkScore& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.n_edits != b.n_edits) return a.n_edits > b.n_edits;
              return a.link < b.link;
            });
  for (size_t i = 0; i < ranked.size(); ++i) {
    ranked[i].rank = static_cast<int>(i + 1);
  }
  AssignBins(ranked);
  return ranked;
}

std::vector<ScoreSeries> ScoreSeriesFor(const std::vector<EditEvent>& events,
                                        Bucket bucket,
                                        const std::vector<std::string>& order) {
  std::map<std::string, std::map<Timestamp, SeriesPoint>> grouped;
  for (const EditEvent& event : events) {
    if (!event.scored) continue;
    Rational weight = EventWeight(event);
    if (weight == 0) continue;
    Timestamp period = bucket == Bucket::kWeek ? WeekStart(event.timestamp)
                                               : MonthStart(event.timestamp);
    SeriesPoint& point = grouped[event.link][period];
    point.period_start = period;
    point.incremental += weight;
    ++point.events;
  }

  auto build = [&](const std::string& link) {
    ScoreSeries series;
    series.link = link;
    series.bucket = bucket;
    Rational running = 0;
    for (auto& [period, point] : grouped[link]) {
      running += point.incremental;
      point.cumulative = running;
      series.points.push_back(point);
    }
    return series;
  };

  std::vector<ScoreSeries> out;
  if (order.empty()) {
    for (const auto& [link, unused] : grouped) out.push_back(build(link));
  } else {
    for (const std::string& link : order) {
      if (grouped.contains(link)) out.push_back(build(link));
    }
  }
  return out;
}

void AssignBins(std::vector<LinkScore>& links) {
  if (links.empty()) return;
  std::optional<Rational> lo, hi;
  for (const LinkScore& ls : links) {
    if (ls.score > 0 && (!lo || ls.score < *lo)) lo = ls.score;
    if (!hi || ls.score > *hi) hi = ls.score;
  }
  for (LinkScore& ls : links) {
    if (ls.score <= 0 || !lo) {
      ls.bin = 1;
      continue;
    }
    if (*hi == *lo) {
      ls.bin = 5;
      continue;
    }
    // t >= k/5 exactly when (s/lo)^5 >= (hi/lo)^k, so bin edges are decided
    // in exact arithmetic and scaling every score leaves bins unchanged.
    const Rational ratio = ls.score / *lo;
    const Rational span = *hi / *lo;
    const Rational ratio5 = ratio * ratio * ratio * ratio * ratio;
    Rational edge = span;
    int bin = 1;
    for (int k = 1; k <= 4 && ratio5 >= edge; ++k) {
      ++bin;
      edge *= span;
    }
    ls.bin = std::clamp(bin, 1, 5);
  }
}

}  // namespace wikidispute
