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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "test_support.h"
#include "wikidispute/analysis.h"
#include "wikidispute/chain.h"
#include "wikidispute/diffcore.h"
#include "wikidispute/fixtures.h"
#include "wikidispute/report_json.h"

namespace wikidispute {
namespace {

using testing::RevIds;
using testing::ScoreMap;

constexpr char kListLink[] =
    "List of scientists opposing the mainstream scientific assessment of "
    "global warming";

AnalyzeOptions Options() {
  AnalyzeOptions options = AnalyzeOptions::FromConfig(Config{});
  options.generated_at = *ParseTimestamp("2026-01-01T00:00:00Z");
  return options;
}

TEST(Accumulate, WorkedExampleIsExact) {
  ArticleReport report = AnalyzeHistory(ConsensusEditsFixture(), Options());
  ASSERT_EQ(report.links.size(), 2u);
  EXPECT_EQ(report.links[0].link, kListLink);
  EXPECT_EQ(report.links[0].score, Rational(3, 2));
  EXPECT_EQ(report.links[0].rank, 1);
  EXPECT_EQ(report.links[0].bin, 5);
  EXPECT_EQ(report.links[1].link, "Scientific consensus");
  EXPECT_EQ(report.links[1].score, Rational(1, 2));
  EXPECT_EQ(report.links[1].bin, 1);
  // The newer edit contributes 1/2, the older one 1.
  ASSERT_EQ(report.links[0].events.size(), 2u);
  EXPECT_EQ(report.links[0].events[0].weight, Rational(1));
  EXPECT_EQ(report.links[0].events[1].weight, Rational(1, 2));
}

TEST(Accumulate, EmptyEvents) { EXPECT_TRUE(AccumulateScores({}).empty()); }

// Random events over 12 links checked against direct summation.
TEST(Accumulate, MatchesDirectSummation) {
  std::mt19937_64 rng(200);
  std::vector<std::string> links;
  for (int i = 0; i < 12; ++i) links.push_back("L" + std::to_string(i));
  std::vector<EditEvent> events;
  std::map<std::string, Rational> expected;
  while (events.size() < 200) {
    auto pair = std::make_shared<SentencePair>();
    std::set<std::string> chosen;
    int n = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(chosen.size()) < n) {
      chosen.insert(links[rng() % links.size()]);
    }
    pair->links_union.assign(chosen.begin(), chosen.end());
    pair->w = n;
    EditType type = kAllEditTypes[rng() % 5];
    pair->has_deletion = IsScoredType(type);
    for (const std::string& link : chosen) {
      EditEvent e;
      e.rev_id = static_cast<int64_t>(events.size());
      e.user = "u" + std::to_string(rng() % 5);
      e.link = link;
      e.type = type;
      e.scored = IsScoredType(type);
      e.sentence_pair = pair;
      events.push_back(e);
      if (e.scored) expected[link] += Rational(1, n);
    }
  }
  std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
  EXPECT_EQ(ScoreMap(AccumulateScores(events)), expected);
}

TEST(Accumulate, MatchesBruteForceOracle) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    synth::Options options;
    options.seed = seed;
    options.revisions = 10 + static_cast<int>(seed % 41);
    options.links = 1 + static_cast<int>(seed % 10);
    synth::History generated = synth::Generate(options);
    CleanChain chain =
        BuildChain(generated.history, ChainOptions::FromConfig(Config{}));
    auto oracle = testing::OracleScores(generated, RevIds(chain.revisions));
    auto scores = ScoreMap(AccumulateScores(ExtractEvents(chain, {})));
    std::erase_if(scores, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(scores, oracle.scores) << "seed " << seed;
  }
}

TEST(Bins, EqualLogSpacing) {
  std::vector<LinkScore> links(5);
  const int scores[] = {1, 10, 100, 1000, 10000};
  for (int i = 0; i < 5; ++i) links[i].score = scores[i];
  AssignBins(links);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(links[i].bin, i + 1) << scores[i];
}

TEST(Bins, AllEqualIsTopBin) {
  std::vector<LinkScore> links(3);
  for (LinkScore& l : links) l.score = Rational(2, 3);
  AssignBins(links);
  for (const LinkScore& l : links) EXPECT_EQ(l.bin, 5);
}

TEST(Bins, TwoValues) {
  std::vector<LinkScore> links(2);
  links[0].score = Rational(1, 2);
  links[1].score = Rational(3, 2);
  AssignBins(links);
  EXPECT_EQ(links[0].bin, 1);
  EXPECT_EQ(links[1].bin, 5);
}

TEST(Bins, EdgesAndZero) {
  std::vector<LinkScore> links(4);
  links[0].score = 0;
  links[1].score = 1;
  links[2].score = 32;  // 2^5 over 1: t = 1
  links[3].score = 4;   // t = 0.4, floor(2) + 1 = 3
  AssignBins(links);
  EXPECT_EQ(links[0].bin, 1);
  EXPECT_EQ(links[1].bin, 1);
  EXPECT_EQ(links[2].bin, 5);
  EXPECT_EQ(links[3].bin, 3);
  std::vector<LinkScore> none;
  AssignBins(none);
  EXPECT_TRUE(none.empty());
}

TEST(Series, SingleEvent) {
  auto pair = std::make_shared<SentencePair>();
  pair->links_union = {"A", "B"};
  pair->w = 2;
  pair->has_deletion = true;
  EditEvent e;
  e.link = "A";
  e.type = EditType::kElementChange;
  e.scored = true;
  e.sentence_pair = pair;
  e.timestamp = *ParseTimestamp("2007-11-07T03:41:47Z");
  auto series = ScoreSeriesFor({e}, Bucket::kMonth);
  ASSERT_EQ(series.size(), 1u);
  EXPECT_EQ(series[0].link, "A");
  ASSERT_EQ(series[0].points.size(), 1u);
  const SeriesPoint& p = series[0].points[0];
  EXPECT_EQ(FormatTimestamp(p.period_start), "2007-11-01T00:00:00Z");
  EXPECT_EQ(p.cumulative, Rational(1, 2));
  EXPECT_EQ(p.incremental, Rational(1, 2));
  EXPECT_EQ(p.events, 1);

  auto weekly = ScoreSeriesFor({e}, Bucket::kWeek);
  EXPECT_EQ(FormatTimestamp(weekly[0].points[0].period_start),
            "2007-11-05T00:00:00Z");  // Monday
}

TEST(Series, UnscoredLinksHaveNoSeries) {
  EditEvent e;
  e.link = "A";
  e.type = EditType::kInsert;
  e.sentence_pair = std::make_shared<SentencePair>();
  EXPECT_TRUE(ScoreSeriesFor({e}, Bucket::kMonth).empty());
}

TEST(Series, IncrementsSumToScoreOnRandomHistories) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    synth::Options options;
    options.seed = seed;
    ArticleReport report =
        AnalyzeHistory(synth::Generate(options).history, Options());
    std::map<std::string, Rational> scores = ScoreMap(report.links);
    for (const auto* all : {&report.series_month, &report.series_week}) {
      ASSERT_EQ(all->size(), report.links.size());
      for (const ScoreSeries& s : *all) {
        Rational sum = 0;
        Rational last = 0;
        for (const SeriesPoint& p : s.points) {
          sum += p.incremental;
          EXPECT_GE(p.cumulative, last);
          EXPECT_EQ(p.cumulative, sum);
          last = p.cumulative;
        }
        EXPECT_EQ(sum, scores.at(s.link));
      }
      // Series follow the ranking order.
      for (size_t i = 0; i < all->size(); ++i) {
        EXPECT_EQ((*all)[i].link, report.links[i].link);
      }
    }
  }
}

TEST(Properties, ConservationAndTotalMass) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    synth::Options options;
    options.seed = seed;
    ArticleHistory h = synth::Generate(options).history;
    CleanChain chain = BuildChain(h, ChainOptions::FromConfig(Config{}));
    auto events = ExtractEvents(chain, DiffOptions{});
    std::map<const SentencePair*, Rational> per_pair;
    for (const EditEvent& e : events) {
      if (e.scored) per_pair[e.sentence_pair.get()] += EventWeight(e);
    }
    for (const auto& [pair, total] : per_pair) EXPECT_EQ(total, 1);
    Rational mass = 0;
    for (const LinkScore& l : AccumulateScores(events)) mass += l.score;
    EXPECT_EQ(mass, static_cast<int>(per_pair.size()));
  }
}

TEST(Properties, MonotoneUnderTruncation) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    synth::Options options;
    options.seed = seed;
    options.revisions = 40;
    ArticleHistory h = synth::Generate(options).history;
    CleanChain chain = BuildChain(h, ChainOptions::FromConfig(Config{}));
    std::map<std::string, Rational> previous;
    for (size_t r = 1; r <= chain.revisions.size(); ++r) {
      auto scores = ScoreMap(
          AccumulateScores(ExtractEvents(TruncateChain(chain, r), {})));
      for (const auto& [link, score] : previous) {
        EXPECT_GE(scores[link], score) << link << " at " << r;
      }
      previous = scores;
    }
  }
}

TEST(Properties, ScalingKeepsRanksAndBins) {
  ArticleReport report = AnalyzeHistory(testing::StatsFixture(), Options());
  for (Rational factor : {Rational(1, 7), Rational(3), Rational(1000)}) {
    std::vector<LinkScore> scaled = report.links;
    for (LinkScore& l : scaled) l.score *= factor;
    AssignBins(scaled);
    for (size_t i = 0; i < scaled.size(); ++i) {
      EXPECT_EQ(scaled[i].bin, report.links[i].bin);
      if (i > 0) EXPECT_GE(scaled[i - 1].score, scaled[i].score);
    }
  }
}

TEST(Properties, VandalismInjectionKeepsReport) {
  ArticleHistory base = testing::FilterBaseHistory();
  std::string expected =
      ReportToJson(AnalyzeHistory(base, Options())).at("links").dump();
  for (auto rule :
       {testing::VandalRule::kComment, testing::VandalRule::kBot,
        testing::VandalRule::kIpFast, testing::VandalRule::kAutoSummary}) {
    ArticleHistory injected = testing::InjectVandalism(base, 2, rule, 30, 900);
    EXPECT_EQ(
        ReportToJson(AnalyzeHistory(injected, Options())).at("links").dump(),
        expected);
  }
}

TEST(Stats, HandTalliedFixture) {
  ArticleReport report = AnalyzeHistory(testing::StatsFixture(), Options());
  auto expected = testing::ExpectedStats();
  ASSERT_EQ(report.links.size(), expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    const LinkScore& got = report.links[i];
    const auto& want = expected[i];
    SCOPED_TRACE(want.link);
    EXPECT_EQ(got.link, want.link);
    EXPECT_EQ(got.score, want.score);
    EXPECT_EQ(got.rank, want.rank);
    EXPECT_EQ(got.bin, want.bin);
    EXPECT_EQ(got.n_edits, want.n_edits);
    EXPECT_EQ(got.n_users, want.n_users);
    EXPECT_EQ(got.n_reverts_involved, want.n_reverts_involved);
    std::map<std::string, int> types;
    for (const auto& [type, n] : got.type_counts) types[EditTypeName(type)] = n;
    EXPECT_EQ(types, want.type_counts);
    std::map<std::string, int> sections;
    for (const auto& [section, n] : got.section_counts) {
      sections[SectionLabel(section)] = n;
    }
    EXPECT_EQ(sections, want.section_counts);
  }
  EXPECT_EQ(report.chain_stats.raw_revisions, 6);
  EXPECT_EQ(report.chain_stats.kept_revisions, 6);
  EXPECT_EQ(report.chain_stats.reverted_revisions, 1);
  EXPECT_EQ(report.chain_stats.reverting_revisions, 1);
  // The reverted edit's rows carry the reverting revision.
  EXPECT_EQ(report.links[0].events[0].rev_id, 2);
  EXPECT_EQ(report.links[0].events[0].reverted_by, 3);
  EXPECT_FALSE(report.links[0].events[1].reverted_by.has_value());
}

TEST(RationalFormat, StringsAndRounding) {
  EXPECT_EQ(RationalToString(Rational(3, 2)), "3/2");
  EXPECT_EQ(RationalToString(Rational(2)), "2");
  EXPECT_DOUBLE_EQ(RationalToDouble6(Rational(7, 3)), 2.333333);
  EXPECT_DOUBLE_EQ(RationalToDouble6(Rational(1, 2)), 0.5);
}

}  // namespace
}  // namespace wikidispute
