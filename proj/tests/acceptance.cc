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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.h"
#include "wikidispute/analysis.h"
#include "wikidispute/chain.h"
#include "wikidispute/diffcore.h"
#include "wikidispute/fixtures.h"
#include "wikidispute/ingest.h"
#include "wikidispute/report_json.h"
#include "wikidispute/scoring.h"

namespace wikidispute {
namespace {

using testing::RevIds;
using testing::ScoreMap;
using testing::VandalRule;
using Clock = std::chrono::steady_clock;

// Collects the reasons a criterion failed.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string out;
    for (const std::string& f : failures_) out += (out.empty() ? "" : "; ") + f;
    if (count_ > static_cast<int>(failures_.size())) {
      out += "; " + std::to_string(count_ - failures_.size()) + " more";
    }
    return out;
  }

 private:
  std::vector<std::string> failures_;
  int count_ = 0;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

AnalyzeOptions Options() {
  AnalyzeOptions options = AnalyzeOptions::FromConfig(Config{});
  options.generated_at = *ParseTimestamp("2026-01-01T00:00:00Z");
  return options;
}

ChainOptions Defaults() { return ChainOptions::FromConfig(Config{}); }

std::string Str(const Rational& r) { return RationalToString(r); }

synth::Options RandomOptions(uint64_t seed) {
  synth::Options options;
  options.seed = seed;
  options.revisions = 10 + static_cast<int>(seed % 41);
  options.links = 1 + static_cast<int>(seed % 10);
  return options;
}

std::string WorkedExample(Check& check) {
  auto start = Clock::now();
  std::ifstream in(WIKIDISPUTE_FIXTURE_DIR "/worked_example.xml");
  check.Expect(static_cast<bool>(in), "bundled fixture missing");
  if (!in) return "";
  ArticleHistory history = ParseDump(in, "Global warming");
  ArticleReport report = AnalyzeHistory(history, Options());
  double elapsed = Seconds(start);
  const std::map<std::string, Rational> want = {
      {"List of scientists opposing the mainstream scientific assessment of "
       "global warming",
       Rational(3, 2)},
      {"Scientific consensus", Rational(1, 2)},
  };
  check.Expect(history.revisions.size() == 3, "expected 3 revisions");
  check.Expect(ScoreMap(report.links) == want, "scores differ");
  check.Expect(
      !report.links.empty() && report.links[0].link == want.begin()->first,
      "ranking order");
  check.Expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream detail;
  for (const LinkScore& l : report.links) {
    detail << l.link.substr(0, 24) << "=" << Str(l.score) << " ";
  }
  detail << "in " << elapsed << " s";
  return detail.str();
}

std::string OracleEquivalence(Check& check) {
  auto start = Clock::now();
  constexpr int kHistories = 120;
  for (uint64_t seed = 1; seed <= kHistories; ++seed) {
    synth::History generated = synth::Generate(RandomOptions(seed));
    CleanChain chain = BuildChain(generated.history, Defaults());
    auto oracle = testing::OracleScores(generated, RevIds(chain.revisions));
    auto scores = ScoreMap(AccumulateScores(ExtractEvents(chain, {})));
    std::erase_if(scores, [](const auto& kv) { return kv.second == 0; });
    check.Expect(scores == oracle.scores, "seed " + std::to_string(seed));
  }
  double elapsed = Seconds(start);
  check.Expect(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  return std::to_string(kHistories) + " histories in " +
         std::to_string(elapsed) + " s";
}

std::string Conservation(Check& check) {
  int pairs = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    synth::History generated = synth::Generate(RandomOptions(seed));
    CleanChain chain = BuildChain(generated.history, Defaults());
    auto events = ExtractEvents(chain, {});
    std::map<const SentencePair*, Rational> per_pair;
    for (const EditEvent& e : events) {
      if (e.scored) per_pair[e.sentence_pair.get()] += EventWeight(e);
    }
    for (const auto& [pair, total] : per_pair) {
      check.Expect(total == 1, "seed " + std::to_string(seed) +
                                   " pair sums to " + Str(total));
    }
    Rational mass = 0;
    for (const LinkScore& l : AccumulateScores(events)) mass += l.score;
    auto oracle = testing::OracleScores(generated, RevIds(chain.revisions));
    check.Expect(mass == static_cast<int>(per_pair.size()) &&
                     mass == oracle.scored_pairs_with_links,
                 "seed " + std::to_string(seed) + " mass " + Str(mass));
    pairs += static_cast<int>(per_pair.size());
  }
  return "100 histories, " + std::to_string(pairs) + " scored pairs";
}

void CheckMonotone(const CleanChain& chain, const std::string& name,
                   Check& check) {
  std::map<std::string, Rational> previous;
  for (size_t r = 1; r <= chain.revisions.size(); ++r) {
    auto scores =
        ScoreMap(AccumulateScores(ExtractEvents(TruncateChain(chain, r), {})));
    for (const auto& [link, score] : previous) {
      check.Expect(scores[link] >= score,
                   name + " " + link + " drops at " + std::to_string(r));
    }
    previous = std::move(scores);
  }
}

std::string Monotonicity(Check& check) {
  int fixtures = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    ArticleHistory h = synth::Generate(RandomOptions(seed)).history;
    CheckMonotone(BuildChain(h, Defaults()), "seed " + std::to_string(seed),
                  check);
    ++fixtures;
  }
  CheckMonotone(BuildChain(ConsensusEditsFixture(), Defaults()), "worked",
                check);
  CheckMonotone(BuildChain(testing::StatsFixture(), Defaults()), "stats",
                check);
  return std::to_string(fixtures + 2) + " fixtures, every prefix";
}

bool SameChain(const CleanChain& got, const CleanChain& want,
               ExclusionReason reason) {
  std::vector<Exclusion> excluded = want.excluded;
  excluded.push_back({900, reason});
  excluded.push_back({901, reason});
  return got.revisions == want.revisions && got.revert_map == want.revert_map &&
         got.excluded == excluded;
}

std::string Filtering(Check& check) {
  ArticleHistory base = testing::FilterBaseHistory();
  CleanChain want = BuildChain(base, Defaults());
  struct Case {
    const char* name;
    VandalRule rule;
    int delay;
    ExclusionReason reason;
  };
  const Case cases[] = {
      {"comment", VandalRule::kComment, 300,
       ExclusionReason::kVandalismComment},
      {"bot", VandalRule::kBot, 300, ExclusionReason::kAntivandalBot},
      {"ip@59s", VandalRule::kIpFast, 59, ExclusionReason::kIpFastRevert},
      {"ip@60s", VandalRule::kIpFast, 60, ExclusionReason::kIpFastRevert},
      {"summary", VandalRule::kAutoSummary, 300,
       ExclusionReason::kAesBlankOrReplace},
  };
  for (const Case& c : cases) {
    CleanChain got = BuildChain(
        testing::InjectVandalism(base, 3, c.rule, c.delay, 900), Defaults());
    check.Expect(SameChain(got, want, c.reason), c.name);
  }
  ArticleHistory blanked = base;
  RawRevision blank =
      testing::Rev(900, "Mallory", "", 10900, "Blanked the page");
  RawRevision restore = base.revisions[2];
  restore.rev_id = 901;
  restore.user = "Trent";
  restore.timestamp = blank.timestamp + std::chrono::hours(5);
  blanked.revisions.insert(blanked.revisions.begin() + 3, {blank, restore});
  check.Expect(SameChain(BuildChain(blanked, Defaults()), want,
                         ExclusionReason::kAesBlankOrReplace),
               "blank");
  CleanChain slow = BuildChain(
      testing::InjectVandalism(base, 3, VandalRule::kIpFast, 61, 900),
      Defaults());
  check.Expect(slow.revisions.size() == want.revisions.size() + 2 &&
                   slow.revert_map.contains(900) &&
                   slow.revert_map.at(900) == 901,
               "ip@61s should be kept");
  return "comment, bot, ip 59/60 excluded, ip 61 kept, blank/replace summary";
}

std::string RevertDetection(Check& check) {
  ArticleHistory h = testing::MakeHistory({
      testing::Rev(1, "U1", "A", 0),
      testing::Rev(2, "U2", "B", 3600),
      testing::Rev(3, "U3", "A", 7200),
      testing::Rev(4, "U4", "B", 10800),
  });
  RevertMap want = {{2, 3}, {3, 4}};
  RevertMap direct = DetectReverts(h.revisions);
  RevertMap chained = BuildChain(h, Defaults()).revert_map;
  check.Expect(direct == want, "DetectReverts");
  check.Expect(chained == want, "BuildChain");
  std::string out;
  for (const auto& [from, to] : chained) {
    out += (out.empty() ? "" : ", ") + std::to_string(from) + "->" +
           std::to_string(to);
  }
  return "{" + out + "}";
}

std::string Determinism(Check& check) {
  synth::Options options;
  options.seed = 5000;
  options.revisions = 5000;
  ArticleHistory generated = synth::Generate(options).history;
  std::string xml = DumpXml(generated);
  std::vector<std::string> reports;
  double slowest = 0;
  for (int run = 0; run < 2; ++run) {
    auto start = Clock::now();
    std::istringstream in(xml);
    ArticleHistory history = ParseDump(in, generated.article_title);
    reports.push_back(SerializeReport(AnalyzeHistory(history, Options())));
    slowest = std::max(slowest, Seconds(start));
  }
  check.Expect(reports[0] == reports[1], "reports differ");
  check.Expect(slowest < 60.0, "took " + std::to_string(slowest) + " s");
  return std::to_string(reports[0].size()) + " bytes, slowest run " +
         std::to_string(slowest) + " s";
}

std::string HandTallies(Check& check) {
  ArticleReport report = AnalyzeHistory(testing::StatsFixture(), Options());
  auto expected = testing::ExpectedStats();
  check.Expect(report.links.size() == expected.size(), "link count");
  for (size_t i = 0; i < std::min(report.links.size(), expected.size()); ++i) {
    const LinkScore& got = report.links[i];
    const auto& want = expected[i];
    std::map<std::string, int> types;
    for (const auto& [type, n] : got.type_counts) types[EditTypeName(type)] = n;
    std::map<std::string, int> sections;
    for (const auto& [section, n] : got.section_counts) {
      sections[SectionLabel(section)] = n;
    }
    check.Expect(got.link == want.link, want.link + " order");
    check.Expect(got.score == want.score, want.link + " score");
    check.Expect(got.n_edits == want.n_edits, want.link + " n_edits");
    check.Expect(got.n_users == want.n_users, want.link + " n_users");
    check.Expect(got.n_reverts_involved == want.n_reverts_involved,
                 want.link + " n_reverts_involved");
    check.Expect(types == want.type_counts, want.link + " type_counts");
    check.Expect(sections == want.section_counts,
                 want.link + " section_counts");
  }
  return std::to_string(expected.size()) + " links";
}

int Main() {
  struct Criterion {
    const char* name;
    std::function<std::string(Check&)> run;
  };
  const Criterion criteria[] = {
      {"worked-example reproduction", WorkedExample},
      {"oracle equivalence", OracleEquivalence},
      {"weight conservation", Conservation},
      {"monotonicity", Monotonicity},
      {"filtering rules", Filtering},
      {"revert detection", RevertDetection},
      {"determinism and performance", Determinism},
      {"hand-tallied statistics", HandTallies},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Check check;
    std::string detail;
    try {
      detail = c.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    if (check.ok()) {
      std::printf("PASS %s (%s)\n", c.name, detail.c_str());
    } else {
      ++failed;
      std::printf("FAIL %s: %s\n", c.name, check.Summary().c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace wikidispute

int main() { return wikidispute::Main(); }
