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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "test_support.h"
#include "wikidispute/chain.h"
#include "wikidispute/fixtures.h"
#include "wikidispute/token_diff.h"
#include "wikidispute/wikitext.h"

namespace wikidispute {
namespace {

using testing::Rev;

Section Lead(std::string_view text) { return SplitSections(text).at(0); }

std::vector<EditEvent> DiffTexts(std::string_view a, std::string_view b,
                                 const RevertMap& reverts = {}) {
  RawRevision prev = Rev(1, "Alice", std::string(a), 0);
  RawRevision cur = Rev(2, "Bob", std::string(b), 60);
  return DiffRevisionPair(prev, SplitSections(a), cur, SplitSections(b),
                          reverts, DiffOptions{});
}

TEST(PairSections, IdenticalRevisionsGiveNothing) {
  auto s = SplitSections("Lead.\n== A ==\nBody.");
  SectionPairing p = PairSections(s, s);
  EXPECT_TRUE(p.matched.empty());
  EXPECT_TRUE(p.removed.empty());
  EXPECT_TRUE(p.added.empty());
}

TEST(PairSections, RenameIsRemoveAndAdd) {
  auto before = SplitSections("L.\n== Notes ==\nX [[A]].");
  auto after = SplitSections("L.\n== Footnotes ==\nX [[A]].");
  SectionPairing p = PairSections(before, after);
  EXPECT_TRUE(p.matched.empty());
  ASSERT_EQ(p.removed.size(), 1u);
  EXPECT_EQ(p.removed[0]->key, "notes");
  ASSERT_EQ(p.added.size(), 1u);
  EXPECT_EQ(p.added[0]->key, "footnotes");
}

TEST(PairSections, OnlyChangedAbstract) {
  auto before = SplitSections("Old lead.\n== A ==\nSame.\n== B ==\nSame.");
  auto after = SplitSections("New lead.\n== A ==\nSame.\n== B ==\nSame.");
  SectionPairing p = PairSections(before, after);
  ASSERT_EQ(p.matched.size(), 1u);
  EXPECT_EQ(p.matched[0].first->key, "abstract");
  EXPECT_EQ(p.matched[0].first->ordinal, 0);
}

TEST(PairSentences, SmallMinorityEdit) {
  auto pairs = PairSentences(Lead("A few [[X]] disagree."),
                             Lead("A small minority of [[X]] disagree."));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].kind, PairKind::kModified);
  EXPECT_TRUE(pairs[0].has_deletion);
  EXPECT_EQ(pairs[0].links_union, (std::vector<std::string>{"X"}));
  EXPECT_EQ(pairs[0].w, 1);
}

TEST(PairSentences, InsertedSentence) {
  auto pairs = PairSentences(Lead("One [[A]] here."),
                             Lead("One [[A]] here. Two [[B]] there."));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].kind, PairKind::kInserted);
  EXPECT_FALSE(pairs[0].old_text.has_value());
  EXPECT_EQ(*pairs[0].new_text, "Two [[B]] there.");
  EXPECT_FALSE(pairs[0].has_deletion);
}

TEST(PairSentences, DeletedSentence) {
  auto pairs = PairSentences(Lead("One [[A]] here. Two [[B]] there."),
                             Lead("Two [[B]] there."));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].kind, PairKind::kDeleted);
  EXPECT_FALSE(pairs[0].new_text.has_value());
  EXPECT_TRUE(pairs[0].has_deletion);
  EXPECT_EQ(pairs[0].w, 1);
}

TEST(PairSentences, BelowThresholdIsDeletePlusInsert) {
  auto pairs = PairSentences(Lead("Alpha beta gamma delta."),
                             Lead("Epsilon zeta eta beta."));
  ASSERT_EQ(pairs.size(), 2u);
  std::multiset<PairKind> kinds = {pairs[0].kind, pairs[1].kind};
  EXPECT_EQ(kinds,
            (std::multiset<PairKind>{PairKind::kDeleted, PairKind::kInserted}));
}

TEST(PairSentences, MovedSentenceProducesNoPair) {
  auto pairs = PairSentences(Lead("First one. Second one. Third one."),
                             Lead("Third one. First one. Second one."));
  EXPECT_TRUE(pairs.empty());
}

TEST(WordJaccard, Values) {
  EXPECT_DOUBLE_EQ(WordJaccard("a b c", "a b d"), 0.5);
  EXPECT_DOUBLE_EQ(WordJaccard("", ""), 1.0);
  EXPECT_DOUBLE_EQ(WordJaccard("a a b", "b"), 0.5);
}

std::string RandomSentence(std::mt19937_64& rng, int id) {
  static const char* kWords[] = {
      "river", "stone",  "cloud",  "forest", "metal",  "glass", "paper",
      "storm", "field",  "light",  "shadow", "bridge", "tower", "garden",
      "ocean", "desert", "valley", "island", "canyon", "harbor"};
  std::string s = "S" + std::to_string(id);
  for (int i = 0; i < 9; ++i) {
    s += " ";
    s += kWords[rng() % 20];
    s += std::to_string(id * 10 + i);
  }
  return s + ".";
}

// Brute force over assignments of the leftover sentences: the best total
// similarity among pairings whose every pair clears the threshold.
std::set<std::pair<std::string, std::string>> ExhaustiveBestPairing(
    const std::vector<std::string>& olds,
    const std::vector<std::string>& news) {
  std::vector<int> perm(news.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  double best = -1;
  std::set<std::pair<std::string, std::string>> best_set;
  do {
    double total = 0;
    std::set<std::pair<std::string, std::string>> chosen;
    for (size_t i = 0; i < olds.size() && i < perm.size(); ++i) {
      double j = WordJaccard(olds[i], news[perm[i]]);
      if (j >= 0.3) {
        total += j;
        chosen.emplace(olds[i], news[perm[i]]);
      }
    }
    if (total > best) {
      best = total;
      best_set = chosen;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_set;
}

TEST(PairSentences, RecoversPlantedModificationsInShuffledSection) {
  std::mt19937_64 rng(20);
  for (int round = 0; round < 25; ++round) {
    std::vector<std::string> old_sentences;
    for (int i = 0; i < 20; ++i) {
      old_sentences.push_back(RandomSentence(rng, round * 100 + i));
    }
    std::vector<std::string> new_sentences = old_sentences;
    std::vector<int> order(20);
    for (int i = 0; i < 20; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::set<std::pair<std::string, std::string>> planted;
    for (int k = 0; k < 3; ++k) {
      int idx = order[k];
      std::string& s = new_sentences[idx];
      size_t cut = s.rfind(' ');
      std::string modified =
          s.substr(0, cut) + " changed" + std::to_string(k) + ".";
      planted.emplace(old_sentences[idx], modified);
      s = modified;
    }
    // Move a block of unmodified sentences to the front.
    std::rotate(new_sentences.begin(), new_sentences.begin() + 7,
                new_sentences.end());
    std::string old_text, new_text;
    for (auto& s : old_sentences) old_text += s + " ";
    for (auto& s : new_sentences) new_text += s + " ";

    auto pairs = PairSentences(Lead(old_text), Lead(new_text));
    std::set<std::pair<std::string, std::string>> got;
    std::vector<std::string> left_old, left_new;
    for (const SentencePair& p : pairs) {
      ASSERT_EQ(p.kind, PairKind::kModified);
      got.emplace(*p.old_text, *p.new_text);
      left_old.push_back(*p.old_text);
      left_new.push_back(*p.new_text);
    }
    EXPECT_EQ(got, planted);
    EXPECT_EQ(ExhaustiveBestPairing(left_old, left_new), planted);
  }
}

TEST(ClassifyEvents, WorkedExampleSecondEditTouchesBothLinks) {
  const std::string list =
      "[[List of scientists opposing the mainstream scientific assessment of "
      "global warming|";
  auto events = DiffTexts(
      "A small minority of " + list +
          "individual climate scientists]] disagree with some of the main "
          "conclusions of the IPCC.",
      "While there are " + list +
          "individual scientists]] who might publicly disagree with some of "
          "the main conclusions of the IPCC, these conclusions do represent "
          "the general [[scientific consensus]], especially among active "
          "climate scientists and researchers.");
  ASSERT_EQ(events.size(), 2u);
  for (const EditEvent& e : events) {
    EXPECT_EQ(e.type, EditType::kElementChange);
    EXPECT_TRUE(e.scored);
    EXPECT_EQ(e.section.key, "abstract");
    EXPECT_EQ(e.sentence_pair->w, 2);
  }
  EXPECT_EQ(events[0].link,
            "List of scientists opposing the mainstream scientific assessment "
            "of global warming");
  EXPECT_EQ(events[1].link, "Scientific consensus");
}

TEST(ClassifyEvents, RemovedSectionIsUnscoredSectionChange) {
  auto events =
      DiffTexts("Lead.\n== See also ==\n* [[A]]\n* [[B]]\n", "Lead.\n");
  ASSERT_EQ(events.size(), 2u);
  for (const EditEvent& e : events) {
    EXPECT_EQ(e.type, EditType::kSectionChange);
    EXPECT_FALSE(e.scored);
    EXPECT_EQ(e.section.key, "see also");
  }
}

TEST(ClassifyEvents, ProseAroundUntouchedLinkIsSentenceChange) {
  auto events = DiffTexts("Some old words near [[Anchor]] stay here.",
                          "Some new words near [[Anchor]] stay here.");
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].type, EditType::kSentenceChange);
  EXPECT_TRUE(events[0].scored);
}

TEST(ClassifyEvents, DisplayChangeIsElementChange) {
  auto events = DiffTexts("Some words near [[Anchor|old]] stay here.",
                          "Some words near [[Anchor|new]] stay here.");
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].type, EditType::kElementChange);
}

TEST(ClassifyEvents, InsertOnlyModificationIsDemoted) {
  auto events = DiffTexts("Some words near [[Anchor]] stay here.",
                          "Some extra words near [[Anchor]] stay here.");
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].type, EditType::kInsert);
  EXPECT_FALSE(events[0].scored);
}

TEST(ClassifyEvents, LinklessSentencesEmitNothing) {
  EXPECT_TRUE(DiffTexts("No links here at all.", "No links at all.").empty());
}

TEST(ClassifyEvents, DeletedSentenceAndRevertMetadata) {
  auto events = DiffTexts("Keep this. Drop [[A]] and [[B]] now.", "Keep this.",
                          RevertMap{{2, 7}});
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].type, EditType::kDelete);
  EXPECT_TRUE(events[0].scored);
  EXPECT_EQ(events[0].reverted_by, 7);
  EXPECT_EQ(events[0].prev_rev_id, 1);
  EXPECT_EQ(events[0].user, "Bob");
}

TEST(ClassifyEvents, IdenticalRevisionsEmitNothing) {
  EXPECT_TRUE(DiffTexts("Same [[A]] text.", "Same [[A]] text.").empty());
}

TEST(TokenDiff, ReconstructsRandomTexts) {
  std::mt19937_64 rng(99);
  const std::string pieces[] = {"a",   "b",  "cc", " ", "  ",
                                ".",   "[[", "]]", "|", "\xC3\xA9t\xC3\xA9",
                                "x_y", "\n", "12"};
  for (int round = 0; round < 500; ++round) {
    std::string a, b;
    for (int i = static_cast<int>(rng() % 30); i > 0; --i) {
      a += pieces[rng() % 13];
    }
    b = a;
    for (int e = static_cast<int>(rng() % 5); e > 0 && !b.empty(); --e) {
      size_t pos = rng() % b.size();
      if (rng() % 2) {
        b.erase(pos, 1 + rng() % 3);
      } else {
        b.insert(pos, pieces[rng() % 13]);
      }
    }
    auto runs = DiffTokens(a, b);
    EXPECT_EQ(ReconstructOld(runs), a);
    EXPECT_EQ(ReconstructNew(runs), b);
  }
}

TEST(TokenDiff, Tokenization) {
  auto tokens = Tokenize("Hi, [[x_y]]  \xC3\xA9t\xC3\xA9!");
  std::vector<std::string> got(tokens.begin(), tokens.end());
  EXPECT_EQ(got,
            (std::vector<std::string>{"Hi", ",", " ", "[", "[", "x_y", "]", "]",
                                      "  ", "\xC3\xA9t\xC3\xA9", "!"}));
}

TEST(TokenDiff, HasDeletionIffOldIsNotSubsequence) {
  std::mt19937_64 rng(5);
  const char* words[] = {"a", "b", "c", "[[", "]]", "d"};
  for (int round = 0; round < 300; ++round) {
    std::string a, b;
    for (int i = 0; i < 6; ++i) a += std::string(words[rng() % 6]) + " ";
    for (int i = 0; i < 6; ++i) b += std::string(words[rng() % 6]) + " ";
    bool has_delete = false;
    for (const DiffRun& r : DiffTokens(a, b)) {
      has_delete =
          has_delete || (r.op == DiffOp::kDelete &&
                         r.text.find_first_not_of(' ') != std::string::npos);
    }
    EXPECT_EQ(has_delete, !testing::IsSubsequence(testing::OracleTokens(a),
                                                  testing::OracleTokens(b)))
        << a << " | " << b;
  }
}

std::string Fingerprint(const std::vector<EditEvent>& events) {
  std::ostringstream out;
  for (const EditEvent& e : events) {
    out << e.rev_id << ' ' << e.prev_rev_id << ' ' << e.link << ' '
        << EditTypeName(e.type) << ' ' << e.scored << ' ' << e.section.key
        << '#' << e.section.ordinal << ' ' << e.sentence_pair->w << ' '
        << e.sentence_pair->old_text.value_or("-") << ' '
        << e.sentence_pair->new_text.value_or("-") << ' '
        << e.reverted_by.value_or(0) << '\n';
    for (const DiffRun& r : e.sentence_pair->token_diff) {
      out << DiffOpName(r.op) << ':' << r.text << '\n';
    }
  }
  return out.str();
}

TEST(ExtractEvents, InvariantsAndThreadIndependence) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    synth::Options options;
    options.seed = seed;
    options.revisions = 80;
    ArticleHistory h = synth::Generate(options).history;
    CleanChain chain = BuildChain(h, ChainOptions::FromConfig(Config{}));
    DiffOptions one;
    one.threads = 1;
    auto events = ExtractEvents(chain, one);
    for (const EditEvent& e : events) {
      const SentencePair& p = *e.sentence_pair;
      EXPECT_EQ(e.scored, IsScoredType(e.type));
      if (e.scored) EXPECT_TRUE(p.has_deletion);
      if (e.type != EditType::kSectionChange) {
        EXPECT_TRUE(std::binary_search(p.links_union.begin(),
                                       p.links_union.end(), e.link));
      }
      if (p.kind == PairKind::kModified) {
        EXPECT_EQ(ReconstructOld(p.token_diff), *p.old_text);
        EXPECT_EQ(ReconstructNew(p.token_diff), *p.new_text);
        EXPECT_NE(*p.old_text, *p.new_text);
      }
      if (p.kind == PairKind::kDeleted) {
        EXPECT_FALSE(p.new_text.has_value());
        EXPECT_TRUE(p.has_deletion);
      }
      if (p.kind == PairKind::kInserted) {
        EXPECT_FALSE(p.old_text.has_value());
        EXPECT_FALSE(p.has_deletion);
      }
    }
    std::string reference = Fingerprint(events);
    for (unsigned threads : {2u, 3u, 8u}) {
      DiffOptions options_n;
      options_n.threads = threads;
      EXPECT_EQ(Fingerprint(ExtractEvents(chain, options_n)), reference)
          << "threads " << threads;
    }
  }
}

TEST(ExtractEvents, SuppressedRevisionIsSkipped) {
  CleanChain chain;
  chain.revisions = {Rev(1, "A", "One [[X]] here.", 0), Rev(2, "B", "", 10),
                     Rev(3, "C", "One [[X]] there.", 20)};
  chain.revisions[1].suppressed = true;
  auto events = ExtractEvents(chain, DiffOptions{});
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].rev_id, 3);
  EXPECT_EQ(events[0].prev_rev_id, 1);
}

}  // namespace
}  // namespace wikidispute
