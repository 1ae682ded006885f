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

#include "wikidispute/fixtures.h"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "wikidispute/timeutil.h"

namespace wikidispute {
namespace {

std::string XmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

RawRevision MakeRevision(int64_t rev_id, int64_t parent_id,
                         std::string_view timestamp, std::string user,
                         std::string comment, std::string wikitext) {
  RawRevision rev;
  rev.rev_id = rev_id;
  rev.parent_id = parent_id;
  rev.timestamp = *ParseTimestamp(timestamp);
  rev.user = std::move(user);
  rev.comment = std::move(comment);
  rev.wikitext = std::move(wikitext);
  FinalizeRevision(rev);
  return rev;
}

}  // namespace

void WriteDumpXml(std::ostream& out, const ArticleHistory& history) {
  out << "<mediawiki xmlns=\"http://www.mediawiki.org/xml/export-0.10/\" "
         "version=\"0.10\" xml:lang=\""
      << XmlEscape(history.language_code) << "\">\n";
  out << "  <page>\n    <title>" << XmlEscape(history.article_title)
      << "</title>\n    <ns>0</ns>\n    <id>1</id>\n";
  for (const RawRevision& rev : history.revisions) {
    out << "    <revision>\n      <id>" << rev.rev_id << "</id>\n";
    if (rev.parent_id != 0) {
      out << "      <parentid>" << rev.parent_id << "</parentid>\n";
    }
    out << "      <timestamp>" << FormatTimestamp(rev.timestamp)
        << "</timestamp>\n      <contributor>\n";
    if (rev.is_ip_user) {
      out << "        <ip>" << XmlEscape(rev.user) << "</ip>\n";
    } else {
      out << "        <username>" << XmlEscape(rev.user) << "</username>\n";
    }
    out << "      </contributor>\n";
    if (!rev.comment.empty()) {
      out << "      <comment>" << XmlEscape(rev.comment) << "</comment>\n";
    }
    if (rev.suppressed) {
      out << "      <text deleted=\"deleted\" />\n";
    } else {
      out << "      <text bytes=\"" << rev.wikitext.size()
          << "\" xml:space=\"preserve\">" << XmlEscape(rev.wikitext)
          << "</text>\n";
    }
    out << "      <sha1>" << rev.text_hash << "</sha1>\n    </revision>\n";
  }
  out << "  </page>\n</mediawiki>\n";
}

std::string DumpXml(const ArticleHistory& history) {
  std::ostringstream out;
  WriteDumpXml(out, history);
  return out.str();
}

ArticleHistory ConsensusEditsFixture() {
  constexpr std::string_view kIntro =
      "The [[Intergovernmental Panel on Climate Change]] (IPCC) publishes "
      "assessment reports on the state of the science. ";
  constexpr std::string_view kTail =
      "\n\n== Attribution ==\nThe reports attribute most of the observed "
      "warming to human activity.\n";
  const std::string list_link =
      "[[List of scientists opposing the mainstream scientific assessment "
      "of global warming|";
  ArticleHistory h;
  h.article_title = "Global warming";
  h.language_code = "en";
  h.source = HistorySource::kFixture;
  h.revisions.push_back(MakeRevision(
      169500000, 0, "2007-11-05T18:02:11Z", "EditorA", "copyedit lead",
      std::string(kIntro) + "A few " + list_link +
          "climate scientists]] disagree with some of the main conclusions "
          "of the IPCC." +
          std::string(kTail)));
  h.revisions.push_back(MakeRevision(
      169685102, 169500000, "2007-11-06T22:22:50Z", "EditorB",
      "try \"small minority\" as suggested on talk",
      std::string(kIntro) + "A small minority of " + list_link +
          "individual climate scientists]] disagree with some of the main "
          "conclusions of the IPCC." +
          std::string(kTail)));
  h.revisions.push_back(MakeRevision(
      169761113, 169685102, "2007-11-07T03:41:47Z", "EditorC",
      "not a minority of climate scientists; mostly non-climate scientists",
      std::string(kIntro) + "While there are " + list_link +
          "individual scientists]] who might publicly disagree with some of "
          "the main conclusions of the IPCC, these conclusions do represent "
          "the general [[scientific consensus]], especially among active "
          "climate scientists and researchers." +
          std::string(kTail)));
  h.fetched_at = h.revisions.back().timestamp;
  return h;
}

namespace synth {
namespace {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  // Uniform-enough in [0, n); modulo keeps results identical across
  // standard library implementations.
  int Below(int n) {
    return static_cast<int>(engine_() % static_cast<uint64_t>(n));
  }
  int Between(int lo, int hi) { return lo + Below(hi - lo + 1); }
  bool Chance(int percent) { return Below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

constexpr const char* kOnsets[] = {"b",  "d",  "f",  "g",  "k",  "l", "m",
                                   "n",  "p",  "r",  "s",  "t",  "v", "z",
                                   "br", "tr", "st", "pl", "gr", "sk"};
constexpr const char* kVowels[] = {"a", "e", "i", "o", "u", "ai", "ou"};
constexpr const char* kCodas[] = {"", "n", "r", "s", "l", "m", "t"};

// Pseudo-words of two or three syllables, so none collide with the
// abbreviations the sentence splitter protects.
std::string PseudoWord(int index) {
  std::string word;
  int syllables = 2 + index % 2;
  int v = index;
  for (int s = 0; s < syllables; ++s) {
    word += kOnsets[v % 20];
    v /= 20;
    word += kVowels[(v + s) % 7];
    word += kCodas[(v + 3 * s) % 7];
    v = v * 7 + 3;
  }
  return word;
}

std::vector<std::string> Vocabulary() {
  std::vector<std::string> words;
  for (int i = 0; words.size() < 600; ++i) {
    std::string w = PseudoWord(i * 37 + 11);
    if (std::find(words.begin(), words.end(), w) == words.end()) {
      words.push_back(std::move(w));
    }
  }
  return words;
}

class Generator {
 public:
  explicit Generator(const Options& options)
      : options_(options), rng_(options.seed), vocab_(Vocabulary()) {
    for (int i = 0; i < options_.links; ++i) {
      std::string name = PseudoWord(5000 + i * 13);
      name[0] = static_cast<char>(name[0] - 'a' + 'A');
      out_.link_pool.push_back(name + "ium");
    }
    for (int i = 0; i < std::max(2, options_.users); ++i) {
      users_.push_back("Editor" + std::to_string(i + 1));
    }
  }

  History Run() {
    out_.history.article_title =
        "Synthetic article " + std::to_string(options_.seed);
    out_.history.language_code = "en";
    out_.history.source = HistorySource::kFixture;
    clock_ = *ParseTimestamp("2007-01-01T00:00:00Z");

    State state;
    state.sections.push_back(Section{});
    for (int i = 0; i < 4; ++i) {
      state.sections[0].sentences.push_back(NewSentence());
    }
    for (int i = 0; i < 2; ++i) state.sections.push_back(NewSection());
    Commit(state, PickUser(), "create article", 0);

    while (static_cast<int>(out_.history.revisions.size()) <
           options_.revisions) {
      int roll = rng_.Below(100);
      int left =
          options_.revisions - static_cast<int>(out_.history.revisions.size());
      if (options_.vandalism && roll < 6 && left >= 2) {
        Vandalize();
      } else if (options_.reverts && roll < 16 && history_.size() >= 3) {
        RevertEarlier();
      } else {
        State next = history_.back();
        int edits = rng_.Chance(70) ? 1 : 2;
        for (int e = 0; e < edits; ++e) Mutate(next);
        if (next == history_.back()) Mutate(next);
        std::string user = rng_.Chance(12) ? last_user_ : PickUser();
        Commit(next, user, "edit", rng_.Between(600, 200000));
      }
    }
    out_.history.fetched_at = out_.history.revisions.back().timestamp;
    return std::move(out_);
  }

 private:
  std::string PickUser() {
    if (rng_.Chance(8)) {
      return "192.0.2." + std::to_string(rng_.Between(1, 254));
    }
    return users_[rng_.Below(static_cast<int>(users_.size()))];
  }

  std::string OtherUser(const std::string& not_this) {
    std::string user;
    do {
      user = users_[rng_.Below(static_cast<int>(users_.size()))];
    } while (user == not_this);
    return user;
  }

  Word PlainWord() {
    return Word{vocab_[rng_.Below(static_cast<int>(vocab_.size()))], ""};
  }

  Word LinkWord() {
    if (out_.link_pool.empty()) return PlainWord();
    const std::string& target =
        out_.link_pool[rng_.Below(static_cast<int>(out_.link_pool.size()))];
    std::string lower = target;
    lower[0] = static_cast<char>(lower[0] - 'A' + 'a');
    switch (rng_.Below(4)) {
      case 0:
        return Word{"[[" + target + "]]", target};
      case 1:
        return Word{"[[" + lower + "]]", target};
      case 2:
        return Word{"[[" + target + "|" + lower + "]]", target};
      default:
        return Word{"[[" + target + "|" + PlainWord().text + " " + lower + "]]",
                    target};
    }
  }

  Sentence NewSentence() {
    Sentence s;
    s.id = next_sentence_id_++;
    s.words.push_back(Word{"Q" + std::to_string(s.id), ""});
    int n = rng_.Between(11, 16);
    for (int i = 0; i < n; ++i) s.words.push_back(PlainWord());
    int links = rng_.Below(3);
    for (int i = 0; i < links; ++i) {
      s.words.insert(s.words.begin() + 1 + rng_.Below(n), LinkWord());
    }
    return s;
  }

  Section NewSection() {
    Section section;
    section.heading = "Part " + std::to_string(next_section_id_++);
    int n = rng_.Between(2, 4);
    for (int i = 0; i < n; ++i) section.sentences.push_back(NewSentence());
    return section;
  }

  void ModifySentence(Sentence& s) {
    // Position 0 holds the id word and never changes.
    int n = static_cast<int>(s.words.size());
    int pos = 1 + rng_.Below(n - 1);
    switch (rng_.Below(6)) {
      case 0:
        s.words[pos] = PlainWord();
        break;
      case 1:
        if (n > 8) s.words.erase(s.words.begin() + pos);
        break;
      case 2:
        s.words.insert(s.words.begin() + pos, PlainWord());
        break;
      case 3:
        s.words.insert(s.words.begin() + pos, LinkWord());
        break;
      case 4:
      case 5: {
        std::vector<int> link_positions;
        for (int i = 1; i < n; ++i) {
          if (!s.words[i].link.empty()) link_positions.push_back(i);
        }
        if (link_positions.empty()) {
          s.words[pos] = LinkWord();
        } else {
          int at = link_positions[rng_.Below(
              static_cast<int>(link_positions.size()))];
          if (rng_.Chance(50)) {
            s.words.erase(s.words.begin() + at);
          } else {
            s.words[at] = LinkWord();
          }
        }
        break;
      }
    }
  }

  void Mutate(State& state) {
    int roll = rng_.Below(100);
    Section& section =
        state.sections[rng_.Below(static_cast<int>(state.sections.size()))];
    int count = static_cast<int>(section.sentences.size());
    if (roll < 62 && count > 0) {
      ModifySentence(section.sentences[rng_.Below(count)]);
    } else if (roll < 77 || count == 0) {
      section.sentences.insert(
          section.sentences.begin() + rng_.Below(count + 1), NewSentence());
    } else if (roll < 90 && count > 1) {
      section.sentences.erase(section.sentences.begin() + rng_.Below(count));
    } else if (roll < 95 && state.sections.size() < 6) {
      state.sections.insert(
          state.sections.begin() + 1 +
              rng_.Below(static_cast<int>(state.sections.size())),
          NewSection());
    } else if (state.sections.size() > 2) {
      state.sections.erase(
          state.sections.begin() + 1 +
          rng_.Below(static_cast<int>(state.sections.size()) - 1));
    } else if (count > 0) {
      ModifySentence(section.sentences[rng_.Below(count)]);
    }
  }

  // Restores the state from two or three revisions back.
  void RevertEarlier() {
    int back = rng_.Between(2, std::min<int>(3, history_.size() - 1));
    size_t index = history_.size() - 1 - back;
    State target = history_[index];
    if (junk_[index] || target == history_.back()) {
      State next = history_.back();
      Mutate(next);
      Commit(next, PickUser(), "edit", rng_.Between(600, 200000));
      return;
    }
    Commit(target, OtherUser(last_user_), "Undid revision",
           rng_.Between(600, 200000));
  }

  // An IP or named vandal edit followed by a revert that the filter rules
  // recognise.
  void Vandalize() {
    State before = history_.back();
    State junk;
    junk.sections.push_back(Section{});
    std::string vandal;
    std::string comment;
    int kind = rng_.Below(4);
    if (kind == 3) {
      vandal = users_[rng_.Below(static_cast<int>(users_.size()))] + "x";
      comment = "Blanked the page";
    } else {
      vandal = "198.51.100." + std::to_string(rng_.Between(1, 254));
      Sentence s;
      s.id = next_sentence_id_++;
      s.words = {Word{"Q" + std::to_string(s.id), ""}, Word{"lol", ""},
                 Word{"lol", ""}};
      junk.sections[0].sentences.push_back(s);
    }
    Commit(junk, vandal, comment, rng_.Between(600, 200000));
    junk_.back() = true;

    std::string reverter;
    std::string revert_comment = "Undid revision";
    int delay = rng_.Between(10, 55);
    switch (kind) {
      case 0:
        reverter = "ClueBot NG";
        revert_comment = "Reverting possible bad edit";
        delay = rng_.Between(10, 3000);
        break;
      case 1:
        reverter = OtherUser(vandal);
        revert_comment = "rv vandalism";
        delay = rng_.Between(10, 3000);
        break;
      default:
        reverter = OtherUser(vandal);
        break;
    }
    Commit(before, reverter, revert_comment, delay);
    // The next editor must differ so the revert survives collapsing.
    avoid_user_ = reverter;
  }

  void Commit(const State& state, std::string user, std::string comment,
              int advance_seconds) {
    if (!avoid_user_.empty()) {
      if (user == avoid_user_) user = OtherUser(avoid_user_);
      avoid_user_.clear();
    }
    clock_ += std::chrono::seconds(advance_seconds);
    RawRevision rev;
    rev.rev_id = next_rev_id_;
    next_rev_id_ += rng_.Between(1, 5);
    rev.parent_id = out_.history.revisions.empty()
                        ? 0
                        : out_.history.revisions.back().rev_id;
    rev.timestamp = clock_;
    rev.user = user;
    rev.comment = std::move(comment);
    rev.wikitext = state.Render();
    FinalizeRevision(rev);
    out_.states[rev.rev_id] = state;
    out_.history.revisions.push_back(std::move(rev));
    history_.push_back(state);
    junk_.push_back(false);
    last_user_ = std::move(user);
  }

  Options options_;
  Rng rng_;
  std::vector<std::string> vocab_;
  std::vector<std::string> users_;
  History out_;
  std::vector<State> history_;
  std::vector<bool> junk_;
  Timestamp clock_{};
  std::string last_user_;
  std::string avoid_user_;
  int64_t next_rev_id_ = 100000;
  int next_sentence_id_ = 1;
  int next_section_id_ = 1;
};

}  // namespace

std::string Sentence::Text() const {
  std::string text;
  for (const Word& w : words) {
    if (!text.empty()) text += ' ';
    text += w.text;
  }
  return text + ".";
}

std::string State::Render() const {
  std::string out;
  for (const Section& section : sections) {
    if (!section.heading.empty()) {
      if (!out.empty()) out += "\n\n";
      out += "== " + section.heading + " ==\n";
    }
    std::string paragraph;
    for (const Sentence& s : section.sentences) {
      if (!paragraph.empty()) paragraph += ' ';
      paragraph += s.Text();
    }
    out += paragraph;
  }
  return out.empty() ? out : out + "\n";
}

History Generate(const Options& options) { return Generator(options).Run(); }

}  // namespace synth
}  // namespace wikidispute
