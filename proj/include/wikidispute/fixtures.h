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

#ifndef WIKIDISPUTE_FIXTURES_H_
#define WIKIDISPUTE_FIXTURES_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wikidispute/ingest.h"

namespace wikidispute {

// Writes a history as a MediaWiki XML export that StreamDump reads back
// field for field.
void WriteDumpXml(std::ostream& out, const ArticleHistory& history);
std::string DumpXml(const ArticleHistory& history);

// Three revisions of an article lead: a base text, an edit reshaping one
// sentence around a single link, and an edit rewriting that sentence so it
// holds two links. Scores 3/2 and 1/2.
ArticleHistory ConsensusEditsFixture();

namespace synth {

// A word of a synthetic sentence. Link words carry their canonical target.
struct Word {
  std::string text;
  std::string link;  // canonical target, empty for plain words

  bool operator==(const Word&) const = default;
};

struct Sentence {
  int id = 0;
  std::vector<Word> words;  // the rendered text is words joined by ' ' + "."

  std::string Text() const;
  bool operator==(const Sentence&) const = default;
};

struct Section {
  std::string heading;  // empty for the lead
  std::vector<Sentence> sentences;

  bool operator==(const Section&) const = default;
};

// Structured article state; sections[0] is the lead.
struct State {
  std::vector<Section> sections;

  std::string Render() const;
  bool operator==(const State&) const = default;
};

struct Options {
  uint64_t seed = 1;
  int revisions = 50;
  int links = 10;  // size of the link pool
  int users = 6;
  bool vandalism = true;  // inject qualifying vandalism/revert pairs
  bool reverts = true;    // identity reverts by regular editors
};

struct History {
  ArticleHistory history;
  std::map<int64_t, State> states;  // by rev_id
  std::vector<std::string> link_pool;
};

// Deterministic for a given Options on every platform (no std
// distributions). Sentences carry unique id words and are drawn from a
// large vocabulary so distinct sentences barely overlap.
History Generate(const Options& options);

}  // namespace synth
}  // namespace wikidispute

#endif  // WIKIDISPUTE_FIXTURES_H_
