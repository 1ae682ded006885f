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

#ifndef WIKIDISPUTE_TOKEN_DIFF_H_
#define WIKIDISPUTE_TOKEN_DIFF_H_

#include <string>
#include <string_view>
#include <vector>

namespace wikidispute {

enum class DiffOp { kEqual, kDelete, kInsert };

const char* DiffOpName(DiffOp op);

struct DiffRun {
  DiffOp op = DiffOp::kEqual;
  std::string text;

  bool operator==(const DiffRun&) const = default;
};

// Splits text into whitespace runs, word runs (ASCII alphanumerics,
// underscore and any non-ASCII byte) and single punctuation bytes.
// Concatenating the tokens gives back text.
std::vector<std::string_view> Tokenize(std::string_view text);

// Token-level LCS diff. Within each changed region deletions come before
// insertions; adjacent runs with the same op are merged.
std::vector<DiffRun> DiffTokens(std::string_view old_text,
                                std::string_view new_text);

// Concatenation of equal+delete runs / equal+insert runs.
std::string ReconstructOld(const std::vector<DiffRun>& runs);
std::string ReconstructNew(const std::vector<DiffRun>& runs);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_TOKEN_DIFF_H_
