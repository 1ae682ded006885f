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

#include "wikidispute/token_diff.h"

#include <algorithm>
#include <cstdint>

namespace wikidispute {
namespace {

enum class CharClass { kSpace, kWord, kPunct };

CharClass Classify(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
      c == '\v') {
    return CharClass::kSpace;
  }
  if (std::isalnum(u) || c == '_' || u >= 0x80) return CharClass::kWord;
  return CharClass::kPunct;
}

// Above this many DP cells the changed middle is reported as one
// delete+insert instead of being aligned.
constexpr size_t kMaxTableCells = size_t{16} << 20;

void Push(std::vector<DiffRun>& runs, DiffOp op, std::string_view text) {
  if (text.empty()) return;
  if (!runs.empty() && runs.back().op == op) {
    runs.back().text.append(text);
  } else {
    runs.push_back({op, std::string(text)});
  }
}

}  // namespace

const char* DiffOpName(DiffOp op) {
  switch (op) {
    case DiffOp::kEqual:
      return "equal";
    case DiffOp::kDelete:
      return "delete";
    case DiffOp::kInsert:
      return "insert";
  }
  return "equal";
}

std::vector<std::string_view> Tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < text.size()) {
    CharClass cls = Classify(text[i]);
    size_t j = i + 1;
    if (cls != CharClass::kPunct) {
      while (j < text.size() && Classify(text[j]) == cls) ++j;
    }
    tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<DiffRun> DiffTokens(std::string_view old_text,
                                std::string_view new_text) {
  std::vector<std::string_view> a = Tokenize(old_text);
  std::vector<std::string_view> b = Tokenize(new_text);

  size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) {
    ++prefix;
  }
  size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }

  std::vector<DiffRun> runs;
  for (size_t i = 0; i < prefix; ++i) Push(runs, DiffOp::kEqual, a[i]);

  const size_t n = a.size() - prefix - suffix;
  const size_t m = b.size() - prefix - suffix;
  auto old_tok = [&](size_t i) { return a[prefix + i]; };
  auto new_tok = [&](size_t j) { return b[prefix + j]; };

  if (n > 0 && m > 0 && (n + 1) * (m + 1) <= kMaxTableCells) {
    // lcs[i][j] = LCS length of old[i..] and new[j..].
    const size_t width = m + 1;
    std::vector<uint32_t> lcs((n + 1) * width, 0);
    for (size_t i = n; i-- > 0;) {
      for (size_t j = m; j-- > 0;) {
        lcs[i * width + j] =
            old_tok(i) == new_tok(j)
                ? lcs[(i + 1) * width + j + 1] + 1
                : std::max(lcs[(i + 1) * width + j], lcs[i * width + j + 1]);
      }
    }
    // Walk forward, buffering each changed region so its deletions can be
    // emitted ahead of its insertions.
    std::string pending_delete, pending_insert;
    auto flush = [&] {
      Push(runs, DiffOp::kDelete, pending_delete);
      Push(runs, DiffOp::kInsert, pending_insert);
      pending_delete.clear();
      pending_insert.clear();
    };
    size_t i = 0, j = 0;
    while (i < n || j < m) {
      if (i < n && j < m && old_tok(i) == new_tok(j)) {
        flush();
        Push(runs, DiffOp::kEqual, old_tok(i));
        ++i;
        ++j;
      } else if (j == m || (i < n && lcs[(i + 1) * width + j] >=
                                         lcs[i * width + j + 1])) {
        pending_delete.append(old_tok(i++));
      } else {
        pending_insert.append(new_tok(j++));
      }
    }
    flush();
  } else {
    for (size_t i = 0; i < n; ++i) Push(runs, DiffOp::kDelete, old_tok(i));
    for (size_t j = 0; j < m; ++j) Push(runs, DiffOp::kInsert, new_tok(j));
  }

  for (size_t i = a.size() - suffix; i < a.size(); ++i) {
    Push(runs, DiffOp::kEqual, a[i]);
  }
  return runs;
}

std::string ReconstructOld(const std::vector<DiffRun>& runs) {
  std::string out;
  for (const DiffRun& run : runs) {
    if (run.op != DiffOp::kInsert) out += run.text;
  }
  return out;
}

std::string ReconstructNew(const std::vector<DiffRun>& runs) {
  std::string out;
  for (const DiffRun& run : runs) {
    if (run.op != DiffOp::kDelete) out += run.text;
  }
  return out;
}

}  // namespace wikidispute
