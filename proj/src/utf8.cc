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

#include "utf8.h"

namespace wikidispute::utf8 {

char32_t Decode(std::string_view text, size_t pos, size_t* len) {
  auto byte = [&](size_t i) { return static_cast<unsigned char>(text[i]); };
  unsigned char b0 = byte(pos);
  size_t need = b0 < 0x80           ? 1
                : (b0 >> 5) == 0x6  ? 2
                : (b0 >> 4) == 0xe  ? 3
                : (b0 >> 3) == 0x1e ? 4
                                    : 0;
  if (need == 0 || pos + need > text.size()) {
    *len = 1;
    return b0;
  }
  char32_t cp = need == 1   ? b0
                : need == 2 ? (b0 & 0x1f)
                : need == 3 ? (b0 & 0x0f)
                            : (b0 & 0x07);
  for (size_t i = 1; i < need; ++i) {
    unsigned char b = byte(pos + i);
    if ((b >> 6) != 0x2) {
      *len = 1;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3f);
  }
  *len = need;
  return cp;
}

void Append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

namespace {

// Latin Extended-A pairs where the uppercase form has the odd code point.
bool OddUpperLatinA(char32_t cp) {
  return (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17e);
}

bool LatinAPaired(char32_t cp) {
  return cp >= 0x100 && cp <= 0x17f && cp != 0x130 && cp != 0x131 &&
         cp != 0x138 && cp != 0x149 && cp != 0x17f;
}

}  // namespace

char32_t ToUpper(char32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  if (cp < 0x80) return cp;
  if (cp >= 0xe0 && cp <= 0xfe && cp != 0xf7) return cp - 0x20;
  if (cp == 0xff) return 0x178;
  if (LatinAPaired(cp)) {
    bool odd = cp & 1;
    if (OddUpperLatinA(cp)) return odd ? cp : cp - 1;
    return odd ? cp - 1 : cp;
  }
  if (cp >= 0x3b1 && cp <= 0x3c9) return cp == 0x3c2 ? 0x3a3 : cp - 0x20;
  if (cp >= 0x430 && cp <= 0x44f) return cp - 0x20;
  if (cp >= 0x450 && cp <= 0x45f) return cp - 0x50;
  return cp;
}

char32_t ToLower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0x80) return cp;
  if (cp >= 0xc0 && cp <= 0xde && cp != 0xd7) return cp + 0x20;
  if (cp == 0x178) return 0xff;
  if (LatinAPaired(cp)) {
    bool odd = cp & 1;
    if (OddUpperLatinA(cp)) return odd ? cp + 1 : cp;
    return odd ? cp : cp + 1;
  }
  if (cp >= 0x391 && cp <= 0x3a9 && cp != 0x3a2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42f) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40f) return cp + 0x50;
  return cp;
}

bool IsUpper(char32_t cp) { return ToLower(cp) != cp; }

std::string UpperFirst(std::string_view text) {
  if (text.empty()) return {};
  size_t len = 0;
  char32_t cp = Decode(text, 0, &len);
  std::string out;
  out.reserve(text.size() + 1);
  if (len == 1 && cp >= 0x80) {
    out.push_back(text[0]);  // stray byte, keep as is
  } else {
    Append(out, ToUpper(cp));
  }
  out.append(text.substr(len));
  return out;
}

std::string Lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t pos = 0; pos < text.size();) {
    size_t len = 0;
    char32_t cp = Decode(text, pos, &len);
    if (len == 1 && cp >= 0x80) {
      out.push_back(text[pos]);
    } else {
      Append(out, ToLower(cp));
    }
    pos += len;
  }
  return out;
}

}  // namespace wikidispute::utf8
