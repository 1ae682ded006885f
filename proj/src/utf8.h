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

// Minimal UTF-8 case mapping for the scripts wiki titles commonly start
// with: ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic. Code points
// outside those blocks map to themselves.

#ifndef WIKIDISPUTE_SRC_UTF8_H_
#define WIKIDISPUTE_SRC_UTF8_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace wikidispute::utf8 {

// Decodes the code point starting at text[pos]; *len receives its byte
// length. Invalid sequences decode as the single byte value.
char32_t Decode(std::string_view text, size_t pos, size_t* len);

void Append(std::string& out, char32_t cp);

char32_t ToUpper(char32_t cp);
char32_t ToLower(char32_t cp);

bool IsUpper(char32_t cp);

std::string UpperFirst(std::string_view text);
std::string Lower(std::string_view text);

}  // namespace wikidispute::utf8

#endif  // WIKIDISPUTE_SRC_UTF8_H_
