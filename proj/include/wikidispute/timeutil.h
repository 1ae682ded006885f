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

#ifndef WIKIDISPUTE_TIMEUTIL_H_
#define WIKIDISPUTE_TIMEUTIL_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace wikidispute {

// UTC instant with second precision.
using Timestamp = std::chrono::sys_seconds;

// Parses "YYYY-MM-DDTHH:MM:SSZ" (the MediaWiki API and dump format).
// Returns nullopt on anything else.
std::optional<Timestamp> ParseTimestamp(std::string_view text);

// "2007-11-06T22:22:50Z"
std::string FormatTimestamp(Timestamp ts);

// "2007-11-06 22:22:50", as shown in edit tables.
std::string FormatDisplayTime(Timestamp ts);

// Start of the UTC calendar month / ISO week (Monday) containing ts.
Timestamp MonthStart(Timestamp ts);
Timestamp WeekStart(Timestamp ts);

// Current time, or SOURCE_DATE_EPOCH when that variable is set so that
// generated files can be reproduced byte for byte.
Timestamp NowOrSourceDateEpoch();

}  // namespace wikidispute

#endif  // WIKIDISPUTE_TIMEUTIL_H_
