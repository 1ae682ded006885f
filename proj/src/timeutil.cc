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

#include "wikidispute/timeutil.h"

#include <cstdio>
#include <cstdlib>

namespace wikidispute {

using namespace std::chrono;

std::optional<Timestamp> ParseTimestamp(std::string_view text) {
  if (text.size() != 20 || text[4] != '-' || text[7] != '-' ||
      text[10] != 'T' || text[13] != ':' || text[16] != ':' ||
      text[19] != 'Z') {
    return std::nullopt;
  }
  auto field = [&](size_t pos, size_t len, int* out) {
    int value = 0;
    for (size_t i = pos; i < pos + len; ++i) {
      if (text[i] < '0' || text[i] > '9') return false;
      value = value * 10 + (text[i] - '0');
    }
    *out = value;
    return true;
  };
  int y, mo, d, h, mi, s;
  if (!field(0, 4, &y) || !field(5, 2, &mo) || !field(8, 2, &d) ||
      !field(11, 2, &h) || !field(14, 2, &mi) || !field(17, 2, &s)) {
    return std::nullopt;
  }
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60) return std::nullopt;
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
}

namespace {

std::string Format(Timestamp ts, const char* pattern) {
  auto day_point = floor<days>(ts);
  year_month_day ymd{day_point};
  hh_mm_ss hms{ts - day_point};
  char buf[32];
  std::snprintf(buf, sizeof(buf), pattern, static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

}  // namespace

std::string FormatTimestamp(Timestamp ts) {
  return Format(ts, "%04d-%02u-%02uT%02d:%02d:%02dZ");
}

std::string FormatDisplayTime(Timestamp ts) {
  return Format(ts, "%04d-%02u-%02u %02d:%02d:%02d");
}

Timestamp MonthStart(Timestamp ts) {
  year_month_day ymd{floor<days>(ts)};
  return sys_days{ymd.year() / ymd.month() / 1};
}

Timestamp WeekStart(Timestamp ts) {
  sys_days day_point = floor<days>(ts);
  weekday wd{day_point};
  // Monday-based offset.
  unsigned back = (wd.c_encoding() + 6) % 7;
  return day_point - days{back};
}

Timestamp NowOrSourceDateEpoch() {
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long value = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') return Timestamp{seconds{value}};
  }
  return floor<seconds>(system_clock::now());
}

}  // namespace wikidispute
