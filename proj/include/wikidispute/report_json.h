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

#ifndef WIKIDISPUTE_REPORT_JSON_H_
#define WIKIDISPUTE_REPORT_JSON_H_

#include <json.hpp>
#include <string>

#include "wikidispute/analysis.h"

namespace wikidispute {

// Field order is fixed so serialized reports are byte-stable. The schema
// is documented in docs/formats.md.
nlohmann::ordered_json ReportToJson(const ArticleReport& report);
nlohmann::ordered_json DetailRowToJson(const DetailRow& row);
nlohmann::ordered_json SeriesToJson(const ScoreSeries& series);

// Pretty-printed with a trailing newline.
std::string SerializeReport(const ArticleReport& report);

// "abstract", or "notes#1" for the second "notes" section.
std::string SectionLabel(const SectionId& section);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_REPORT_JSON_H_
