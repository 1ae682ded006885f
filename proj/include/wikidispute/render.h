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

#ifndef WIKIDISPUTE_RENDER_H_
#define WIKIDISPUTE_RENDER_H_

#include <array>
#include <json.hpp>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wikidispute {

struct BinShade {
  int bin;
  const char* color;  // CSS hex
  const char* name;
};

// Bin 5 (most controversial) is red, bin 1 pale blue.
const std::array<BinShade, 5>& BinPalette();
const char* BinColor(int bin);

struct AnnotatedArticle {
  std::string html;  // body fragment
  // canonical link -> element ids of its occurrences, in document order
  std::map<std::string, std::vector<std::string>> link_index;
};

// Minimal wikitext renderer: headings, paragraphs, lists, table cells and
// links. Templates, comments and <ref>s are dropped; images become
// grayscale placeholders. Links found in link_bins are wrapped in
//   <a class="wd-link wd-bin-N" data-link="..." data-bin="N" id="wd-occ-K">
// and every other internal link renders as muted text. detail_anchor maps
// a link to an in-page anchor for click-through (may be empty).
AnnotatedArticle RenderArticle(
    std::string_view wikitext, const std::map<std::string, int>& link_bins,
    const std::map<std::string, std::string>& detail_anchor = {});

// Self-contained HTML page (inline CSS, no external assets) for a
// serialized ArticleReport: legend, annotated article, ranking and one
// edit table per controversial link.
std::string RenderReportHtml(const nlohmann::ordered_json& report);

// Text content of an HTML fragment: tags removed, entities decoded.
std::string HtmlTextContent(std::string_view html);

std::string HtmlEscape(std::string_view text);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_RENDER_H_
