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

#include "wikidispute/render.h"

#include <sstream>

#include "wikidispute/wikitext.h"

namespace wikidispute {
namespace {

using nlohmann::ordered_json;

constexpr std::array<BinShade, 5> kPalette = {{
    {1, "#deebf7", "pale blue"},
    {2, "#9ecae1", "light blue"},
    {3, "#fdcc8a", "light orange"},
    {4, "#fc8d59", "orange"},
    {5, "#d7301f", "red"},
}};

// Drops templates, comments and references from one section body.
std::string StripNonProse(std::string_view body) {
  std::string masked = MaskTemplates(body);
  std::string out;
  out.reserve(body.size());
  size_t i = 0;
  while (i < body.size()) {
    std::string_view rest(masked.data() + i, masked.size() - i);
    if (rest.starts_with("{{")) {
      size_t close = rest.find("}}", 2);
      if (close != std::string_view::npos) {
        i += close + 2;
        continue;
      }
    } else if (rest.starts_with("<!--")) {
      size_t close = rest.find("-->", 4);
      if (close != std::string_view::npos) {
        i += close + 3;
        continue;
      }
    } else if (rest.starts_with("<ref")) {
      size_t gt = rest.find('>');
      if (gt != std::string_view::npos && rest[gt - 1] == '/') {
        i += gt + 1;
        continue;
      }
      size_t close = rest.find("</ref>");
      if (gt != std::string_view::npos && close != std::string_view::npos) {
        i += close + 6;
        continue;
      }
    }
    out.push_back(body[i++]);
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

class Renderer {
 public:
  Renderer(const std::map<std::string, int>& bins,
           const std::map<std::string, std::string>& anchors)
      : bins_(bins), anchors_(anchors) {}

  AnnotatedArticle Run(std::string_view wikitext) {
    for (const Section& section : SplitSections(wikitext)) {
      if (section.level > 0) {
        int level = std::min(section.level, 6);
        out_ << "<h" << level << ">" << Inline(section.heading, false) << "</h"
             << level << ">\n";
      }
      Blocks(StripNonProse(section.body));
    }
    AnnotatedArticle article;
    article.html = out_.str();
    article.link_index = std::move(index_);
    return article;
  }

 private:
  void Blocks(std::string_view body) {
    std::string paragraph;
    char list = 0;
    auto close_paragraph = [&] {
      std::string_view text = Trim(paragraph);
      if (!text.empty()) out_ << "<p>" << Inline(text, true) << "</p>\n";
      paragraph.clear();
    };
    auto close_list = [&] {
      if (list) out_ << (list == '#' ? "</ol>\n" : "</ul>\n");
      list = 0;
    };
    size_t start = 0;
    while (start <= body.size()) {
      size_t end = body.find('\n', start);
      if (end == std::string_view::npos) end = body.size();
      std::string_view line = Trim(body.substr(start, end - start));
      start = end + 1;
      if (line.empty()) {
        close_paragraph();
        close_list();
        continue;
      }
      char c = line.front();
      if (c == '*' || c == '#') {
        close_paragraph();
        if (list != c) {
          close_list();
          list = c;
          out_ << (c == '#' ? "<ol>\n" : "<ul>\n");
        }
        size_t depth = line.find_first_not_of("*#:;");
        std::string_view item = Trim(
            line.substr(depth == std::string_view::npos ? line.size() : depth));
        out_ << "<li>" << Inline(item, true) << "</li>\n";
        continue;
      }
      close_list();
      if (line.starts_with("{|") || line.starts_with("|}") ||
          line.starts_with("|-") || line.starts_with("|+")) {
        close_paragraph();
        continue;
      }
      if (c == '|' || c == '!') {
        close_paragraph();
        std::string_view cells = line.substr(1);
        const char* sep = c == '|' ? "||" : "!!";
        size_t pos = 0;
        while (pos <= cells.size()) {
          size_t next = cells.find(sep, pos);
          if (next == std::string_view::npos) next = cells.size();
          std::string_view cell = cells.substr(pos, next - pos);
          // "attr=value | text" cells keep the text part.
          size_t bar = cell.find('|');
          if (bar != std::string_view::npos &&
              cell.substr(0, bar).find("[[") == std::string_view::npos) {
            cell = cell.substr(bar + 1);
          }
          cell = Trim(cell);
          if (!cell.empty()) {
            out_ << "<p class=\"wd-cell\">" << Inline(cell, true) << "</p>\n";
          }
          pos = next + 2;
        }
        continue;
      }
      if (c == ':' || c == ';') {
        close_paragraph();
        size_t depth = line.find_first_not_of(":;");
        std::string_view text = Trim(
            line.substr(depth == std::string_view::npos ? line.size() : depth));
        if (!text.empty()) {
          out_ << "<p class=\"wd-indent\">" << Inline(text, true) << "</p>\n";
        }
        continue;
      }
      if (line.starts_with("----")) {
        close_paragraph();
        out_ << "<hr>\n";
        continue;
      }
      if (!paragraph.empty()) paragraph.push_back(' ');
      paragraph.append(line);
    }
    close_paragraph();
    close_list();
  }

  std::string Inline(std::string_view text, bool with_links) {
    std::string html;
    bool bold = false, italic = false;
    size_t i = 0;
    while (i < text.size()) {
      std::string_view rest = text.substr(i);
      if (rest.starts_with("[[")) {
        size_t close = MatchingClose(text, i);
        if (close != std::string_view::npos) {
          html += Link(text.substr(i + 2, close - i - 2), with_links);
          i = close + 2;
          continue;
        }
      }
      if (rest.starts_with("[http://") || rest.starts_with("[https://") ||
          rest.starts_with("[//")) {
        size_t close = rest.find(']');
        if (close != std::string_view::npos) {
          std::string_view inner = rest.substr(1, close - 1);
          size_t space = inner.find(' ');
          if (space != std::string_view::npos) {
            html += "<span class=\"wd-ext\">" +
                    HtmlEscape(Trim(inner.substr(space + 1))) + "</span>";
          }
          i += close + 1;
          continue;
        }
      }
      if (rest.starts_with("'''''")) {
        html += bold ? "</b>" : "<b>";
        html += italic ? "</i>" : "<i>";
        bold = !bold;
        italic = !italic;
        i += 5;
      } else if (rest.starts_with("'''")) {
        html += bold ? "</b>" : "<b>";
        bold = !bold;
        i += 3;
      } else if (rest.starts_with("''")) {
        html += italic ? "</i>" : "<i>";
        italic = !italic;
        i += 2;
      } else {
        html += HtmlEscape(text.substr(i, 1));
        ++i;
      }
    }
    if (italic) html += "</i>";
    if (bold) html += "</b>";
    return html;
  }

  static size_t MatchingClose(std::string_view text, size_t open) {
    int depth = 0;
    for (size_t j = open; j + 1 < text.size();) {
      if (text[j] == '[' && text[j + 1] == '[') {
        ++depth;
        j += 2;
      } else if (text[j] == ']' && text[j + 1] == ']') {
        if (--depth == 0) return j;
        j += 2;
      } else {
        ++j;
      }
    }
    return std::string_view::npos;
  }

  std::string Link(std::string_view inner, bool with_links) {
    size_t pipe = inner.find('|');
    std::string_view raw_target = inner.substr(0, pipe);
    if (IsNamespacedTarget(raw_target)) {
      std::string_view t = Trim(raw_target);
      if (!t.empty() && t.front() == ':') t.remove_prefix(1);
      size_t colon = t.find(':');
      std::string prefix(Trim(t.substr(0, colon)));
      for (char& ch : prefix) ch = static_cast<char>(std::tolower(ch));
      if (prefix == "file" || prefix == "image") {
        std::string name(Trim(t.substr(colon + 1)));
        return "<span class=\"wd-image wd-grayscale\" data-file=\"" +
               HtmlEscape(name) + "\">[image: " + HtmlEscape(name) + "]</span>";
      }
      return {};
    }
    std::string_view target = Trim(raw_target);
    if (!target.empty() && target.front() == ':') target.remove_prefix(1);
    std::string canonical =
        CanonicalizeTarget(target.substr(0, target.find('#')));
    std::string_view display = Trim(
        pipe == std::string_view::npos ? raw_target : inner.substr(pipe + 1));
    std::string shown = Inline(display, false);
    if (!with_links || canonical.empty()) return shown;
    auto it = bins_.find(canonical);
    if (it == bins_.end()) {
      return "<span class=\"wd-plain\">" + shown + "</span>";
    }
    std::string id = "wd-occ-" + std::to_string(++occurrences_);
    index_[canonical].push_back(id);
    std::string html = "<a class=\"wd-link wd-bin-" +
                       std::to_string(it->second) + "\" data-link=\"" +
                       HtmlEscape(canonical) + "\" data-bin=\"" +
                       std::to_string(it->second) + "\" id=\"" + id + "\"";
    if (auto a = anchors_.find(canonical); a != anchors_.end()) {
      html += " href=\"#" + HtmlEscape(a->second) + "\"";
    }
    return html + ">" + shown + "</a>";
  }

  const std::map<std::string, int>& bins_;
  const std::map<std::string, std::string>& anchors_;
  std::ostringstream out_;
  std::map<std::string, std::vector<std::string>> index_;
  int occurrences_ = 0;
};

std::string DiffHtml(const ordered_json& diff) {
  std::string html;
  for (const ordered_json& run : diff) {
    std::string op = run.value("op", "equal");
    std::string text = HtmlEscape(run.value("text", ""));
    if (op == "delete") {
      html += "<del>" + text + "</del>";
    } else if (op == "insert") {
      html += "<ins>" + text + "</ins>";
    } else {
      html += text;
    }
  }
  return html;
}

std::string Plural(int n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

}  // namespace

const std::array<BinShade, 5>& BinPalette() { return kPalette; }

const char* BinColor(int bin) {
  if (bin < 1 || bin > 5) return kPalette[0].color;
  return kPalette[static_cast<size_t>(bin - 1)].color;
}

std::string HtmlEscape(std::string_view text) {
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
      case '\'':
        out += "&#39;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string HtmlTextContent(std::string_view html) {
  std::string text;
  for (size_t i = 0; i < html.size();) {
    if (html[i] == '<') {
      size_t gt = html.find('>', i);
      i = gt == std::string_view::npos ? html.size() : gt + 1;
      continue;
    }
    if (html[i] == '&') {
      static constexpr std::pair<std::string_view, char> kEntities[] = {
          {"&amp;", '&'},
          {"&lt;", '<'},
          {"&gt;", '>'},
          {"&quot;", '"'},
          {"&#39;", '\''}};
      bool matched = false;
      for (auto [entity, ch] : kEntities) {
        if (html.substr(i).starts_with(entity)) {
          text.push_back(ch);
          i += entity.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    text.push_back(html[i++]);
  }
  return text;
}

AnnotatedArticle RenderArticle(
    std::string_view wikitext, const std::map<std::string, int>& link_bins,
    const std::map<std::string, std::string>& detail_anchor) {
  return Renderer(link_bins, detail_anchor).Run(wikitext);
}

std::string RenderReportHtml(const ordered_json& report) {
  std::map<std::string, int> bins;
  std::map<std::string, std::string> anchors;
  const ordered_json& links = report.at("links");
  for (size_t i = 0; i < links.size(); ++i) {
    std::string link = links[i].at("link").get<std::string>();
    bins[link] = links[i].at("bin").get<int>();
    anchors[link] = "detail-" + std::to_string(i + 1);
  }
  const std::string title = report.at("article_title").get<std::string>();
  AnnotatedArticle article = RenderArticle(
      report.at("latest_revision").at("wikitext").get<std::string>(), bins,
      anchors);

  std::ostringstream html;
  html << "<!DOCTYPE html>\n<html lang=\""
       << HtmlEscape(report.value("language_code", "en")) << "\">\n<head>\n"
       << "<meta charset=\"utf-8\">\n<title>" << HtmlEscape(title)
       << " - controversy layer</title>\n<style>\n"
       << "body{font-family:Georgia,serif;max-width:60em;margin:2em auto;"
          "color:#222;line-height:1.5}\n"
       << "article{color:#666}\n"
       << ".wd-plain{color:#777}\n"
       << ".wd-link{color:#111;text-decoration:none;padding:0 .15em;"
          "border-radius:2px;cursor:pointer}\n";
  for (const BinShade& shade : BinPalette()) {
    html << ".wd-bin-" << shade.bin << "{background:" << shade.color << "}\n";
  }
  html << ".wd-image{display:inline-block;filter:grayscale(100%);"
          "background:#ddd;color:#555;font-size:.85em;padding:.2em .4em}\n"
       << ".wd-grayscale{filter:grayscale(100%)}\n"
       << ".legend span{display:inline-block;padding:.1em "
          ".6em;margin-right:.3em}\n"
       << "table{border-collapse:collapse;font-size:.85em;width:100%}\n"
       << "td,th{border:1px solid #ccc;padding:.25em .4em;vertical-align:top;"
          "text-align:left}\n"
       << "del{background:#f4b6b6;color:#900}\nins{background:#bdf0bd;"
          "color:#060;text-decoration:none}\n"
       << "</style>\n</head>\n<body>\n";
  html << "<h1>" << HtmlEscape(title) << "</h1>\n";
  html << "<p class=\"legend\">Controversy: ";
  for (auto it = BinPalette().rbegin(); it != BinPalette().rend(); ++it) {
    html << "<span class=\"wd-bin-" << it->bin << "\">" << it->bin << "</span>";
  }
  html << " (5 = most disputed, logarithmic scale)</p>\n";
  if (links.empty()) {
    html << "<p class=\"wd-note\">No controversial links were found in the "
            "analyzed history.</p>\n";
  }
  html << "<article>\n" << article.html << "</article>\n";

  if (!links.empty()) {
    html << "<h2>Ranking</h2>\n<table>\n<tr><th>Rank</th><th>Link</th>"
            "<th>Score</th><th>Edits</th><th>Users</th><th>Reverts</th></tr>\n";
    for (size_t i = 0; i < links.size(); ++i) {
      const ordered_json& l = links[i];
      html << "<tr><td>" << l.at("rank").get<int>()
           << "</td><td><a href=\"#detail-" << i + 1
           << "\" class=\"wd-link wd-bin-" << l.at("bin").get<int>() << "\">"
           << HtmlEscape(l.at("link").get<std::string>()) << "</a></td><td>"
           << l.at("score").dump() << "</td><td>" << l.at("n_edits").get<int>()
           << "</td><td>" << l.at("n_users").get<int>() << "</td><td>"
           << l.at("n_reverts_involved").get<int>() << "</td></tr>\n";
    }
    html << "</table>\n";
  }

  for (size_t i = 0; i < links.size(); ++i) {
    const ordered_json& l = links[i];
    const std::string name = HtmlEscape(l.at("link").get<std::string>());
    const ordered_json& types = l.at("type_counts");
    html << "<section class=\"wd-detail\" id=\"detail-" << i + 1 << "\">\n<h3>"
         << name << "</h3>\n<p>" << name << " has been edited "
         << Plural(l.at("n_edits").get<int>(), "time") << " by "
         << Plural(l.at("n_users").get<int>(), "user") << "</p>\n<p>"
         << Plural(types.at("delete").get<int>(), "delete") << ", "
         << Plural(types.at("insert").get<int>(), "insert") << ", "
         << Plural(types.at("element_change").get<int>(), "element change")
         << ", "
         << Plural(types.at("sentence_change").get<int>(), "sentence change")
         << ", "
         << Plural(types.at("section_change").get<int>(), "section change")
         << "</p>\n<p>" << name << " was involved in "
         << Plural(l.at("n_reverts_involved").get<int>(), "revert")
         << "</p>\n<p>Top sections:";
    std::vector<std::pair<int, std::string>> sections;
    for (const auto& [section, count] : l.at("section_counts").items()) {
      sections.emplace_back(-count.get<int>(), section);
    }
    std::sort(sections.begin(), sections.end());
    for (const auto& [neg_count, section] : sections) {
      html << " " << HtmlEscape(section) << " (" << -neg_count << ")";
    }
    html << "</p>\n<table>\n<tr><th>Revision</th><th>Edit</th><th>User</th>"
            "<th>Comment</th><th>Section</th><th>Type</th><th>Time</th></tr>\n";
    const ordered_json& events = l.at("events");
    for (auto it = events.rbegin(); it != events.rend(); ++it) {
      const ordered_json& row = *it;
      html << "<tr><td>" << row.at("rev_id").get<int64_t>();
      if (!row.at("reverted_by").is_null()) {
        html << " reverted by " << row.at("reverted_by").get<int64_t>();
      }
      std::string time = row.at("timestamp").get<std::string>();
      if (time.size() == 20)
        time = time.substr(0, 10) + " " + time.substr(11, 8);
      html << "</td><td>" << DiffHtml(row.at("diff")) << "</td><td>"
           << HtmlEscape(row.at("user").get<std::string>()) << "</td><td>"
           << HtmlEscape(row.at("comment").get<std::string>()) << "</td><td>"
           << HtmlEscape(row.at("section").get<std::string>()) << "</td><td>"
           << HtmlEscape(row.at("type_code").get<std::string>()) << "</td><td>"
           << time << "</td></tr>\n";
    }
    html << "</table>\n</section>\n";
  }
  html << "</body>\n</html>\n";
  return html.str();
}

}  // namespace wikidispute
