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

#include "wikidispute/report_json.h"

namespace wikidispute {

using nlohmann::ordered_json;

std::string SectionLabel(const SectionId& section) {
  if (section.ordinal == 0) return section.key;
  return section.key + "#" + std::to_string(section.ordinal);
}

ordered_json DetailRowToJson(const DetailRow& row) {
  ordered_json j;
  j["rev_id"] = row.rev_id;
  j["prev_rev_id"] = row.prev_rev_id;
  j["reverted_by"] =
      row.reverted_by ? ordered_json(*row.reverted_by) : ordered_json(nullptr);
  j["timestamp"] = FormatTimestamp(row.timestamp);
  j["user"] = row.user;
  j["comment"] = row.comment;
  j["section"] = SectionLabel(row.section);
  j["type"] = EditTypeName(row.type);
  j["type_code"] = std::string(1, EditTypeCode(row.type));
  j["scored"] = row.scored;
  j["weight"] = RationalToDouble6(row.weight);
  j["weight_exact"] = RationalToString(row.weight);
  j["kind"] = PairKindName(row.kind);
  j["old_text"] =
      row.old_text ? ordered_json(*row.old_text) : ordered_json(nullptr);
  j["new_text"] =
      row.new_text ? ordered_json(*row.new_text) : ordered_json(nullptr);
  ordered_json diff = ordered_json::array();
  if (row.kind == PairKind::kModified) {
    for (const DiffRun& run : row.diff) {
      diff.push_back({{"op", DiffOpName(run.op)}, {"text", run.text}});
    }
  } else if (row.old_text) {
    diff.push_back({{"op", "delete"}, {"text", *row.old_text}});
  } else if (row.new_text) {
    diff.push_back({{"op", "insert"}, {"text", *row.new_text}});
  }
  j["diff"] = std::move(diff);
  return j;
}

ordered_json SeriesToJson(const ScoreSeries& series) {
  ordered_json j;
  j["link"] = series.link;
  j["bucket"] = BucketName(series.bucket);
  ordered_json points = ordered_json::array();
  for (const SeriesPoint& p : series.points) {
    ordered_json point;
    point["period_start"] = FormatTimestamp(p.period_start).substr(0, 10);
    point["cumulative"] = RationalToDouble6(p.cumulative);
    point["cumulative_exact"] = RationalToString(p.cumulative);
    point["incremental"] = RationalToDouble6(p.incremental);
    point["incremental_exact"] = RationalToString(p.incremental);
    point["events"] = p.events;
    points.push_back(std::move(point));
  }
  j["points"] = std::move(points);
  return j;
}

ordered_json ReportToJson(const ArticleReport& report) {
  ordered_json j;
  j["schema_version"] = ArticleReport::kSchemaVersion;
  j["article_title"] = report.article_title;
  j["language_code"] = report.language_code;
  j["analyzed_revisions"] = report.analyzed_revisions;
  j["generated_at"] = FormatTimestamp(report.generated_at);

  ordered_json stats;
  stats["raw_revisions"] = report.chain_stats.raw_revisions;
  stats["kept_revisions"] = report.chain_stats.kept_revisions;
  ordered_json excluded;
  for (const auto& [reason, count] : report.chain_stats.excluded) {
    excluded[ExclusionReasonName(reason)] = count;
  }
  stats["excluded"] = std::move(excluded);
  stats["reverted_revisions"] = report.chain_stats.reverted_revisions;
  stats["reverting_revisions"] = report.chain_stats.reverting_revisions;
  j["chain_stats"] = std::move(stats);

  ordered_json links = ordered_json::array();
  for (const LinkScore& ls : report.links) {
    ordered_json l;
    l["link"] = ls.link;
    l["rank"] = ls.rank;
    l["score"] = RationalToDouble6(ls.score);
    l["score_exact"] = RationalToString(ls.score);
    l["bin"] = ls.bin;
    l["n_edits"] = ls.n_edits;
    l["n_users"] = ls.n_users;
    l["n_reverts_involved"] = ls.n_reverts_involved;
    ordered_json types;
    for (EditType type : kAllEditTypes) {
      auto it = ls.type_counts.find(type);
      types[EditTypeName(type)] = it == ls.type_counts.end() ? 0 : it->second;
    }
    l["type_counts"] = std::move(types);
    ordered_json sections = ordered_json::object();
    for (const auto& [section, count] : ls.section_counts) {
      sections[SectionLabel(section)] = count;
    }
    l["section_counts"] = std::move(sections);
    ordered_json rows = ordered_json::array();
    for (const DetailRow& row : ls.events) rows.push_back(DetailRowToJson(row));
    l["events"] = std::move(rows);
    links.push_back(std::move(l));
  }
  j["links"] = std::move(links);

  ordered_json series;
  for (auto [name, list] : {std::pair{"month", &report.series_month},
                            std::pair{"week", &report.series_week}}) {
    ordered_json arr = ordered_json::array();
    for (const ScoreSeries& s : *list) arr.push_back(SeriesToJson(s));
    series[name] = std::move(arr);
  }
  j["series"] = std::move(series);

  ordered_json latest;
  latest["rev_id"] = report.latest_rev_id;
  latest["timestamp"] = FormatTimestamp(report.latest_timestamp);
  latest["wikitext"] = report.latest_wikitext;
  j["latest_revision"] = std::move(latest);
  return j;
}

std::string SerializeReport(const ArticleReport& report) {
  return ReportToJson(report).dump(2, ' ', false,
                                   ordered_json::error_handler_t::replace) +
         "\n";
}

}  // namespace wikidispute
