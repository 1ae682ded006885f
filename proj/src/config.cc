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

#include "wikidispute/config.h"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace wikidispute {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> items;
  size_t start = 0;
  while (start <= value.size()) {
    size_t comma = value.find(',', start);
    if (comma == std::string_view::npos) comma = value.size();
    std::string_view item = Trim(value.substr(start, comma - start));
    if (!item.empty()) items.emplace_back(item);
    start = comma + 1;
  }
  return items;
}

}  // namespace

std::vector<std::string> Config::DefaultBots() {
  return {"ClueBot NG", "ClueBot",  "AntiVandalBot",      "VoABot II",
          "MartinBot",  "XLinkBot", "CounterVandalismBot"};
}

Config ParseConfig(std::string_view text) {
  Config config;
  std::set<std::string> seen_lists;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));

    auto list = [&](std::vector<std::string>& target) {
      if (seen_lists.insert(key).second) target.clear();
      for (auto& item : SplitList(value)) target.push_back(std::move(item));
    };
    try {
      if (key == "api_base_url") {
        config.api_base_url = std::string(value);
      } else if (key == "user_agent") {
        config.user_agent = std::string(value);
      } else if (key == "bots") {
        list(config.bots);
      } else if (key == "aes_patterns") {
        list(config.aes_patterns);
      } else if (key == "ip_revert_window_seconds") {
        config.ip_revert_window_seconds = std::stoi(std::string(value));
      } else if (key == "jaccard_threshold") {
        config.jaccard_threshold = std::stod(std::string(value));
      } else {
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": bad value for '" + key + "'");
    }
  }
  if (config.ip_revert_window_seconds < 0) {
    throw ConfigError("ip_revert_window_seconds must be non-negative");
  }
  if (config.jaccard_threshold < 0.0 || config.jaccard_threshold > 1.0) {
    throw ConfigError("jaccard_threshold must lie in [0, 1]");
  }
  return config;
}

Config LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

void ApplyEnvironment(Config& config) {
  if (const char* url = std::getenv(kApiUrlEnv); url && *url) {
    config.api_base_url = url;
  }
}

}  // namespace wikidispute
