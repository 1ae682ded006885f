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

#ifndef WIKIDISPUTE_CONFIG_H_
#define WIKIDISPUTE_CONFIG_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wikidispute {

// Plain-text configuration. One "key = value" per line; '#' starts a
// comment. List-valued keys take comma-separated items, and repeating a
// list key appends to it after the first occurrence replaces the default:
//
//   api_base_url = https://{lang}.wikipedia.org/w/api.php
//   user_agent = my-research-bot/1.0 (me@example.org)
//   bots = ClueBot NG, AntiVandalBot
//   bots = MartinBot
//   ip_revert_window_seconds = 60
//   aes_patterns = Blanked the page, Replaced content with
//   jaccard_threshold = 0.3
struct Config {
  std::string api_base_url = "https://{lang}.wikipedia.org/w/api.php";
  std::string user_agent =
      "wikidispute/0.1 (edit-history research tool; offline analysis)";
  std::vector<std::string> bots = DefaultBots();
  int ip_revert_window_seconds = 60;
  std::vector<std::string> aes_patterns = {"Blanked the page",
                                           "Replaced content with"};
  double jaccard_threshold = 0.3;

  static std::vector<std::string> DefaultBots();
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Config ParseConfig(std::string_view text);
Config LoadConfig(const std::filesystem::path& path);

// Environment variable that overrides api_base_url.
inline constexpr const char* kApiUrlEnv = "WIKIDISPUTE_API_URL";

// Applies environment overrides to a loaded config.
void ApplyEnvironment(Config& config);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_CONFIG_H_
