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

#include "wikidispute/log.h"

#include <atomic>
#include <iostream>
#include <mutex>

namespace wikidispute {
namespace {

std::atomic<int> g_threshold{static_cast<int>(LogLevel::kWarning)};
std::mutex g_mu;
LogHandler g_handler;

const char* LevelName(LogLevel level) {
  switch (level) {
    case LogLevel::kDebug:
      return "debug";
    case LogLevel::kInfo:
      return "info";
    case LogLevel::kWarning:
      return "warning";
    case LogLevel::kError:
      return "error";
  }
  return "?";
}

}  // namespace

void SetLogThreshold(LogLevel level) {
  g_threshold.store(static_cast<int>(level));
}

void SetLogHandler(LogHandler handler) {
  std::lock_guard<std::mutex> lock(g_mu);
  g_handler = std::move(handler);
}

void Log(LogLevel level, std::string_view message) {
  if (static_cast<int>(level) < g_threshold.load()) return;
  std::lock_guard<std::mutex> lock(g_mu);
  if (g_handler) {
    g_handler(level, message);
  } else {
    std::cerr << "[" << LevelName(level) << "] " << message << "\n";
  }
}

}  // namespace wikidispute
