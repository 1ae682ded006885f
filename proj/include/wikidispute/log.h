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

#ifndef WIKIDISPUTE_LOG_H_
#define WIKIDISPUTE_LOG_H_

#include <functional>
#include <string_view>

namespace wikidispute {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarning = 2, kError = 3 };

using LogHandler = std::function<void(LogLevel, std::string_view)>;

// Messages below the threshold are dropped. Default threshold is kWarning,
// default handler writes "[level] message" to stderr.
void SetLogThreshold(LogLevel level);
void SetLogHandler(LogHandler handler);
void Log(LogLevel level, std::string_view message);

}  // namespace wikidispute

#endif  // WIKIDISPUTE_LOG_H_
