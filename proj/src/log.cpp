// Copyright 2026 The mlg-design Authors
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

#include "mlgd/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace mlgd::log {

namespace {

Level parse_level() {
  const char* raw = std::getenv("MLG_LOG_LEVEL");
  if (raw == nullptr) return Level::kWarn;
  const std::string v(raw);
  if (v == "error") return Level::kError;
  if (v == "warn") return Level::kWarn;
  if (v == "info") return Level::kInfo;
  if (v == "debug") return Level::kDebug;
  std::fprintf(stderr, "[mlgd][warn] unknown MLG_LOG_LEVEL '%s', using warn\n",
               v.c_str());
  return Level::kWarn;
}

const char* tag(Level level) {
  switch (level) {
    case Level::kError: return "error";
    case Level::kWarn: return "warn";
    case Level::kInfo: return "info";
    case Level::kDebug: return "debug";
  }
  return "?";
}

}  // namespace

Level threshold() {
  static const Level cached = parse_level();
  return cached;
}

bool enabled(Level level) {
  return static_cast<int>(level) <= static_cast<int>(threshold());
}

void write(Level level, const std::string& message) {
  if (!enabled(level)) return;
  std::fprintf(stderr, "[mlgd][%s] %s\n", tag(level), message.c_str());
}

}  // namespace mlgd::log
