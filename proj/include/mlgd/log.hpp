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

#ifndef MLGD_LOG_HPP_
#define MLGD_LOG_HPP_

#include <string>

namespace mlgd::log {

enum class Level { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Threshold comes from MLG_LOG_LEVEL (error|warn|info|debug), default warn.
Level threshold();
bool enabled(Level level);
void write(Level level, const std::string& message);

inline void error(const std::string& m) { write(Level::kError, m); }
inline void warn(const std::string& m) { write(Level::kWarn, m); }
inline void info(const std::string& m) { write(Level::kInfo, m); }
inline void debug(const std::string& m) { write(Level::kDebug, m); }

}  // namespace mlgd::log

#endif  // MLGD_LOG_HPP_
