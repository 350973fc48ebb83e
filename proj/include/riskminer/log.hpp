// Copyright 2026 The RiskMiner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RISKMINER_LOG_HPP
#define RISKMINER_LOG_HPP

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>
#include <string_view>

namespace riskminer::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Threshold read once from RISKMINER_LOG (error|warn|info|debug); warn
/// when unset or unrecognised.
inline Level threshold() {
  static const Level level = [] {
    const char* env = std::getenv("RISKMINER_LOG");
    std::string_view v = env ? env : "";
    if (v == "error") return Level::Error;
    if (v == "info") return Level::Info;
    if (v == "debug") return Level::Debug;
    return Level::Warn;
  }();
  return level;
}

inline void emit(Level level, std::string_view msg) {
  if (static_cast<int>(level) > static_cast<int>(threshold())) return;
  static std::mutex mu;
  static constexpr std::string_view names[] = {"error", "warn", "info", "debug"};
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << '\n';
}

inline void error(std::string_view msg) { emit(Level::Error, msg); }
inline void warn(std::string_view msg) { emit(Level::Warn, msg); }
inline void info(std::string_view msg) { emit(Level::Info, msg); }
inline void debug(std::string_view msg) { emit(Level::Debug, msg); }

}  // namespace riskminer::log

#endif  // RISKMINER_LOG_HPP
