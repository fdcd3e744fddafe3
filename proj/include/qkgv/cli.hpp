/*
   Copyright 2026 The qkgv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <set>
#include <string>

namespace qkgv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Environment variable naming the cache file; --cache takes precedence.
inline constexpr const char* kCacheEnvVar = "QKGV_CACHE";
/// Cache file used by the cache subcommands when neither --cache nor the variable is set.
inline constexpr const char* kDefaultCachePath = "qkgv-cache.json";

enum class OutputFormat { kJson, kCsv, kPretty };

struct RunConfig {
  std::string command;       // gw, jk, coeffs, verify, cache
  std::string cache_action;  // write, read, info (cache only)
  int max_degree = 4;
  bool max_degree_given = false;
  int degree = 0;      // coeffs
  int root_order = 0;  // coeffs
  OutputFormat format = OutputFormat::kJson;
  std::string cache_path;  // empty: no caching for the compute commands
  std::set<std::string> checks;
  bool timing = false;
};

/// Execute a parsed configuration; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parse argv (reading the cache variable from the environment) and run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qkgv
