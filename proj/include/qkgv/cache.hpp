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

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qkgv/gwside.hpp"
#include "qkgv/qkside.hpp"

namespace qkgv {

inline constexpr int kCacheVersion = 1;

/// A cache file that is unreadable, corrupt, or from another format version.
class CacheError : public std::runtime_error {
 public:
  enum class Kind { kIo, kFormat, kChecksum, kVersion };
  CacheError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct CacheData {
  GwTable table;
  ReconState state;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(const std::string& bytes);

std::string serialize_cache(const CacheData& data);
CacheData parse_cache(const std::string& text);

void write_cache(const std::string& path, const CacheData& data);
CacheData read_cache(const std::string& path);

struct CacheInfo {
  std::string status;  // "ok", or the error text
  int version = 0;
  int max_degree = 0;
  std::string checksum;
};
/// Header fields and validation status; throws CacheError only if the file cannot be read.
CacheInfo inspect_cache(const std::string& path);

}  // namespace qkgv
