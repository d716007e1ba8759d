// Copyright 2026 The bincurve Authors.
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

// Append-only JSON-lines cache of scan results, keyed by the FNV-1a hash of
// the canonical query.

#ifndef BINCURVE_CACHE_HPP
#define BINCURVE_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "bincurve/json_io.hpp"

namespace bincurve {

std::uint64_t fnv1a64(const std::string& bytes);

// BINCURVE_CACHE_DIR, else $HOME/.cache/bincurve, else ./.bincurve-cache.
std::filesystem::path default_cache_dir();

class ScanCache {
 public:
  explicit ScanCache(std::filesystem::path dir);

  static std::string key(const Json& query);
  static std::string key(const BinaryCurve<Fp>& x, const BNQuery& q, std::size_t witness_cap);

  // Last entry for the key written by this version.
  std::optional<Json> lookup(const std::string& key) const;
  void store(const std::string& key, const Json& value) const;

  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
};

struct CachedScan {
  BNReport report;
  bool hit = false;
  std::optional<bool> audit_match;  // set when a hit was recomputed
};

// use_cache = false skips both lookup and store. audit recomputes on a hit.
CachedScan cached_bn_enumerate(const BinaryCurve<Fp>& x, const BNQuery& q, const EnumerationOptions& opts,
                               const ScanCache* cache, bool audit);

}  // namespace bincurve

#endif  // BINCURVE_CACHE_HPP
