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

#include "bincurve/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace bincurve {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("BINCURVE_CACHE_DIR"); dir && *dir) return dir;
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "bincurve";
  return ".bincurve-cache";
}

ScanCache::ScanCache(std::filesystem::path dir) : file_(std::move(dir) / "scans.jsonl") {}

std::string ScanCache::key(const Json& query) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(query.dump())));
  return buf;
}

std::string ScanCache::key(const BinaryCurve<Fp>& x, const BNQuery& q, std::size_t witness_cap) {
  return key(Json{{"op", "bn"},
                  {"curve", curve_to_json(x)},
                  {"field", field_to_json(x.field())},
                  {"md", md_to_json(q.md)},
                  {"r", q.r},
                  {"witness_cap", witness_cap}});
}

std::optional<Json> ScanCache::lookup(const std::string& key) const {
  std::ifstream in(file_);
  if (!in) return std::nullopt;
  std::optional<Json> found;
  std::string line;
  while (std::getline(in, line)) {
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("value")) continue;
    if (j.value("key", "") != key || j.value("version", "") != kVersion) continue;
    found = std::move(j["value"]);
  }
  return found;
}

void ScanCache::store(const std::string& key, const Json& value) const {
  std::filesystem::create_directories(file_.parent_path());
  std::ofstream out(file_, std::ios::app);
  out << Json{{"key", key}, {"version", kVersion}, {"value", value}}.dump() << '\n';
}

CachedScan cached_bn_enumerate(const BinaryCurve<Fp>& x, const BNQuery& q, const EnumerationOptions& opts,
                               const ScanCache* cache, bool audit) {
  CachedScan out;
  std::string key;
  if (cache) {
    key = ScanCache::key(x, q, opts.witness_cap);
    std::optional<BNReport> hit;
    if (auto j = cache->lookup(key)) {
      try {
        hit = bn_report_from_json(*j);
      } catch (const InputError&) {
      }
    }
    if (hit) {
      out.report = std::move(*hit);
      out.hit = true;
      if (audit) {
        const BNReport fresh = bn_enumerate(x, q, opts);
        out.audit_match = to_json(fresh) == to_json(out.report);
      }
      return out;
    }
  }
  out.report = bn_enumerate(x, q, opts);
  if (cache) cache->store(key, to_json(out.report));
  return out;
}

}  // namespace bincurve
