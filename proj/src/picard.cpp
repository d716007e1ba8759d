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

#include "bincurve/picard.hpp"

#include <algorithm>

namespace bincurve {

namespace {

// Integer forms of m <= x and x <= M: 2x >= d-g-1 and 2x <= d+g+1.
bool above_m(int x, int d, int g, bool strict) { return strict ? 2 * x > d - g - 1 : 2 * x >= d - g - 1; }
bool below_M(int x, int d, int g, bool strict) { return strict ? 2 * x < d + g + 1 : 2 * x <= d + g + 1; }

bool within(Multidegree md, int g, bool strict) {
  const int d = md.total();
  return above_m(md.d1, d, g, strict) && above_m(md.d2, d, g, strict) && below_M(md.d1, d, g, strict) &&
         below_M(md.d2, d, g, strict);
}

std::vector<Multidegree> collect(int d, int g, bool strict) {
  std::vector<Multidegree> out;
  // m >= (d-g-1)/2 - 1 and M <= (d+g+1)/2 + 1 bracket every candidate.
  const int lo = (d - g - 1) / 2 - 2;
  const int hi = (d + g + 1) / 2 + 2;
  for (int d1 = lo; d1 <= hi; ++d1)
    if (within({d1, d - d1}, g, strict)) out.push_back({d1, d - d1});
  return out;
}

}  // namespace

BalancedBounds bounds(int d, int g) { return {Rational(d - g - 1, 2), Rational(d + g + 1, 2)}; }

bool is_balanced(Multidegree md, int g) { return within(md, g, false); }
bool is_strictly_balanced(Multidegree md, int g) { return within(md, g, true); }

std::vector<Multidegree> balanced_set(int d, int g) { return collect(d, g, false); }
std::vector<Multidegree> strict_set(int d, int g) { return collect(d, g, true); }

bool is_balanced_blowup(std::span<const int> dhat, int g) {
  if (dhat.size() < 2) throw std::invalid_argument("is_balanced_blowup: needs at least (d1, d2)");
  const int e = static_cast<int>(dhat.size()) - 2;
  for (std::size_t i = 2; i < dhat.size(); ++i)
    if (dhat[i] != 1) return false;
  return is_balanced({dhat[0], dhat[1]}, g - e);
}

PicardType picard_type(int d, int g) {
  return (d - g - 1) % 2 == 0 ? PicardType::kDegeneration : PicardType::kNeron;
}

std::string to_string(PicardType t) { return t == PicardType::kNeron ? "N" : "D"; }

int stratum_dimension(const StratumKey& key, int g) { return g - static_cast<int>(key.s.size()); }

bool is_strict_key(const StratumKey& key, int d, int g) {
  const int e = static_cast<int>(key.s.size());
  return key.md.total() == d - e && is_strictly_balanced(key.md, g - e);
}

StrataListing strata_keys(int g, int d) {
  if (g < 2) throw std::invalid_argument("strata_keys: genus must be at least 2");
  StrataListing out{picard_type(d, g), d, g, {}, std::nullopt};
  // Neron type: balanced and strictly balanced coincide, so one rule covers
  // both types. Y_S stays connected: e runs up to g.
  for (int e = 0; e <= g; ++e)
    for (const auto& s : subsets_of_size(static_cast<std::size_t>(g + 1), static_cast<std::size_t>(e)))
      for (const auto& md : strict_set(d - e, g - e)) out.strata.push_back({s, md});
  if (out.type == PicardType::kDegeneration) out.ell0 = Ell0{d, g};
  return out;
}

bool closure_leq(const StratumKey& a, const StratumKey& b) {
  return a.s.is_subset_of(b.s) && a.md.dominates(b.md);
}

int h0_bar(const Ell0& pt) {
  if (picard_type(pt.d, pt.g) != PicardType::kDegeneration)
    throw std::invalid_argument("h0_bar: ell0 only exists in the degeneration type");
  const int m = (pt.d - pt.g - 1) / 2;
  return 2 * std::max(0, m + 1);
}

}  // namespace bincurve
