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

#include "bincurve/curve.hpp"

#include <algorithm>
#include <functional>

namespace bincurve {

std::vector<NodeSubset> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<NodeSubset> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.emplace_back(idx, n);
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<ProjPoint<Fp>> projective_line(const FieldCtx& ctx) {
  if (!ctx.is_prime_field()) throw std::invalid_argument("projective_line: needs a prime field");
  std::vector<ProjPoint<Fp>> out;
  for (std::uint32_t a = 0; a < ctx.characteristic(); ++a)
    out.push_back(ProjPoint<Fp>::finite(ctx, static_cast<std::int64_t>(a)));
  out.push_back(ProjPoint<Fp>::infinity(ctx));
  return out;
}

std::vector<ProjPoint<Fp>> smooth_points(const BinaryCurve<Fp>& x, int component) {
  std::vector<ProjPoint<Fp>> out;
  for (auto& pt : projective_line(x.field()))
    if (!x.is_branch_point(component, pt)) out.push_back(pt);
  return out;
}

std::vector<BinaryCurve<Fp>> normal_form_curves(int g, const FieldCtx& ctx) {
  if (!ctx.is_prime_field()) throw std::invalid_argument("normal_form_curves: needs a prime field");
  if (g < 1) throw std::invalid_argument("normal_form_curves: genus must be at least 1");
  const auto at = [&](std::int64_t a) { return ProjPoint<Fp>::finite(ctx, a); };
  const auto inf = ProjPoint<Fp>::infinity(ctx);
  if (g == 1) return {BinaryCurve<Fp>(ctx, {{at(0), at(0)}, {inf, inf}})};
  const std::int64_t p = ctx.characteristic();
  const int free = g - 2;
  if (p - 2 < free) throw std::invalid_argument("normal_form_curves: F_" + std::to_string(p) + " is too small");
  std::vector<BinaryCurve<Fp>> out;
  std::vector<std::int64_t> a(static_cast<std::size_t>(free)), b(static_cast<std::size_t>(free));
  const std::function<void(int)> place_b = [&](int i) {
    if (i == free) {
      std::vector<Node<Fp>> nodes;
      for (int k = 0; k < free; ++k) nodes.push_back({at(a[k]), at(b[k])});
      nodes.push_back({at(0), at(0)});
      nodes.push_back({at(1), at(1)});
      nodes.push_back({inf, inf});
      out.emplace_back(ctx, std::move(nodes));
      return;
    }
    for (std::int64_t v = 2; v < p; ++v) {
      if (std::find(b.begin(), b.begin() + i, v) != b.begin() + i) continue;
      b[i] = v;
      place_b(i + 1);
    }
  };
  const std::function<void(int, std::int64_t)> place_a = [&](int i, std::int64_t from) {
    if (i == free) return place_b(0);
    for (std::int64_t v = from; v < p; ++v) {
      a[i] = v;
      place_a(i + 1, v + 1);
    }
  };
  place_a(0, 2);
  return out;
}

}  // namespace bincurve
