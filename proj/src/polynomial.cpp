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

#include "bincurve/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace bincurve {

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000"))
    throw std::domain_error("field_roots: coefficient too large for the rational root test");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Fp> field_roots(const FieldCtx& ctx, const std::vector<Fp>& poly) {
  std::vector<Fp> out;
  const Fp zero = make_scalar<Fp>(ctx, 0);
  for (std::uint32_t a = 0; a < ctx.characteristic(); ++a) {
    const auto pt = ProjPoint<Fp>::finite(ctx, static_cast<std::int64_t>(a));
    if (evaluate_form(poly, pt, zero) == zero) out.push_back(pt.x());
  }
  return out;
}

std::vector<Rational> field_roots(const FieldCtx&, const std::vector<Rational>& poly) {
  std::vector<Rational> p = poly;
  trim(p);
  if (p.empty()) throw std::invalid_argument("field_roots: zero polynomial");
  std::vector<Rational> out;
  // Factor out t.
  std::size_t low = 0;
  while (p[low].is_zero()) ++low;
  if (low > 0) out.push_back(Rational(0));
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  if (p.size() == 1) return out;

  mpz_class lcm = 1;
  for (const auto& c : p) lcm = ::lcm(lcm, mpz_class(c.value().get_den()));
  std::vector<mpz_class> z;
  for (const auto& c : p) {
    const mpq_class scaled = c.value() * lcm;
    z.push_back(scaled.get_num());
  }

  const Rational zero(0);
  for (const auto& u : divisors(z.front()))
    for (const auto& v : divisors(z.back()))
      for (int sign : {1, -1}) {
        const Rational cand(mpq_class(mpz_class(sign * u), v));
        if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
        Rational acc = p.back();
        for (std::size_t k = p.size() - 1; k-- > 0;) acc = acc * cand + p[k];
        if (acc == zero) out.push_back(cand);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bincurve
