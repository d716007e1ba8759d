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

// Binary forms and univariate polynomials over the exact fields. A binary
// form of degree d is a coefficient vector with index k <-> x^k y^(d-k).

#ifndef BINCURVE_POLYNOMIAL_HPP
#define BINCURVE_POLYNOMIAL_HPP

#include <vector>

#include "bincurve/curve.hpp"
#include "bincurve/field.hpp"

namespace bincurve {

// Value of a form at the normal-form representative of v. The empty form
// (negative degree) is zero everywhere.
template <class Scalar>
Scalar evaluate_form(const std::vector<Scalar>& coeffs, const ProjPoint<Scalar>& v, const Scalar& zero) {
  if (coeffs.empty()) return zero;
  if (v.is_infinity()) return coeffs.back();
  Scalar acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * v.x() + coeffs[k];
  return acc;
}

template <class Scalar>
void trim(std::vector<Scalar>& p) {
  while (!p.empty() && p.back() == Scalar(0)) p.pop_back();
}

// Remainder of a by b; b must be nonzero and trimmed.
template <class Scalar>
std::vector<Scalar> poly_mod(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  trim(a);
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    trim(a);
  }
  return a;
}

// Monic gcd; the zero polynomial is returned only if both inputs are zero.
template <class Scalar>
std::vector<Scalar> poly_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::vector<Scalar> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

// Roots lying in the ground field of a nonzero polynomial.
std::vector<Fp> field_roots(const FieldCtx& ctx, const std::vector<Fp>& poly);
std::vector<Rational> field_roots(const FieldCtx& ctx, const std::vector<Rational>& poly);

// Points of P^1 over the ground field where every form vanishes. The forms
// share one degree and are not all zero.
template <class Scalar>
std::vector<ProjPoint<Scalar>> common_roots(const FieldCtx& ctx, const std::vector<std::vector<Scalar>>& forms) {
  std::vector<Scalar> g;
  bool at_infinity = true;
  for (const auto& f : forms) {
    if (!f.empty() && f.back() != Scalar(0)) at_infinity = false;
    g = poly_gcd(g, f);
  }
  std::vector<ProjPoint<Scalar>> out;
  if (g.empty()) throw std::invalid_argument("common_roots: all forms are zero");
  for (const auto& r : field_roots(ctx, g)) out.push_back(ProjPoint<Scalar>::finite(ctx, r));
  std::sort(out.begin(), out.end());
  if (at_infinity) out.push_back(ProjPoint<Scalar>::infinity(ctx));
  return out;
}

}  // namespace bincurve

#endif  // BINCURVE_POLYNOMIAL_HPP
