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

// Global sections of line bundles on binary curves.
//
// H^0(L) is the kernel of the gluing matrix, one row per node:
//
//     [ E_{d1}(p_j) | -c_j E_{d2}(q_j) ]
//
// where E_d(v) lists the monomials x^k y^(d-k) at the representative of v.
// Vanishing to order m at a smooth point adds m rows: the point value and its
// formal derivatives in the chart y = 1 (or x = 1 at infinity).

#ifndef BINCURVE_COHOMOLOGY_HPP
#define BINCURVE_COHOMOLOGY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bincurve/curve.hpp"
#include "bincurve/line_bundle.hpp"
#include "bincurve/linalg.hpp"
#include "bincurve/polynomial.hpp"

namespace bincurve {

template <class Scalar>
struct SmoothPoint {
  int component = 1;
  ProjPoint<Scalar> point;
  friend bool operator==(const SmoothPoint&, const SmoothPoint&) = default;
};

template <class Scalar>
std::vector<Scalar> monomial_values(const ProjPoint<Scalar>& v, int d, const Scalar& one) {
  if (d < 0) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(d) + 1, one - one);
  if (v.is_infinity()) {
    out.back() = one;
    return out;
  }
  Scalar a = one;
  for (int k = 0; k <= d; ++k) {
    out[static_cast<std::size_t>(k)] = a;
    a *= v.x();
  }
  return out;
}

// n-th formal derivative of the monomial basis in the affine chart at v.
template <class Scalar>
std::vector<Scalar> derivative_row(const FieldCtx& ctx, const ProjPoint<Scalar>& v, int d, int n) {
  const Scalar zero = make_scalar<Scalar>(ctx, 0);
  if (d < 0) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(d) + 1, zero);
  if (v.is_infinity()) {
    // Local coordinate s = y / x; x^k y^(d-k) = s^(d-k).
    if (d - n >= 0) out[static_cast<std::size_t>(d - n)] = factorial<Scalar>(ctx, n);
    return out;
  }
  for (int k = n; k <= d; ++k) {
    Scalar falling = make_scalar<Scalar>(ctx, 1);
    for (int i = 0; i < n; ++i) falling *= make_scalar<Scalar>(ctx, k - i);
    out[static_cast<std::size_t>(k)] = falling * power(v.x(), k - n, make_scalar<Scalar>(ctx, 1));
  }
  return out;
}

namespace detail {

template <class Scalar>
void check_vanishing_input(const LineBundle<Scalar>& l, const EffectiveDivisor<Scalar>& d) {
  const auto& x = l.curve();
  for (const auto& e : d.points())
    if (x.is_branch_point(e.component, e.point))
      throw std::invalid_argument("vanishing condition at " + e.point.to_string() + " on C" +
                                  std::to_string(e.component) + ", which is a node");
  if (d.max_multiplicity() >= 2 && x.field().is_prime_field() &&
      static_cast<std::int64_t>(x.field().characteristic()) <= static_cast<std::int64_t>(l.degree()) + 1)
    throw std::domain_error("derivative conditions need p > d+1; F_" +
                            std::to_string(x.field().characteristic()) + " is too small for degree " +
                            std::to_string(l.degree()));
}

}  // namespace detail

template <class Scalar>
Matrix<Scalar> gluing_matrix(const LineBundle<Scalar>& l, const EffectiveDivisor<Scalar>& vanishing = {}) {
  detail::check_vanishing_input(l, vanishing);
  const auto& x = l.curve();
  const Multidegree md = l.multidegree();
  const Index k1 = std::max(md.d1 + 1, 0);
  const Index k2 = std::max(md.d2 + 1, 0);
  Index rows = static_cast<Index>(x.node_count());
  for (const auto& e : vanishing.points()) rows += e.multiplicity;

  Matrix<Scalar> m = Matrix<Scalar>::Constant(rows, k1 + k2, x.zero());
  const Scalar one = x.one();
  for (std::size_t j = 0; j < x.node_count(); ++j) {
    const auto e1 = monomial_values(x.node(j).p, md.d1, one);
    const auto e2 = monomial_values(x.node(j).q, md.d2, one);
    const Scalar c = l.gluing()[j];
    const Index r = static_cast<Index>(j);
    for (Index k = 0; k < k1; ++k) m(r, k) = e1[static_cast<std::size_t>(k)];
    for (Index k = 0; k < k2; ++k) m(r, k1 + k) = -(c * e2[static_cast<std::size_t>(k)]);
  }
  Index r = static_cast<Index>(x.node_count());
  for (const auto& e : vanishing.points()) {
    const int deg = e.component == 1 ? md.d1 : md.d2;
    const Index offset = e.component == 1 ? 0 : k1;
    for (int n = 0; n < e.multiplicity; ++n, ++r) {
      const auto row = derivative_row(x.field(), e.point, deg, n);
      for (std::size_t k = 0; k < row.size(); ++k) m(r, offset + static_cast<Index>(k)) = row[k];
    }
  }
  return m;
}

template <class Scalar>
int h0(const LineBundle<Scalar>& l) {
  return static_cast<int>(nullity(gluing_matrix(l)));
}

// h^0(L(-D)).
template <class Scalar>
int h0_vanishing(const LineBundle<Scalar>& l, const EffectiveDivisor<Scalar>& d) {
  return static_cast<int>(nullity(gluing_matrix(l, d)));
}

// By Riemann-Roch on the nodal curve.
template <class Scalar>
int h1(const LineBundle<Scalar>& l) {
  return h0(l) - l.degree() + l.curve().genus() - 1;
}

template <class Scalar>
struct Section {
  std::vector<Scalar> f;  // on C1, degree d1
  std::vector<Scalar> h;  // on C2, degree d2

  Scalar value(int component, const ProjPoint<Scalar>& v, const Scalar& zero) const {
    return evaluate_form(component == 1 ? f : h, v, zero);
  }
};

template <class Scalar>
struct SectionSpace {
  LineBundle<Scalar> bundle;
  EffectiveDivisor<Scalar> vanishing;
  std::vector<Section<Scalar>> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

template <class Scalar>
SectionSpace<Scalar> section_space(const LineBundle<Scalar>& l, const EffectiveDivisor<Scalar>& d = {}) {
  const auto kernel = kernel_basis(gluing_matrix(l, d), l.curve().one());
  const std::size_t k1 = static_cast<std::size_t>(std::max(l.multidegree().d1 + 1, 0));
  SectionSpace<Scalar> out{l, d, {}};
  for (const auto& v : kernel) {
    Section<Scalar> s;
    for (Index k = 0; k < v.size(); ++k) (static_cast<std::size_t>(k) < k1 ? s.f : s.h).push_back(v(k));
    out.basis.push_back(std::move(s));
  }
  return out;
}

namespace detail {

template <class Scalar>
EffectiveDivisor<Scalar> divisor_of(std::initializer_list<SmoothPoint<Scalar>> pts) {
  EffectiveDivisor<Scalar> d;
  for (const auto& p : pts) d.add(p.component, p.point);
  return d;
}

}  // namespace detail

// True iff h0(M-p) = h0(M-q) = h0(M-p-q).
template <class Scalar>
bool neutral_pair(const LineBundle<Scalar>& m, const SmoothPoint<Scalar>& p, const SmoothPoint<Scalar>& q) {
  if (p == q) throw std::invalid_argument("neutral_pair: the two points coincide");
  const int a = h0_vanishing(m, detail::divisor_of({p}));
  const int b = h0_vanishing(m, detail::divisor_of({q}));
  const int c = h0_vanishing(m, detail::divisor_of({p, q}));
  return a == b && b == c;
}

template <class Scalar>
struct Descent {
  bool exists = false;
  std::optional<LineBundle<Scalar>> bundle;
  bool unique = false;
};

// Line bundles L on X with pullback M to the normalization Y = Y_S. Sections
// of M descend iff each removed pair satisfies f(p_i) = c_i h(q_i) for one c_i
// and every section; the evaluation vectors at p_i and q_i must therefore be
// proportional, both zero (c_i free) or both nonzero.
template <class Scalar>
Descent<Scalar> descend(const BinaryCurve<Scalar>& x, const NodeSubset& s, const LineBundle<Scalar>& m) {
  const auto norm = normalize_at(x, s);
  if (!(norm.curve == m.curve())) throw std::invalid_argument("descend: bundle does not live on the normalization");
  const auto space = section_space(m);
  if (space.dimension() == 0) throw std::invalid_argument("descend: h0(M) = 0");

  const Scalar zero = x.zero();
  Descent<Scalar> out;
  out.unique = true;
  std::vector<Scalar> removed_c;
  for (const auto& node : norm.removed) {
    std::vector<Scalar> ep, eq;
    for (const auto& sec : space.basis) {
      ep.push_back(sec.value(1, node.p, zero));
      eq.push_back(sec.value(2, node.q, zero));
    }
    const auto nonzero = [&](const std::vector<Scalar>& v) {
      return std::any_of(v.begin(), v.end(), [&](const Scalar& t) { return t != zero; });
    };
    const bool zp = !nonzero(ep);
    const bool zq = !nonzero(eq);
    if (zp && zq) {
      removed_c.push_back(x.one());
      out.unique = false;
      continue;
    }
    if (zp != zq) return {false, std::nullopt, false};
    std::size_t first = 0;
    while (eq[first] == zero) ++first;
    const Scalar c = ep[first] / eq[first];
    for (std::size_t k = 0; k < ep.size(); ++k)
      if (ep[k] != c * eq[k]) return {false, std::nullopt, false};
    removed_c.push_back(c);
  }

  std::vector<Scalar> c(x.node_count(), x.one());
  for (std::size_t i = 0; i < norm.kept.size(); ++i) c[norm.kept[i]] = m.gluing()[i];
  for (std::size_t i = 0; i < s.size(); ++i) c[s.indices()[i]] = removed_c[i];
  LineBundle<Scalar> l(x, m.multidegree(), std::move(c));
  if (h0(l) != space.dimension()) throw std::logic_error("descend: descended bundle lost sections");
  out.exists = true;
  out.bundle = std::move(l);
  return out;
}

// Reglues the given branch pairs onto M's curve as new trailing nodes.
template <class Scalar>
Descent<Scalar> descend(const LineBundle<Scalar>& m, const std::vector<Node<Scalar>>& pairs) {
  const BinaryCurve<Scalar> x = reglue(m.curve(), pairs);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < pairs.size(); ++i) idx.push_back(m.curve().node_count() + i);
  return descend(x, NodeSubset(idx, x.node_count()), m);
}

template <class Scalar>
struct BaseLocus {
  std::vector<std::size_t> nodes;
  std::vector<SmoothPoint<Scalar>> smooth_points;
  // Set when every section vanishes identically on that component.
  std::array<bool, 2> whole_component{false, false};

  bool empty() const { return nodes.empty() && smooth_points.empty() && !whole_component[0] && !whole_component[1]; }
};

// Base points rational over the ground field.
template <class Scalar>
BaseLocus<Scalar> base_locus(const LineBundle<Scalar>& l) {
  const auto space = section_space(l);
  if (space.dimension() == 0) throw std::invalid_argument("base_locus: h0(L) = 0");
  const auto& x = l.curve();
  const Scalar zero = x.zero();
  BaseLocus<Scalar> out;
  for (std::size_t j = 0; j < x.node_count(); ++j) {
    bool all_vanish = true;
    for (const auto& s : space.basis)
      if (s.value(1, x.node(j).p, zero) != zero || s.value(2, x.node(j).q, zero) != zero) all_vanish = false;
    if (all_vanish) out.nodes.push_back(j);
  }
  for (int comp = 1; comp <= 2; ++comp) {
    std::vector<std::vector<Scalar>> forms;
    bool all_zero = true;
    for (const auto& s : space.basis) {
      const auto& f = comp == 1 ? s.f : s.h;
      forms.push_back(f);
      for (const auto& c : f)
        if (c != zero) all_zero = false;
    }
    if (all_zero) {
      out.whole_component[static_cast<std::size_t>(comp - 1)] = true;
      continue;
    }
    for (const auto& pt : common_roots(x.field(), forms))
      if (!x.is_branch_point(comp, pt)) out.smooth_points.push_back({comp, pt});
  }
  return out;
}

}  // namespace bincurve

#endif  // BINCURVE_COHOMOLOGY_HPP
