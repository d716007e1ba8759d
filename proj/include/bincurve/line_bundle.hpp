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

// Line bundles on a binary curve.
//
// A bundle of multidegree (d1, d2) is O(d1) on C1 and O(d2) on C2 with the
// fibres over node j identified by a scalar c_j. Its global sections are pairs
// (f, h) of binary forms of degrees d1, d2 with
//
//     f(p_j) = c_j * h(q_j)   for every node j,
//
// evaluated at the normal-form representatives of ProjPoint. Rescaling all
// c_j by one unit gives an isomorphic bundle, so the gluing vector is stored
// with its last entry equal to 1.

#ifndef BINCURVE_LINE_BUNDLE_HPP
#define BINCURVE_LINE_BUNDLE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "bincurve/curve.hpp"
#include "bincurve/field.hpp"

namespace bincurve {

struct Multidegree {
  int d1 = 0;
  int d2 = 0;

  int total() const { return d1 + d2; }
  Multidegree swapped() const { return {d2, d1}; }

  friend Multidegree operator+(Multidegree a, Multidegree b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
  friend Multidegree operator-(Multidegree a, Multidegree b) { return {a.d1 - b.d1, a.d2 - b.d2}; }
  friend Multidegree operator-(Multidegree a) { return {-a.d1, -a.d2}; }
  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

  // Componentwise order used by stratum closures.
  bool dominates(Multidegree o) const { return d1 >= o.d1 && d2 >= o.d2; }

  std::string to_string() const { return "(" + std::to_string(d1) + "," + std::to_string(d2) + ")"; }
};

template <class Scalar>
struct DivisorPoint {
  int component = 1;  // 1 or 2
  ProjPoint<Scalar> point;
  int multiplicity = 1;

  friend bool operator==(const DivisorPoint&, const DivisorPoint&) = default;
};

// A finite sum of smooth points with positive multiplicities. Points are
// merged and kept sorted by (component, point).
template <class Scalar>
class EffectiveDivisor {
 public:
  EffectiveDivisor() = default;

  EffectiveDivisor& add(int component, const ProjPoint<Scalar>& pt, int multiplicity = 1) {
    if (component != 1 && component != 2) throw std::invalid_argument("EffectiveDivisor: component must be 1 or 2");
    if (multiplicity < 1) throw std::invalid_argument("EffectiveDivisor: multiplicity must be positive");
    for (auto& e : pts_)
      if (e.component == component && e.point == pt) {
        e.multiplicity += multiplicity;
        return *this;
      }
    pts_.push_back({component, pt, multiplicity});
    std::sort(pts_.begin(), pts_.end(), [](const DivisorPoint<Scalar>& a, const DivisorPoint<Scalar>& b) {
      if (a.component != b.component) return a.component < b.component;
      return a.point < b.point;
    });
    return *this;
  }

  const std::vector<DivisorPoint<Scalar>>& points() const { return pts_; }
  bool empty() const { return pts_.empty(); }

  int degree_on(int component) const {
    int d = 0;
    for (const auto& e : pts_)
      if (e.component == component) d += e.multiplicity;
    return d;
  }
  Multidegree multidegree() const { return {degree_on(1), degree_on(2)}; }
  int max_multiplicity() const {
    int m = 0;
    for (const auto& e : pts_) m = std::max(m, e.multiplicity);
    return m;
  }

  friend EffectiveDivisor operator+(EffectiveDivisor a, const EffectiveDivisor& b) {
    for (const auto& e : b.pts_) a.add(e.component, e.point, e.multiplicity);
    return a;
  }
  friend bool operator==(const EffectiveDivisor&, const EffectiveDivisor&) = default;

 private:
  std::vector<DivisorPoint<Scalar>> pts_;
};

template <class Scalar>
class LineBundle {
 public:
  using Curve = BinaryCurve<Scalar>;

  LineBundle(std::shared_ptr<const Curve> curve, Multidegree md, std::vector<Scalar> gluing)
      : curve_(std::move(curve)), md_(md), c_(std::move(gluing)) {
    if (!curve_) throw std::invalid_argument("LineBundle: null curve");
    if (c_.size() != curve_->node_count())
      throw std::invalid_argument("LineBundle: gluing vector needs one entry per node");
    canonicalize();
  }
  LineBundle(const Curve& curve, Multidegree md, std::vector<Scalar> gluing)
      : LineBundle(std::make_shared<const Curve>(curve), md, std::move(gluing)) {}

  const Curve& curve() const { return *curve_; }
  const std::shared_ptr<const Curve>& curve_ptr() const { return curve_; }
  Multidegree multidegree() const { return md_; }
  int degree() const { return md_.total(); }
  const std::vector<Scalar>& gluing() const { return c_; }

 private:
  void canonicalize() {
    for (const auto& v : c_)
      if (v == Scalar(0)) throw std::invalid_argument("LineBundle: gluing scalars must be nonzero");
    if (c_.empty()) return;
    const Scalar inv = c_.back().inverse();
    for (auto& v : c_) v *= inv;
  }

  std::shared_ptr<const Curve> curve_;
  Multidegree md_;
  std::vector<Scalar> c_;
};

template <class Scalar>
bool same_curve(const LineBundle<Scalar>& a, const LineBundle<Scalar>& b) {
  return a.curve_ptr() == b.curve_ptr() || a.curve() == b.curve();
}

namespace detail {
template <class Scalar>
void require_same_curve(const LineBundle<Scalar>& a, const LineBundle<Scalar>& b, const char* op) {
  if (!same_curve(a, b)) throw std::invalid_argument(std::string(op) + ": bundles live on different curves");
}
}  // namespace detail

template <class Scalar>
LineBundle<Scalar> trivial(const BinaryCurve<Scalar>& x) {
  return LineBundle<Scalar>(x, {0, 0}, std::vector<Scalar>(x.node_count(), x.one()));
}
template <class Scalar>
LineBundle<Scalar> trivial(const std::shared_ptr<const BinaryCurve<Scalar>>& x) {
  return LineBundle<Scalar>(x, {0, 0}, std::vector<Scalar>(x->node_count(), x->one()));
}

template <class Scalar>
LineBundle<Scalar> tensor(const LineBundle<Scalar>& a, const LineBundle<Scalar>& b) {
  detail::require_same_curve(a, b, "tensor");
  std::vector<Scalar> c = a.gluing();
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= b.gluing()[j];
  return LineBundle<Scalar>(a.curve_ptr(), a.multidegree() + b.multidegree(), std::move(c));
}

template <class Scalar>
LineBundle<Scalar> dual(const LineBundle<Scalar>& a) {
  std::vector<Scalar> c = a.gluing();
  for (auto& v : c) v = v.inverse();
  return LineBundle<Scalar>(a.curve_ptr(), -a.multidegree(), std::move(c));
}

// L^n for any integer n.
template <class Scalar>
LineBundle<Scalar> power(const LineBundle<Scalar>& a, int n) {
  LineBundle<Scalar> base = n < 0 ? dual(a) : a;
  LineBundle<Scalar> out = trivial(a.curve_ptr());
  for (int k = 0; k < (n < 0 ? -n : n); ++k) out = tensor(out, base);
  return out;
}

// Multiplies the gluing vector by a unit; always isomorphic to the input.
template <class Scalar>
LineBundle<Scalar> scale(const LineBundle<Scalar>& a, const Scalar& lambda) {
  std::vector<Scalar> c = a.gluing();
  for (auto& v : c) v *= lambda;
  return LineBundle<Scalar>(a.curve_ptr(), a.multidegree(), std::move(c));
}

template <class Scalar>
bool is_isomorphic(const LineBundle<Scalar>& a, const LineBundle<Scalar>& b) {
  detail::require_same_curve(a, b, "is_isomorphic");
  return a.multidegree() == b.multidegree() && a.gluing() == b.gluing();
}

// Coefficients (index k <-> x^k y^(d-k)) of prod_i bracket(., v_i)^{m_i}, the
// binary form vanishing exactly on the given points of one component.
template <class Scalar>
std::vector<Scalar> form_vanishing_on(const FieldCtx& ctx, const EffectiveDivisor<Scalar>& d, int component) {
  std::vector<Scalar> f{make_scalar<Scalar>(ctx, 1)};
  for (const auto& e : d.points()) {
    if (e.component != component) continue;
    // bracket(v, w) = w.y * x - w.x * y
    for (int m = 0; m < e.multiplicity; ++m) {
      std::vector<Scalar> g(f.size() + 1, make_scalar<Scalar>(ctx, 0));
      for (std::size_t k = 0; k < f.size(); ++k) {
        g[k + 1] += f[k] * e.point.y();
        g[k] -= f[k] * e.point.x();
      }
      f = std::move(g);
    }
  }
  return f;
}

// The Abel map: O_X(D) for an effective divisor on the smooth locus. The
// section cutting out D is (A, B) with A, B the forms vanishing on the two
// parts of D, so c_j = A(p_j) / B(q_j).
template <class Scalar>
LineBundle<Scalar> from_divisor(const std::shared_ptr<const BinaryCurve<Scalar>>& x, const EffectiveDivisor<Scalar>& d) {
  for (const auto& e : d.points())
    if (x->is_branch_point(e.component, e.point))
      throw std::invalid_argument("from_divisor: divisor point " + e.point.to_string() + " lies on a node");
  std::vector<Scalar> c;
  c.reserve(x->node_count());
  for (const auto& n : x->nodes()) {
    Scalar a = x->one();
    Scalar b = x->one();
    for (const auto& e : d.points()) {
      const Scalar& v = e.component == 1 ? bracket(n.p, e.point) : bracket(n.q, e.point);
      for (int m = 0; m < e.multiplicity; ++m) (e.component == 1 ? a : b) *= v;
    }
    c.push_back(a / b);
  }
  return LineBundle<Scalar>(x, d.multidegree(), std::move(c));
}
template <class Scalar>
LineBundle<Scalar> from_divisor(const BinaryCurve<Scalar>& x, const EffectiveDivisor<Scalar>& d) {
  return from_divisor(std::make_shared<const BinaryCurve<Scalar>>(x), d);
}

// Carries a bundle along coordinate changes of the two components. If
// A rep(p) = l * rep(A p), then f o A^{-1} takes the value l^{-d1} f(p) at A p,
// hence c'_j = c_j * l_j^{-d1} * m_j^{d2}.
template <class Scalar>
LineBundle<Scalar> transform(const LineBundle<Scalar>& l, const MoebiusMap<Scalar>& on_c1,
                             const MoebiusMap<Scalar>& on_c2) {
  const auto& x = l.curve();
  auto y = std::make_shared<const BinaryCurve<Scalar>>(transform(x, on_c1, on_c2));
  const Multidegree md = l.multidegree();
  std::vector<Scalar> c = l.gluing();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Scalar lam = on_c1.scale_at(x.node(j).p);
    const Scalar mu = on_c2.scale_at(x.node(j).q);
    const auto raise = [&](const Scalar& s, int e) {
      return e >= 0 ? power(s, e, x.one()) : power(s.inverse(), -e, x.one());
    };
    c[j] *= raise(lam, -md.d1) * raise(mu, md.d2);
  }
  return LineBundle<Scalar>(y, md, std::move(c));
}

// Pullback to the normalization at S; the surviving gluing scalars are kept.
template <class Scalar>
LineBundle<Scalar> restrict_to_normalization(const LineBundle<Scalar>& l, const NodeSubset& s) {
  auto norm = normalize_at(l.curve(), s);
  std::vector<Scalar> c;
  for (std::size_t j : norm.kept) c.push_back(l.gluing()[j]);
  return LineBundle<Scalar>(norm.curve, l.multidegree(), std::move(c));
}

// Declared here, defined in cohomology.hpp; the distinguished bundles below
// check their own section counts.
template <class Scalar>
int h0(const LineBundle<Scalar>& l);

// The dualizing sheaf. Sections on C_i are f * Omega / prod_k bracket(., v_k)
// with Omega = x dy - y dx; the residue at v_j is -f(v_j) / P_j with
// P_j = prod_{k != j} bracket(v_j, v_k). Opposite residues at the two branches
// of each node give c_j = -P_j / Q_j. The formula is SL2-covariant, so nodes
// at infinity need no special treatment.
template <class Scalar>
LineBundle<Scalar> canonical_bundle(const BinaryCurve<Scalar>& x) {
  if (x.genus() < 0) throw std::invalid_argument("canonical_bundle: curve must be connected");
  const auto& n = x.nodes();
  std::vector<Scalar> c;
  for (std::size_t j = 0; j < n.size(); ++j) {
    Scalar pj = x.one();
    Scalar qj = x.one();
    for (std::size_t k = 0; k < n.size(); ++k) {
      if (k == j) continue;
      pj *= bracket(n[j].p, n[k].p);
      qj *= bracket(n[j].q, n[k].q);
    }
    c.push_back(-(pj / qj));
  }
  LineBundle<Scalar> omega(x, {x.genus() - 1, x.genus() - 1}, std::move(c));
  if (h0(omega) != x.genus())
    throw std::logic_error("canonical_bundle: h0 = " + std::to_string(h0(omega)) + ", expected the genus");
  return omega;
}

// The hyperelliptic class: pullback of O(1) under the double cover equal to t
// on C1 and psi^{-1} on C2. With psi^{-1} rep(q_j) = k_j rep(p_j) the gluing
// is c_j = 1 / k_j.
template <class Scalar>
LineBundle<Scalar> hyperelliptic_class(const BinaryCurve<Scalar>& x) {
  const auto test = is_hyperelliptic_fast(x);
  if (!test.hyperelliptic) throw std::invalid_argument("hyperelliptic_class: curve is not hyperelliptic");
  const MoebiusMap<Scalar> back = test.psi->inverse();
  std::vector<Scalar> c;
  for (const auto& n : x.nodes()) c.push_back(back.scale_at(n.q).inverse());
  LineBundle<Scalar> h(x, {1, 1}, std::move(c));
  if (h0(h) != 2) throw std::logic_error("hyperelliptic_class: h0 != 2");
  return h;
}

// All (p-1)^g isomorphism classes of multidegree md over F_p, addressable by
// index so that ranges can be scanned independently. Index i lists c_1..c_g
// as base-(p-1) digits, c_1 most significant, each digit shifted by one;
// c_{g+1} is fixed to 1.
class BundleEnumerator {
 public:
  BundleEnumerator(std::shared_ptr<const BinaryCurve<Fp>> x, Multidegree md);
  BundleEnumerator(const BinaryCurve<Fp>& x, Multidegree md)
      : BundleEnumerator(std::make_shared<const BinaryCurve<Fp>>(x), md) {}

  std::uint64_t size() const { return size_; }
  std::vector<Fp> gluing(std::uint64_t index) const;
  LineBundle<Fp> at(std::uint64_t index) const { return LineBundle<Fp>(curve_, md_, gluing(index)); }
  // Inverse of gluing(); the input must be in canonical form.
  std::uint64_t index_of(const std::vector<Fp>& canonical_gluing) const;

  const BinaryCurve<Fp>& curve() const { return *curve_; }
  const std::shared_ptr<const BinaryCurve<Fp>>& curve_ptr() const { return curve_; }
  Multidegree multidegree() const { return md_; }

 private:
  std::shared_ptr<const BinaryCurve<Fp>> curve_;
  Multidegree md_;
  std::uint64_t size_ = 1;
};

}  // namespace bincurve

#include "bincurve/cohomology.hpp"

#endif  // BINCURVE_LINE_BUNDLE_HPP
