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

// Binary curves: two projective lines C1, C2 glued at g+1 node pairs.

#ifndef BINCURVE_CURVE_HPP
#define BINCURVE_CURVE_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bincurve/field.hpp"
#include "bincurve/linalg.hpp"
#include "bincurve/rng.hpp"

namespace bincurve {

// A point of P^1 in normal form: (a, 1) for finite a, (1, 0) for infinity.
// Every evaluation in the library uses exactly this representative.
template <class Scalar>
class ProjPoint {
 public:
  static ProjPoint finite(const FieldCtx& ctx, const Scalar& a) {
    return ProjPoint(a, make_scalar<Scalar>(ctx, 1));
  }
  static ProjPoint finite(const FieldCtx& ctx, std::int64_t a) {
    return finite(ctx, make_scalar<Scalar>(ctx, a));
  }
  static ProjPoint infinity(const FieldCtx& ctx) {
    return ProjPoint(make_scalar<Scalar>(ctx, 1), make_scalar<Scalar>(ctx, 0));
  }
  // Normalizes an arbitrary nonzero homogeneous pair.
  static ProjPoint from_homogeneous(const FieldCtx& ctx, const Scalar& x, const Scalar& y) {
    if (y != Scalar(0)) return finite(ctx, x / y);
    if (x == Scalar(0)) throw std::invalid_argument("ProjPoint: (0, 0) is not a point");
    return infinity(ctx);
  }

  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  bool is_infinity() const { return y_ == Scalar(0); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  // Finite points by value, infinity last.
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() != b.is_infinity())
      return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.is_infinity()) return std::strong_ordering::equal;
    return a.x_ <=> b.x_;
  }

  std::string to_string() const { return is_infinity() ? "inf" : x_.to_string(); }

 private:
  ProjPoint(Scalar x, Scalar y) : x_(std::move(x)), y_(std::move(y)) {}
  Scalar x_;
  Scalar y_;
};

// det(v, w) of the fixed representatives; zero iff v == w.
template <class Scalar>
Scalar bracket(const ProjPoint<Scalar>& v, const ProjPoint<Scalar>& w) {
  return v.x() * w.y() - v.y() * w.x();
}

template <class Scalar>
struct Node {
  ProjPoint<Scalar> p;  // branch on C1
  ProjPoint<Scalar> q;  // branch on C2
  friend bool operator==(const Node&, const Node&) = default;
};

template <class Scalar>
class BinaryCurve {
 public:
  BinaryCurve(FieldCtx ctx, std::vector<Node<Scalar>> nodes) : ctx_(ctx), nodes_(std::move(nodes)) {
    if (!FieldTraits<Scalar>::accepts(ctx_))
      throw std::invalid_argument("BinaryCurve: scalar type does not realize " + bincurve::to_string(ctx_));
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
        if (nodes_[i].p == nodes_[j].p)
          throw std::invalid_argument("BinaryCurve: repeated branch point on C1");
        if (nodes_[i].q == nodes_[j].q)
          throw std::invalid_argument("BinaryCurve: repeated branch point on C2");
      }
  }

  const FieldCtx& field() const { return ctx_; }
  int genus() const { return static_cast<int>(nodes_.size()) - 1; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<Node<Scalar>>& nodes() const { return nodes_; }
  const Node<Scalar>& node(std::size_t j) const { return nodes_.at(j); }

  Scalar scalar(std::int64_t v) const { return make_scalar<Scalar>(ctx_, v); }
  Scalar zero() const { return scalar(0); }
  Scalar one() const { return scalar(1); }

  // Branch point of node j on component 1 or 2.
  const ProjPoint<Scalar>& branch(int component, std::size_t j) const {
    return component == 1 ? nodes_.at(j).p : nodes_.at(j).q;
  }
  bool is_branch_point(int component, const ProjPoint<Scalar>& pt) const {
    return std::any_of(nodes_.begin(), nodes_.end(), [&](const Node<Scalar>& n) {
      return (component == 1 ? n.p : n.q) == pt;
    });
  }

  friend bool operator==(const BinaryCurve& a, const BinaryCurve& b) {
    return a.ctx_ == b.ctx_ && a.nodes_ == b.nodes_;
  }

 private:
  FieldCtx ctx_;
  std::vector<Node<Scalar>> nodes_;
};

// A set of node indices (0-based), kept sorted.
class NodeSubset {
 public:
  NodeSubset() = default;
  NodeSubset(std::vector<std::size_t> indices, std::size_t node_count) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
      throw std::invalid_argument("NodeSubset: repeated index");
    if (!idx_.empty() && idx_.back() >= node_count)
      throw std::invalid_argument("NodeSubset: index out of range");
  }

  const std::vector<std::size_t>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  bool contains(std::size_t j) const { return std::binary_search(idx_.begin(), idx_.end(), j); }
  bool is_subset_of(const NodeSubset& o) const {
    return std::includes(o.idx_.begin(), o.idx_.end(), idx_.begin(), idx_.end());
  }

  friend bool operator==(const NodeSubset&, const NodeSubset&) = default;
  friend auto operator<=>(const NodeSubset&, const NodeSubset&) = default;

 private:
  std::vector<std::size_t> idx_;
};

// All subsets of {0..n-1} of size k, lexicographic.
std::vector<NodeSubset> subsets_of_size(std::size_t n, std::size_t k);

template <class Scalar>
struct Normalization {
  BinaryCurve<Scalar> curve;                // Y_S
  std::vector<Node<Scalar>> removed;        // branch pairs of S, in S order
  std::vector<std::size_t> kept;            // X-index of each node of Y_S
};

template <class Scalar>
Normalization<Scalar> normalize_at(const BinaryCurve<Scalar>& x, const NodeSubset& s) {
  if (!s.empty() && s.indices().back() >= x.node_count())
    throw std::invalid_argument("normalize_at: subset does not fit the curve");
  std::vector<Node<Scalar>> nodes;
  std::vector<Node<Scalar>> removed;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < x.node_count(); ++j) {
    if (s.contains(j)) {
      removed.push_back(x.node(j));
    } else {
      nodes.push_back(x.node(j));
      kept.push_back(j);
    }
  }
  return {BinaryCurve<Scalar>(x.field(), std::move(nodes)), std::move(removed), std::move(kept)};
}

// Glues additional branch pairs, appended after the existing nodes.
template <class Scalar>
BinaryCurve<Scalar> reglue(const BinaryCurve<Scalar>& y, const std::vector<Node<Scalar>>& pairs) {
  std::vector<Node<Scalar>> nodes = y.nodes();
  nodes.insert(nodes.end(), pairs.begin(), pairs.end());
  return BinaryCurve<Scalar>(y.field(), std::move(nodes));
}

// A fractional linear transformation t -> (a t + b) / (c t + d), stored as a
// 2x2 matrix up to scalar with first nonzero entry 1.
template <class Scalar>
class MoebiusMap {
 public:
  using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

  MoebiusMap(const FieldCtx& ctx, Mat2 m) : ctx_(ctx), m_(std::move(m)) {
    if (m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0) == Scalar(0))
      throw std::invalid_argument("MoebiusMap: singular matrix");
    Scalar lead = m_(0, 0) != Scalar(0) ? m_(0, 0) : m_(0, 1);
    const Scalar inv = lead.inverse();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m_(i, j) *= inv;
  }

  static MoebiusMap identity(const FieldCtx& ctx) {
    Mat2 m;
    m << make_scalar<Scalar>(ctx, 1), make_scalar<Scalar>(ctx, 0), make_scalar<Scalar>(ctx, 0),
        make_scalar<Scalar>(ctx, 1);
    return MoebiusMap(ctx, m);
  }

  const Mat2& matrix() const { return m_; }
  const FieldCtx& field() const { return ctx_; }

  ProjPoint<Scalar> operator()(const ProjPoint<Scalar>& v) const {
    return ProjPoint<Scalar>::from_homogeneous(ctx_, m_(0, 0) * v.x() + m_(0, 1) * v.y(),
                                               m_(1, 0) * v.x() + m_(1, 1) * v.y());
  }

  // The scalar k with M * rep(v) = k * rep(M(v)).
  Scalar scale_at(const ProjPoint<Scalar>& v) const {
    const Scalar x = m_(0, 0) * v.x() + m_(0, 1) * v.y();
    const Scalar y = m_(1, 0) * v.x() + m_(1, 1) * v.y();
    const ProjPoint<Scalar> w = (*this)(v);
    return w.is_infinity() ? x : y;
  }

  MoebiusMap inverse() const {
    Mat2 adj;
    adj << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return MoebiusMap(ctx_, adj);
  }

  // (this o other)(t) = this(other(t)).
  MoebiusMap compose(const MoebiusMap& other) const { return MoebiusMap(ctx_, m_ * other.m_); }

  friend bool operator==(const MoebiusMap& a, const MoebiusMap& b) { return a.m_ == b.m_; }

 private:
  FieldCtx ctx_;
  Mat2 m_;
};

namespace detail {

// Matrix sending 0 -> v1, 1 -> v2, infinity -> v3.
template <class Scalar>
typename MoebiusMap<Scalar>::Mat2 standard_frame(const ProjPoint<Scalar>& v1, const ProjPoint<Scalar>& v2,
                                                 const ProjPoint<Scalar>& v3) {
  const Scalar den = bracket(v1, v3);
  if (den == Scalar(0) || bracket(v1, v2) == Scalar(0) || bracket(v2, v3) == Scalar(0))
    throw std::invalid_argument("moebius_through: points must be pairwise distinct");
  const Scalar alpha = bracket(v2, v3) / den;
  const Scalar beta = bracket(v1, v2) / den;
  typename MoebiusMap<Scalar>::Mat2 m;
  m << beta * v3.x(), alpha * v1.x(), beta * v3.y(), alpha * v1.y();
  return m;
}

}  // namespace detail

// The unique Moebius map with a[i] -> b[i].
template <class Scalar>
MoebiusMap<Scalar> moebius_through(const FieldCtx& ctx, const std::array<ProjPoint<Scalar>, 3>& a,
                                   const std::array<ProjPoint<Scalar>, 3>& b) {
  const auto ma = detail::standard_frame(a[0], a[1], a[2]);
  const auto mb = detail::standard_frame(b[0], b[1], b[2]);
  typename MoebiusMap<Scalar>::Mat2 adj;
  adj << ma(1, 1), -ma(0, 1), -ma(1, 0), ma(0, 0);
  return MoebiusMap<Scalar>(ctx, mb * adj);
}

// Applies independent coordinate changes to the two components.
template <class Scalar>
BinaryCurve<Scalar> transform(const BinaryCurve<Scalar>& x, const MoebiusMap<Scalar>& on_c1,
                              const MoebiusMap<Scalar>& on_c2) {
  std::vector<Node<Scalar>> nodes;
  nodes.reserve(x.node_count());
  for (const auto& n : x.nodes()) nodes.push_back({on_c1(n.p), on_c2(n.q)});
  return BinaryCurve<Scalar>(x.field(), std::move(nodes));
}

// Every point of P^1(F_p): 0..p-1, then infinity.
std::vector<ProjPoint<Fp>> projective_line(const FieldCtx& ctx);

// Points of component 1 or 2 that are not branch points.
std::vector<ProjPoint<Fp>> smooth_points(const BinaryCurve<Fp>& x, int component);

// Every curve of genus g >= 1 over F_p in the normal form of random_curve, up
// to reordering the free nodes (their C1 points increase). Genus 1 has the
// single curve (0,0), (inf,inf).
std::vector<BinaryCurve<Fp>> normal_form_curves(int g, const FieldCtx& ctx);

// Samples the standard marked model: g-2 random finite node pairs avoiding
// {0, 1}, followed by (0,0), (1,1), (inf,inf). Over F_p requires p >= g+3;
// over Q the free coordinates are integers in [-50, 50].
template <class Scalar>
BinaryCurve<Scalar> random_curve(int g, const FieldCtx& ctx, Rng& rng) {
  if (g < 2) throw std::invalid_argument("random_curve: genus must be at least 2");
  std::vector<std::int64_t> pool;
  if (ctx.is_prime_field()) {
    const std::int64_t p = ctx.characteristic();
    if (p < g + 3)
      throw std::invalid_argument("random_curve: F_" + std::to_string(p) + " is too small for genus " +
                                  std::to_string(g) + " (need p >= g+3)");
    for (std::int64_t v = 2; v < p; ++v) pool.push_back(v);
  } else {
    for (std::int64_t v = -50; v <= 50; ++v)
      if (v != 0 && v != 1) pool.push_back(v);
  }
  const auto sample = [&](std::size_t k) {
    std::vector<std::int64_t> candidates = pool;
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(candidates.size() - i));
      std::swap(candidates[i], candidates[j]);
      out.push_back(candidates[i]);
    }
    return out;
  };
  const std::size_t free = static_cast<std::size_t>(g - 2);
  const std::vector<std::int64_t> on_c1 = sample(free);
  const std::vector<std::int64_t> on_c2 = sample(free);

  std::vector<Node<Scalar>> nodes;
  for (std::size_t i = 0; i < free; ++i)
    nodes.push_back({ProjPoint<Scalar>::finite(ctx, on_c1[i]), ProjPoint<Scalar>::finite(ctx, on_c2[i])});
  nodes.push_back({ProjPoint<Scalar>::finite(ctx, 0), ProjPoint<Scalar>::finite(ctx, 0)});
  nodes.push_back({ProjPoint<Scalar>::finite(ctx, 1), ProjPoint<Scalar>::finite(ctx, 1)});
  nodes.push_back({ProjPoint<Scalar>::infinity(ctx), ProjPoint<Scalar>::infinity(ctx)});
  return BinaryCurve<Scalar>(ctx, std::move(nodes));
}

template <class Scalar>
struct HyperellipticTest {
  bool hyperelliptic = false;
  std::optional<MoebiusMap<Scalar>> psi;  // sends every p_j to q_j
};

// X is hyperelliptic iff one Moebius map carries every p_j to q_j. The map is
// pinned by the first three nodes, so the test is linear in the node count.
template <class Scalar>
HyperellipticTest<Scalar> is_hyperelliptic_fast(const BinaryCurve<Scalar>& x) {
  if (x.genus() < 2) throw std::invalid_argument("is_hyperelliptic_fast: genus must be at least 2");
  const auto& n = x.nodes();
  auto psi = moebius_through<Scalar>(x.field(), {n[0].p, n[1].p, n[2].p}, {n[0].q, n[1].q, n[2].q});
  for (std::size_t j = 3; j < n.size(); ++j)
    if (psi(n[j].p) != n[j].q) return {false, std::nullopt};
  return {true, std::move(psi)};
}

// For a non-hyperelliptic curve of genus >= 4: the first node whose one-node
// normalization is still non-hyperelliptic. nullopt would contradict the
// theory and is asserted against in the tests.
template <class Scalar>
std::optional<std::size_t> hyperelliptic_witness_node(const BinaryCurve<Scalar>& x) {
  if (x.genus() < 4) throw std::invalid_argument("hyperelliptic_witness_node: genus must be at least 4");
  if (is_hyperelliptic_fast(x).hyperelliptic)
    throw std::invalid_argument("hyperelliptic_witness_node: curve is hyperelliptic");
  for (std::size_t j = 0; j < x.node_count(); ++j) {
    const auto y = normalize_at(x, NodeSubset({j}, x.node_count()));
    if (!is_hyperelliptic_fast(y.curve).hyperelliptic) return j;
  }
  return std::nullopt;
}

}  // namespace bincurve

#endif  // BINCURVE_CURVE_HPP
