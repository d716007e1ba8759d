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

// Balanced multidegrees and the stratification of the compactified Picard
// variety of a binary curve.
//
// A multidegree of total d on genus g is balanced when both parts lie in
// [m, M] with m = (d-g-1)/2 and M = (d+g+1)/2, strictly balanced on the open
// interval. Every boundary point is a pair [M, S]: a node subset S and a
// strictly balanced class on the normalization Y_S. When m is an integer the
// classes whose multidegree sits on the interval's ends all collapse to one
// extra point, ell0.

#ifndef BINCURVE_PICARD_HPP
#define BINCURVE_PICARD_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bincurve/cohomology.hpp"
#include "bincurve/curve.hpp"
#include "bincurve/field.hpp"
#include "bincurve/line_bundle.hpp"

namespace bincurve {

struct BalancedBounds {
  Rational m;
  Rational M;
  bool m_integral() const { return m.is_integer(); }
};

BalancedBounds bounds(int d, int g);
bool is_balanced(Multidegree md, int g);
bool is_strictly_balanced(Multidegree md, int g);

// Ascending in d1.
std::vector<Multidegree> balanced_set(int d, int g);
std::vector<Multidegree> strict_set(int d, int g);

// dhat = (d1, d2, degrees on the e exceptional components).
bool is_balanced_blowup(std::span<const int> dhat, int g);

enum class PicardType { kNeron, kDegeneration };

PicardType picard_type(int d, int g);
std::string to_string(PicardType t);

struct StratumKey {
  NodeSubset s;
  Multidegree md;  // on Y_S, total d - #S
  friend bool operator==(const StratumKey&, const StratumKey&) = default;
};

struct Ell0 {
  int d = 0;
  int g = 0;
};

struct StrataListing {
  PicardType type;
  int d = 0;
  int g = 0;
  std::vector<StratumKey> strata;  // by #S, then S, then d1
  std::optional<Ell0> ell0;        // present exactly for the degeneration type
};

int stratum_dimension(const StratumKey& key, int g);
bool is_strict_key(const StratumKey& key, int d, int g);

// Combinatorial listing for any curve of genus g >= 2 in degree d.
StrataListing strata_keys(int g, int d);

// True iff b lies in the closure of a.
bool closure_leq(const StratumKey& a, const StratumKey& b);

template <class Scalar>
struct Stratum {
  StratumKey key;
  BinaryCurve<Scalar> curve;  // Y_S
  int dimension = 0;
};

template <class Scalar>
struct StrataOfCurve {
  PicardType type;
  std::vector<Stratum<Scalar>> strata;
  std::optional<Ell0> ell0;
};

template <class Scalar>
StrataOfCurve<Scalar> enumerate_strata(const BinaryCurve<Scalar>& x, int d) {
  const StrataListing listing = strata_keys(x.genus(), d);
  StrataOfCurve<Scalar> out{listing.type, {}, listing.ell0};
  for (const auto& key : listing.strata)
    out.strata.push_back({key, normalize_at(x, key.s).curve, stratum_dimension(key, x.genus())});
  return out;
}

template <class Scalar>
struct PicardPoint {
  NodeSubset s;
  LineBundle<Scalar> bundle;  // on Y_S
};

// [M, S] after checking that M lives on Y_S with a strictly balanced multidegree.
template <class Scalar>
PicardPoint<Scalar> make_picard_point(const BinaryCurve<Scalar>& x, const NodeSubset& s, const LineBundle<Scalar>& m) {
  if (!(normalize_at(x, s).curve == m.curve()))
    throw std::invalid_argument("make_picard_point: bundle does not live on the normalization");
  if (!is_strictly_balanced(m.multidegree(), m.curve().genus()))
    throw std::invalid_argument("make_picard_point: multidegree " + m.multidegree().to_string() +
                                " is not strictly balanced on Y_S");
  return {s, m};
}

// h0 on the blow-up equals h0 of M on Y_S.
template <class Scalar>
int h0_bar(const PicardPoint<Scalar>& pt) {
  return h0(pt.bundle);
}

// ell0 is represented on the total normalization by O(m) + O(m).
int h0_bar(const Ell0& pt);

template <class Scalar>
using PicardPointOrEll0 = std::variant<PicardPoint<Scalar>, Ell0>;

}  // namespace bincurve

#endif  // BINCURVE_PICARD_HPP
