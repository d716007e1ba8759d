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


#include "bincurve/cohomology.hpp"

#include "doctest.h"

using namespace bincurve;

namespace {

const FieldCtx F7 = FieldCtx::prime(7);
const FieldCtx F11 = FieldCtx::prime(11);

ProjPoint<Fp> pt(std::int64_t a, const FieldCtx& f = F7) { return ProjPoint<Fp>::finite(f, a); }
ProjPoint<Fp> inf(const FieldCtx& f = F7) { return ProjPoint<Fp>::infinity(f); }

std::shared_ptr<const BinaryCurve<Fp>> make(const FieldCtx& f, std::vector<Node<Fp>> nodes) {
  return std::make_shared<const BinaryCurve<Fp>>(f, std::move(nodes));
}

std::shared_ptr<const BinaryCurve<Fp>> genus2(const FieldCtx& f = F7) {
  return make(f, {{pt(0, f), pt(0, f)}, {pt(1, f), pt(1, f)}, {inf(f), inf(f)}});
}

// psi = identity: the hyperelliptic conjugate of t on C1 is t on C2.
std::shared_ptr<const BinaryCurve<Fp>> hyperelliptic3(const FieldCtx& f = F7) {
  return make(f, {{pt(0, f), pt(0, f)}, {pt(1, f), pt(1, f)}, {inf(f), inf(f)}, {pt(3, f), pt(3, f)}});
}

std::shared_ptr<const BinaryCurve<Fp>> nonhyperelliptic4(const FieldCtx& f = F11) {
  return make(f, {{pt(0, f), pt(0, f)}, {pt(1, f), pt(1, f)}, {inf(f), inf(f)}, {pt(2, f), pt(3, f)},
                  {pt(4, f), pt(7, f)}});
}

EffectiveDivisor<Fp> divisor(std::initializer_list<SmoothPoint<Fp>> pts) {
  EffectiveDivisor<Fp> d;
  for (const auto& p : pts) d.add(p.component, p.point);
  return d;
}

}  // namespace

TEST_CASE("h0 of degree zero on a genus one curve") {
  const auto x = make(F7, {{pt(0), pt(0)}, {pt(1), pt(1)}});
  for (std::int64_t lam = 1; lam < 7; ++lam) {
    const LineBundle<Fp> l(x, {0, 0}, {Fp(1, 7), Fp(lam, 7)});
    CHECK(h0(l) == (lam == 1 ? 1 : 0));
  }
}

TEST_CASE("balanced degree three on genus two has two sections") {
  const auto x = genus2();
  for (Multidegree md : {Multidegree{1, 2}, Multidegree{2, 1}, Multidegree{0, 3}, Multidegree{3, 0}}) {
    BundleEnumerator en(x, md);
    for (std::uint64_t i = 0; i < en.size(); ++i) CHECK(h0(en.at(i)) == 2);
  }
}

TEST_CASE("negative degree on one component") {
  Rng rng(8);
  for (int g = 2; g <= 4; ++g) {
    const auto x = std::make_shared<const BinaryCurve<Fp>>(random_curve<Fp>(g, F11, rng));
    for (int d2 = -1; d2 <= g + 3; ++d2) {
      BundleEnumerator en(x, {-1, d2});
      for (std::uint64_t i = 0; i < en.size(); i += 97) CHECK(h0(en.at(i)) == std::max(0, d2 - g));
    }
  }
}

TEST_CASE("h1 from Riemann-Roch") {
  Rng rng(4);
  for (int g = 2; g <= 5; ++g) {
    const auto x = random_curve<Fp>(g, F11, rng);
    CHECK(h1(canonical_bundle(x)) == 1);
    CHECK(h1(trivial(x)) == g);
  }
  const auto x = genus2();
  BundleEnumerator en(x, {2, 1});
  for (std::uint64_t i = 0; i < en.size(); ++i) CHECK(h1(en.at(i)) == 0);
}

TEST_CASE("vanishing conditions") {
  const auto x = hyperelliptic3();
  const auto w = canonical_bundle(*x);
  CHECK(h0_vanishing(w, EffectiveDivisor<Fp>{}) == h0(w));
  const LineBundle<Fp> none(x, {0, 0}, {Fp(2, 7), Fp(1, 7), Fp(1, 7), Fp(1, 7)});
  REQUIRE(h0(none) == 0);
  CHECK(h0_vanishing(none, divisor({{1, pt(4)}})) == 0);

  // Conjugate pairs drop only one condition.
  for (std::int64_t t : {2, 4, 5, 6}) {
    CHECK(h0_vanishing(w, divisor({{1, pt(t)}, {2, pt(t)}})) == 2);
    CHECK(h0_vanishing(w, divisor({{1, pt(t)}, {2, pt(t == 2 ? 4 : 2)}})) == 1);
  }
  for (const auto& v : smooth_points(*x, 1)) {
    const int a = h0_vanishing(w, divisor({{1, v}}));
    CHECK(a >= h0(w) - 1);
    CHECK(a <= h0(w));
  }
  CHECK_THROWS(h0_vanishing(w, divisor({{1, pt(3)}})));
}

TEST_CASE("multiplicity via derivatives") {
  const auto x = nonhyperelliptic4();
  const auto w = canonical_bundle(*x);
  EffectiveDivisor<Fp> twice;
  twice.add(1, pt(5, F11), 2);
  // The form vanishing doubly at 5 cuts out exactly what two derivative rows do.
  EffectiveDivisor<Fp> d;
  d.add(1, pt(5, F11), 2).add(2, pt(6, F11));
  const auto l = from_divisor(x, d);
  CHECK(h0_vanishing(l, twice) >= 1);
  CHECK(h0_vanishing(w, twice) == 2);
  EffectiveDivisor<Fp> at_inf;
  at_inf.add(1, inf(F11));
  const auto xs = make(F11, {{pt(0, F11), pt(0, F11)}, {pt(1, F11), pt(1, F11)}, {pt(2, F11), inf(F11)}});
  EffectiveDivisor<Fp> d2;
  d2.add(1, inf(F11), 2);
  const auto m = from_divisor(xs, d2);
  CHECK(h0_vanishing(m, d2) == 1);
  EffectiveDivisor<Fp> d3;
  d3.add(1, inf(F11), 3);
  CHECK(h0_vanishing(m, d3) == 0);
  // Degree 2g-2 = 6 needs p > 7.
  const auto small = make(F7, {{pt(0), pt(0)}, {pt(1), pt(1)}, {inf(), inf()}, {pt(2), pt(3)}, {pt(4), pt(6)}});
  EffectiveDivisor<Fp> tw;
  tw.add(1, pt(5), 2);
  CHECK_THROWS_AS(h0_vanishing(canonical_bundle(*small), tw), std::domain_error);
}

TEST_CASE("neutral pairs") {
  const auto x = hyperelliptic3();
  const LineBundle<Fp> zero(x, {0, 0}, {Fp(2, 7), Fp(1, 7), Fp(1, 7), Fp(1, 7)});
  CHECK(neutral_pair(zero, {1, pt(2)}, {2, pt(4)}));
  const auto w = canonical_bundle(*x);
  CHECK(neutral_pair(w, {1, pt(4)}, {2, pt(4)}));

  const auto y = nonhyperelliptic4();
  const auto wy = canonical_bundle(*y);
  CHECK(!neutral_pair(wy, {1, pt(5, F11)}, {2, pt(9, F11)}));
  CHECK_THROWS(neutral_pair(wy, {1, pt(5, F11)}, {1, pt(5, F11)}));
}

TEST_CASE("descent") {
  // One-node curve, trivial bundle, reglue a second node: O of genus one.
  const auto y0 = make(F7, {{pt(0), pt(0)}});
  const auto r = descend(trivial(y0), {{pt(1), pt(1)}});
  REQUIRE(r.exists);
  CHECK(r.unique);
  CHECK(h0(*r.bundle) == 1);
  CHECK(is_isomorphic(*r.bundle, trivial(r.bundle->curve_ptr())));

  // A section vanishing at p but not at q blocks descent.
  const LineBundle<Fp> m(y0, {1, 0}, {Fp(1, 7)});
  CHECK(!descend(m, {{pt(1), pt(1)}}).exists);

  // Hyperelliptic normalization, M = H_Y, conjugate pair.
  const auto hy = genus2();
  const auto h = hyperelliptic_class(*hy);
  const auto d = descend(h, {{pt(4), pt(4)}});
  REQUIRE(d.exists);
  CHECK(d.unique);
  CHECK(h0(*d.bundle) == 2);

  CHECK_THROWS(descend(LineBundle<Fp>(y0, {-1, 0}, {Fp(1, 7)}), {{pt(1), pt(1)}}));
}

TEST_CASE("descent agrees with neutrality") {
  Rng rng(13);
  int exists = 0, blocked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto y = std::make_shared<const BinaryCurve<Fp>>(random_curve<Fp>(2, F7, rng));
    const Multidegree md{static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4))};
    std::vector<Fp> c;
    for (int j = 0; j < 3; ++j) c.emplace_back(static_cast<std::int64_t>(1 + rng.below(6)), 7);
    const LineBundle<Fp> m(y, md, c);
    if (h0(m) == 0) continue;
    const auto p = pt(static_cast<std::int64_t>(2 + rng.below(5)));
    const auto q = pt(static_cast<std::int64_t>(2 + rng.below(5)));
    const bool neutral = neutral_pair(m, {1, p}, {2, q});
    const auto r = descend(m, {{p, q}});
    CHECK(r.exists == neutral);
    (r.exists ? exists : blocked)++;
    if (r.exists) CHECK(h0(*r.bundle) == h0(m));
  }
  CHECK(exists > 0);
  CHECK(blocked > 0);
}

TEST_CASE("base locus") {
  const auto x = genus2();
  EffectiveDivisor<Fp> d;
  d.add(1, pt(4));
  const auto b = base_locus(from_divisor(x, d));
  REQUIRE(b.smooth_points.size() == 1);
  CHECK(b.smooth_points[0] == SmoothPoint<Fp>{1, pt(4)});
  CHECK(b.nodes.empty());
  CHECK(!b.whole_component[0]);
  CHECK(!b.whole_component[1]);
  CHECK(base_locus(trivial(x)).empty());
  CHECK_THROWS(base_locus(LineBundle<Fp>(x, {0, 0}, {Fp(2, 7), Fp(1, 7), Fp(1, 7)})));

  // Balanced of degree 2g: globally generated for every class.
  for (Multidegree md : {Multidegree{2, 2}, Multidegree{1, 3}, Multidegree{3, 1}}) {
    BundleEnumerator en(x, md);
    for (std::uint64_t i = 0; i < en.size(); ++i) CHECK(base_locus(en.at(i)).empty());
  }
}

TEST_CASE("base locus over the rationals") {
  const FieldCtx q = FieldCtx::rationals();
  const auto qp = [&](std::int64_t a, std::int64_t b) { return ProjPoint<Rational>::finite(q, Rational(a, b)); };
  const BinaryCurve<Rational> x(q, {{qp(0, 1), qp(0, 1)}, {qp(1, 1), qp(1, 1)}, {ProjPoint<Rational>::infinity(q), ProjPoint<Rational>::infinity(q)}});
  EffectiveDivisor<Rational> d;
  d.add(1, qp(3, 2)).add(2, qp(-5, 3));
  const auto l = from_divisor(x, d);
  CHECK(h0(l) == 1);
  const auto b = base_locus(l);
  REQUIRE(b.smooth_points.size() == 2);
  CHECK(b.smooth_points[0] == SmoothPoint<Rational>{1, qp(3, 2)});
  CHECK(b.smooth_points[1] == SmoothPoint<Rational>{2, qp(-5, 3)});
}
