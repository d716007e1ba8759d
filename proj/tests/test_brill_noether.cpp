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


#include "bincurve/brill_noether.hpp"

#include "doctest.h"

using namespace bincurve;

namespace {

const FieldCtx F7 = FieldCtx::prime(7);
const FieldCtx F11 = FieldCtx::prime(11);

ProjPoint<Fp> pt(std::int64_t a, const FieldCtx& f) { return ProjPoint<Fp>::finite(f, a); }
ProjPoint<Fp> inf(const FieldCtx& f) { return ProjPoint<Fp>::infinity(f); }

BinaryCurve<Fp> hyperelliptic3(const FieldCtx& f = F7) {
  return BinaryCurve<Fp>(f, {{pt(0, f), pt(0, f)}, {pt(1, f), pt(1, f)}, {inf(f), inf(f)}, {pt(3, f), pt(3, f)}});
}

BinaryCurve<Fp> nonhyperelliptic(int g, const FieldCtx& f, std::uint64_t seed) {
  Rng rng(seed);
  while (true) {
    auto x = random_curve<Fp>(g, f, rng);
    if (!is_hyperelliptic_fast(x).hyperelliptic) return x;
  }
}

}  // namespace

TEST_CASE("scanner agrees with the generic h0") {
  Rng rng(31);
  for (int g = 2; g <= 4; ++g) {
    const auto x = std::make_shared<const BinaryCurve<Fp>>(random_curve<Fp>(g, F11, rng));
    for (int d1 = -2; d1 <= g + 1; ++d1)
      for (int d2 = -1; d2 <= g + 1; ++d2) {
        TorusScanner scanner(*x, {d1, d2});
        BundleEnumerator en(x, {d1, d2});
        REQUIRE(scanner.size() == en.size());
        for (std::uint64_t i = 0; i < en.size(); i += 1 + en.size() / 40) {
          CHECK(scanner.gluing(i) == en.gluing(i));
          CHECK(scanner.h0(i) == h0(en.at(i)));
        }
      }
  }
}

TEST_CASE("loci of the distinguished bundles") {
  const auto x = hyperelliptic3();
  const auto w = bn_enumerate(x, {{1, 1}, 1});
  CHECK(w.count == 1);
  CHECK(w.total == 216);
  REQUIRE(w.witnesses.size() == 1);
  CHECK(w.witnesses[0] == hyperelliptic_class(x).gluing());

  Rng rng(2);
  for (int t = 0; t < 5; ++t) {
    const auto y = random_curve<Fp>(3, F7, rng);
    const auto k = bn_enumerate(y, {{2, 2}, 2});
    CHECK(k.count == 1);
    REQUIRE(k.witnesses.size() == 1);
    CHECK(k.witnesses[0] == canonical_bundle(y).gluing());
  }
}

TEST_CASE("sharding does not change reports") {
  const auto x = nonhyperelliptic(4, F11, 5);
  for (std::size_t cap : {std::size_t{0}, std::size_t{3}, std::size_t{64}}) {
    const auto a = bn_enumerate(x, {{1, 2}, 1}, {1, cap});
    for (unsigned jobs : {2u, 3u, 8u}) {
      const auto b = bn_enumerate(x, {{1, 2}, 1}, {jobs, cap});
      CHECK(a.count == b.count);
      CHECK(a.witnesses == b.witnesses);
    }
    CHECK(a.witnesses.size() == std::min<std::size_t>(cap, a.count));
  }
  CHECK(h0_histogram(x, {2, 2}, 1) == h0_histogram(x, {2, 2}, 4));
}

TEST_CASE("predicted emptiness and rho") {
  CHECK(predicted_empty({0, 3}, 1, 3));
  CHECK(predicted_empty({-1, 4}, 1, 3));
  CHECK(!predicted_empty({1, 2}, 1, 3));
  CHECK(!predicted_empty({-2, 5}, 1, 3));
  CHECK(!predicted_empty({1, 5}, 1, 3));
  Rng rng(1);
  const auto x = random_curve<Fp>(3, F7, rng);
  CHECK(bn_enumerate(x, {{-1, 4}, 1}).count == 0);
  CHECK(bn_enumerate(x, {{-2, 5}, 1}).count == 216);
  for (int g = 1; g <= 6; ++g)
    for (int d = 0; d <= 10; ++d) {
      CHECK(rho(g, d, 0) == d);
      CHECK(rho(g, d, 1) == 2 * d - g - 2);
      CHECK(rho(g, d, 2) == 3 * d - 2 * g - 6);
      for (int r = 0; r <= 3; ++r) CHECK(rho(g, d, r) == g - (r + 1) * (g - d + r));
    }
}

TEST_CASE("scan invariants: nesting, emptiness, Serre, balanced halves") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const int g = 3;
    Rng rng(seed);
    const auto x = random_curve<Fp>(g, F7, rng);
    const auto omega = canonical_bundle(x);
    for (int d = 0; d <= 2 * g - 2; ++d)
      for (const auto& md : balanced_set(d, g)) {
        std::vector<std::uint64_t> counts;
        for (int r = 0; r <= 3; ++r) counts.push_back(bn_enumerate(x, {md, r}).count);
        for (int r = 0; r < 3; ++r) CHECK(counts[static_cast<std::size_t>(r + 1)] <= counts[static_cast<std::size_t>(r)]);
        for (int r = 0; r <= 3; ++r)
          if (predicted_empty(md, r, g)) CHECK(counts[static_cast<std::size_t>(r)] == 0);
        if (md.d1 <= d / 2 - 1) CHECK(bn_enumerate(x, {md, d / 2}).count == 0);
        // L -> omega (x) L^-1 matches W^r_md with W^(r+g-1-d)_(g-1,g-1)-md.
        for (int r = 0; r <= 2; ++r) {
          const int r2 = r + g - 1 - d;
          if (r2 < 0) continue;
          CHECK(bn_enumerate(x, {md, r}).count == bn_enumerate(x, {omega.multidegree() - md, r2}).count);
        }
      }
  }
}

TEST_CASE("Clifford index") {
  CHECK(*clifford_index(hyperelliptic3()).cliff == 0);
  Rng rng(4);
  CHECK(*clifford_index(random_curve<Fp>(2, F7, rng)).cliff == 0);
  int trigonal = 0;
  for (std::uint64_t seed = 10; seed < 22; ++seed) {
    Rng r(seed);
    const auto x = random_curve<Fp>(4, F11, r);
    const auto fast = clifford_index(x);
    const auto full = clifford_index(x, CliffordMode::kFullScan);
    CHECK(fast.cliff == full.cliff);
    // Irrational pencils leave the index undefined over F_p.
    CHECK((fast.cliff == 0) == is_hyperelliptic_fast(x).hyperelliptic);
    if (!fast.cliff) continue;
    CHECK(*fast.cliff >= 0);
    if (*fast.cliff == 1) {
      ++trigonal;
      CHECK(fast.md->total() == 3);
      CHECK(fast.h0 == 2);
    }
  }
  CHECK(trigonal > 0);
}

TEST_CASE("Clifford-zero classes on hyperelliptic curves") {
  const auto x = hyperelliptic3();
  for (int d : {0, 2, 4}) {
    const auto v = clifford_zero_classification(x, d);
    CHECK(v.pass);
    CHECK(v.found.size() == 1);
  }
  CHECK(is_isomorphic(clifford_zero_classification(x, 4).expected, canonical_bundle(x)));
  CHECK(is_isomorphic(clifford_zero_classification(x, 0).expected, trivial(x)));
  CHECK_THROWS(clifford_zero_classification(x, 3));
}

TEST_CASE("Martens predictions") {
  CHECK(martens_bound(5, {2, 2}, 1, true).kind == MartensPrediction::Kind::kExact);
  CHECK(martens_bound(5, {2, 2}, 1, true).value == 2);
  CHECK(martens_bound(5, {2, 2}, 1, false).kind == MartensPrediction::Kind::kAtMost);
  CHECK(martens_bound(5, {2, 2}, 1, false).value == 1);
  CHECK(martens_bound(5, {1, 3}, 2, false).kind == MartensPrediction::Kind::kEmpty);
  CHECK_THROWS(martens_bound(4, {2, 2}, 1, false));
  CHECK_THROWS(martens_bound(5, {1, 1}, 2, false));
}

TEST_CASE("dimension estimates") {
  const FieldCtx q = FieldCtx::rationals();
  const auto qp = [&](std::int64_t a) { return ProjPoint<Rational>::finite(q, Rational(a, 1)); };
  const auto qi = ProjPoint<Rational>::infinity(q);
  const BinaryCurve<Rational> hyp(q, {{qp(0), qp(0)}, {qp(1), qp(1)}, {qi, qi}, {qp(3), qp(3)}});
  const auto e = estimate_dim(hyp, {{1, 1}, 1}, {7, 11});
  CHECK(e.counts[0].count == 1);
  CHECK(e.counts[1].count == 1);
  REQUIRE(e.rounded.has_value());
  CHECK(*e.rounded == 0);
  CHECK(!e.inconclusive);

  // Effective classes of degree one: one per smooth point of C1.
  const auto e1 = estimate_dim(hyp, {{1, 0}, 0}, {31, 61});
  CHECK(e1.counts[0].count == 31 + 1 - 4);
  CHECK(*e1.rounded == 1);
  CHECK(!e1.inconclusive);

  const auto none = estimate_dim(hyp, {{0, 1}, 1}, {7, 11});
  CHECK(none.empty);

  const BinaryCurve<Rational> bad(q, {{qp(0), qp(0)}, {qp(1), qp(1)}, {qi, qi}, {qp(8), qp(3)}});
  CHECK_THROWS_AS(reduce_mod(bad, 7), BadReduction);
  const BinaryCurve<Rational> frac(q, {{qp(0), qp(0)}, {ProjPoint<Rational>::finite(q, Rational(1, 7)), qp(1)}});
  CHECK_THROWS_AS(reduce_mod(frac, 7), BadReduction);
  CHECK(reduce_mod(frac, 11).node(1).p == pt(8, F11));

  const auto mixed = fit_dimension({{7, 0, 1}, {11, 3, 1}});
  CHECK(mixed.inconclusive);
  const auto clean = fit_dimension({{10, 100, 1}, {100, 10000, 1}});
  CHECK(*clean.estimate == doctest::Approx(2.0));
}

TEST_CASE("Abel map sampling") {
  Rng rng(9);
  const auto x = nonhyperelliptic(3, F11, 9);
  CHECK(abel_sample(x, {1, 0}, rng, 50).fraction() == 1.0);
  CHECK(abel_sample(x, {0, 1}, rng, 50).fraction() == 1.0);
  CHECK(abel_sample(x, {1, 1}, rng, 200).fraction() >= 0.9);
  CHECK(abel_sample(x, {0, 0}, rng, 10).fraction() == 1.0);
  // On a hyperelliptic curve the conjugate pairs p + psi(p) move in a pencil.
  const auto h = hyperelliptic3(F11);
  const auto stats = abel_sample(h, {1, 1}, rng, 400);
  CHECK(stats.fraction() < 1.0);
  CHECK(stats.fraction() > 0.75);
  CHECK_THROWS(abel_sample(x, {2, 2}, rng, 1));
}

TEST_CASE("stratified closure of W^r") {
  const auto x = hyperelliptic3();
  const auto w = assemble_Wbar(x, 2, 1);
  CHECK(w.type == PicardType::kDegeneration);
  CHECK(!w.ell0_in_wbar);
  CHECK(w.closure_order_ok);
  for (const auto& s : w.strata) {
    if (s.key.s.empty() && s.key.md == Multidegree{1, 1})
      CHECK(s.count == 1);
    else
      CHECK(s.count == 0);
  }
  CHECK_THROWS(assemble_Wbar(x, 4, 1));

  Rng rng(6);
  for (int t = 0; t < 4; ++t) {
    const auto y = random_curve<Fp>(3, F7, rng);
    for (int r = 0; r <= 2; ++r)
      for (int d = 0; d <= r + 2; ++d) {
        const auto rep = assemble_Wbar(y, d, r);
        CHECK(rep.closure_order_ok);
        CHECK(rep.semicontinuity_ok);
        if (rep.type == PicardType::kDegeneration) {
          REQUIRE(rep.ell0_h0.has_value());
          CHECK(!rep.ell0_in_wbar);
        }
      }
  }
}

TEST_CASE("very ampleness of the dualizing sheaf") {
  Rng rng(12);
  const auto x = nonhyperelliptic(4, F11, 3);
  const auto rep = verify_canonical_very_ample(x, rng, 40);
  CHECK(!rep.hyperelliptic);
  CHECK(rep.failures == 0);
  CHECK(rep.pass);

  const auto h = hyperelliptic3();
  const auto hr = verify_canonical_very_ample(h, rng, 20, true);
  CHECK(hr.hyperelliptic);
  CHECK(hr.failures > 0);
  CHECK(hr.pass);
  // Conjugate pairs are exactly the failing (pq) checks.
  for (const auto& c : hr.checks)
    if (c.name == "pq" && !c.ok()) CHECK(c.observed == 3 - 1);

  CHECK_THROWS_AS(verify_canonical_very_ample(nonhyperelliptic(4, F7, 1), rng, 5), std::domain_error);
}

TEST_CASE("Brill-Noether suite") {
  BNSuiteConfig cfg;
  cfg.g = 3;
  cfg.r = 1;
  cfg.primes = {7};
  cfg.curves = 6;
  Rng rng(100);
  const auto rep = bn_suite(cfg, rng);
  CHECK(rep.rows.size() == 5);
  for (const auto& row : rep.rows) {
    if (row.rho == 0) CHECK(row.verdict == BNSuiteRow::Verdict::kReportOnly);
    if (row.d <= 1) CHECK(row.nonempty_any == 0);
  }
  Rng again(100);
  const auto rep2 = bn_suite(cfg, again);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) CHECK(rep.rows[i].nonempty_per_md == rep2.rows[i].nonempty_per_md);
}

TEST_CASE("extremal classes below genus need not be unique") {
  // md (0,2), g = 3: the bound d+1-d2 is 1 and every effective divisor on C2
  // reaches it, while distinct divisors give distinct classes.
  const auto x = std::make_shared<const BinaryCurve<Fp>>(hyperelliptic3());
  const auto smooth = smooth_points(*x, 2);
  REQUIRE(smooth.size() >= 3);
  std::vector<LineBundle<Fp>> classes;
  for (std::size_t j = 1; j < 3; ++j) {
    EffectiveDivisor<Fp> d;
    d.add(2, smooth[0]);
    d.add(2, smooth[j]);
    classes.push_back(from_divisor(x, d));
    CHECK(classes.back().multidegree() == Multidegree{0, 2});
    CHECK(h0(classes.back()) == 1);
  }
  CHECK(!is_isomorphic(classes[0], classes[1]));
  const auto hist = h0_histogram(*x, {0, 2});
  CHECK(hist.size() == 2);
  CHECK(hist[1] > 1);
}
