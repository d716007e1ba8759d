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


// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any
// line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "bincurve/suites.hpp"

using namespace bincurve;

namespace {

constexpr double kRiemannSeconds = 30;
constexpr double kCliffordSeconds = 60;
constexpr double kHyperellipticSeconds = 300;
constexpr double kResidualTolerance = 0.35;
constexpr double kEmptyFraction = 0.90;
constexpr double kNonemptyFraction = 0.80;
constexpr int kSampleCurves = 100;
constexpr std::uint64_t kSeed = 20260101;

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SuiteConfig grid(const std::string& suite) {
  SuiteConfig c = default_suite_config(suite);
  c.seed = kSeed;
  c.enumeration.jobs = jobs();
  return c;
}

Outcome exhaustive_suite(const std::string& suite, double budget) {
  SuiteConfig c = grid(suite);
  c.genera = {1, 2, 3};
  c.primes = {5, 7};
  c.all_curves = true;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_suite(suite, c);
  const double t = seconds_since(t0);
  const bool in_time = budget <= 0 || t < budget;
  return {r.pass && in_time,
          fmt("%llu checks, %llu exceptions, %.1f s%s", static_cast<unsigned long long>(r.checked),
              static_cast<unsigned long long>(r.exceptions), t, budget > 0 ? fmt(" (budget %.0f s)", budget).c_str() : "")};
}

Outcome riemann() { return exhaustive_suite("riemann", kRiemannSeconds); }
Outcome clifford() { return exhaustive_suite("clifford", kCliffordSeconds); }
Outcome serre() { return exhaustive_suite("serre", 0); }

Outcome extremal_class() {
  SuiteConfig c = grid("lemma-e");
  c.genera = {3};
  c.primes = {5, 7};
  c.all_curves = true;
  const auto r = run_suite("lemma-e", c);
  return {r.pass, fmt("%llu (curve, md) cases, %llu with more than one extremal class (%llu with d1 >= 0), "
                      "%llu classes above the bound",
                      static_cast<unsigned long long>(r.checked), static_cast<unsigned long long>(r.exceptions),
                      static_cast<unsigned long long>(r.details["exceptions_with_d1_nonnegative"].get<std::uint64_t>()),
                      static_cast<unsigned long long>(r.details["bound_violations"].get<std::uint64_t>()))};
}

SuiteConfig hyperelliptic_config(unsigned j) {
  SuiteConfig c = grid("hyperelliptic");
  c.genera = {3, 4};
  c.primes = {7, 11};
  c.curves = 200;
  c.enumeration.jobs = j;
  return c;
}

Outcome hyperelliptic() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_suite("hyperelliptic", hyperelliptic_config(jobs()));
  const double t = seconds_since(t0);
  int hyp = 0;
  for (const auto& row : r.details["rows"]) hyp += row["hyperelliptic"].get<int>();
  return {r.pass && t < kHyperellipticSeconds,
          fmt("%llu curves (%d hyperelliptic), %llu disagreements, %.1f s (budget %.0f s)",
              static_cast<unsigned long long>(r.checked), hyp, static_cast<unsigned long long>(r.exceptions), t,
              kHyperellipticSeconds)};
}

Outcome empty() {
  SuiteConfig c = grid("empty");
  c.genera = {1, 2, 3, 4};
  c.primes = {7};
  c.all_curves = true;
  const auto r = run_suite("empty", c);
  return {r.pass, fmt("%llu (curve, md, r) cases predicted empty, %llu nonempty", static_cast<unsigned long long>(r.checked),
                      static_cast<unsigned long long>(r.exceptions))};
}

Outcome martens_theta() {
  const EnumerationOptions opts{jobs(), 4};
  const auto h3 = standard_hyperelliptic(3);
  bool theta_ok = true;
  std::string counts;
  for (std::uint32_t p : {7u, 11u, 23u}) {
    const auto n = bn_enumerate(reduce_mod(h3, p), {{1, 1}, 1}, opts).count;
    theta_ok = theta_ok && n == 1;
    counts += fmt("%s%llu", counts.empty() ? "" : ",", static_cast<unsigned long long>(n));
  }
  const std::vector<std::uint32_t> primes{17, 37};
  const auto hyp = estimate_dim(standard_hyperelliptic(4), {{1, 2}, 1}, primes, opts, kResidualTolerance);
  const bool hyp_ok = !hyp.empty && !hyp.inconclusive && hyp.rounded == 1 && hyp.residual <= kResidualTolerance;
  const auto gen = estimate_dim(standard_general(4), {{1, 2}, 1}, primes, opts, kResidualTolerance);
  const bool gen_ok = gen.empty || (!gen.inconclusive && *gen.rounded <= 0);
  return {theta_ok && hyp_ok && gen_ok,
          fmt("g=3 hyperelliptic counts at 7,11,23: %s; g=4 hyperelliptic (1,2) at 17,37: slope %.3f residual %.3f; "
              "g=4 general: counts %llu,%llu",
              counts.c_str(), hyp.estimate.value_or(-1), hyp.residual,
              static_cast<unsigned long long>(gen.counts[0].count), static_cast<unsigned long long>(gen.counts[1].count))};
}

Outcome brill_noether() {
  Rng rng(kSeed);
  BNSuiteConfig a;
  a.g = 4;
  a.r = 1;
  a.primes = {11};
  a.curves = kSampleCurves;
  a.d_min = a.d_max = 2;
  a.empty_threshold = kEmptyFraction;
  a.enumeration = {jobs(), 0};
  const auto ra = bn_suite(a, rng);
  const auto& row_a = ra.rows.front();
  const auto k11 = std::find(row_a.mds.begin(), row_a.mds.end(), Multidegree{1, 1}) - row_a.mds.begin();
  const double empty_11 = 1.0 - static_cast<double>(row_a.nonempty_per_md[static_cast<std::size_t>(k11)]) / row_a.curves;

  BNSuiteConfig b = a;
  b.g = 3;
  b.d_min = b.d_max = 3;
  b.nonempty_threshold = kNonemptyFraction;
  const auto rb = bn_suite(b, rng);
  const auto& row_b = rb.rows.front();

  int exactly_one = 0;
  for (int k = 0; k < kSampleCurves; ++k) {
    Rng child = rng.fork();
    const auto x = random_curve<Fp>(3, FieldCtx::prime(11), child);
    const auto r = bn_enumerate(x, {{2, 2}, 2}, {jobs(), 1});
    if (r.count == 1 && is_isomorphic(LineBundle<Fp>(x, {2, 2}, r.witnesses.front()), canonical_bundle(x)))
      ++exactly_one;
  }
  const bool ok = empty_11 >= kEmptyFraction && row_b.fraction >= kNonemptyFraction && exactly_one == kSampleCurves;
  return {ok, fmt("(a) g=4 (1,1) empty on %.2f (need %.2f); (b) g=3 d=3 nonempty on %.2f (need %.2f); "
                  "(c) g=3 (2,2) r=2 single canonical class on %d/%d",
                  empty_11, kEmptyFraction, row_b.fraction, kNonemptyFraction, exactly_one, kSampleCurves)};
}

bool partial_order(const std::vector<StratumKey>& keys) {
  for (const auto& a : keys) {
    if (!closure_leq(a, a)) return false;
    for (const auto& b : keys) {
      if (!(a == b) && closure_leq(a, b) && closure_leq(b, a)) return false;
      if (!closure_leq(a, b)) continue;
      for (const auto& c : keys)
        if (closure_leq(b, c) && !closure_leq(a, c)) return false;
    }
  }
  return true;
}

Outcome strata() {
  const auto n = strata_keys(2, 2);
  const auto d = strata_keys(2, 1);
  bool ok = n.type == PicardType::kNeron && n.strata.size() == 12 && !n.ell0 && d.type == PicardType::kDegeneration &&
            d.ell0.has_value();
  int listings = 0;
  for (int g = 2; g <= 5; ++g)
    for (int deg = -2; deg <= 2 * g + 2; ++deg) {
      ok = ok && partial_order(strata_keys(g, deg).strata);
      ++listings;
    }
  int assembled = 0, ell0_seen = 0;
  Rng rng(kSeed);
  for (int g = 2; g <= 4; ++g)
    for (int k = 0; k < 3; ++k) {
      Rng child = rng.fork();
      const auto x = random_curve<Fp>(g, FieldCtx::prime(7), child);
      for (int r = 0; r <= 2; ++r)
        for (int deg = 0; deg <= r + g - 1; ++deg) {
          const auto w = assemble_Wbar(x, deg, r, {jobs(), 0});
          ok = ok && !w.ell0_in_wbar && w.closure_order_ok && w.semicontinuity_ok;
          if (w.ell0_h0) ++ell0_seen;
          ++assembled;
        }
    }
  return {ok, fmt("g=2: d=2 has %zu strata (%s), d=1 is %s with ell0; %d listings partially ordered; "
                  "%d assemblies (%d of D-type) exclude ell0",
                  n.strata.size(), to_string(n.type).c_str(), to_string(d.type).c_str(), listings, assembled,
                  ell0_seen)};
}

Outcome determinism() {
  const std::string one = to_json(run_suite("hyperelliptic", hyperelliptic_config(1))).dump();
  const std::string eight = to_json(run_suite("hyperelliptic", hyperelliptic_config(8))).dump();
  return {one == eight, fmt("reports of %zu bytes, %s", one.size(), one == eight ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Riemann-Roch for d >= 2g-1", riemann},
      {"Clifford bound and equality cases", clifford},
      {"Serre duality", serre},
      {"unique extremal class for d2 < g", extremal_class},
      {"hyperelliptic test vs W^1_(1,1)", hyperelliptic},
      {"predicted-empty loci", empty},
      {"Martens and theta dimensions", martens_theta},
      {"Brill-Noether for r <= 2", brill_noether},
      {"strata and closure of W^r", strata},
      {"determinism across jobs", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu: %s  %s: %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
