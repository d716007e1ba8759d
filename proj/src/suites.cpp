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

#include "bincurve/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bincurve {

namespace {

constexpr std::size_t kListedExceptions = 16;

struct Sample {
  int g = 0;
  std::uint32_t p = 0;
  int index = 0;
  std::shared_ptr<const BinaryCurve<Fp>> curve;
  Rng rng{0};
};

// One child stream per curve, in (g, p, index) order, so the samples do not
// depend on which suite or how many jobs consume them.
std::vector<Sample> samples(const SuiteConfig& c) {
  std::vector<Sample> out;
  if (c.curve) {
    Rng rng(c.seed);
    if (const auto* fp = std::get_if<BinaryCurve<Fp>>(&*c.curve)) {
      out.push_back({fp->genus(), fp->field().characteristic(), 0, std::make_shared<const BinaryCurve<Fp>>(*fp),
                     rng.fork()});
      return out;
    }
    const auto& q = std::get<BinaryCurve<Rational>>(*c.curve);
    for (std::uint32_t p : c.primes)
      out.push_back({q.genus(), p, 0, std::make_shared<const BinaryCurve<Fp>>(reduce_mod(q, p)), rng.fork()});
    return out;
  }
  Rng master(c.seed);
  for (int g : c.genera)
    for (std::uint32_t p : c.primes) {
      const FieldCtx f = FieldCtx::prime(p);
      if (c.all_curves || g < 2 || p < static_cast<std::uint32_t>(g + 3)) {
        int k = 0;
        for (auto& x : normal_form_curves(g, f))
          out.push_back({g, p, k++, std::make_shared<const BinaryCurve<Fp>>(std::move(x)), master.fork()});
        continue;
      }
      for (int k = 0; k < c.curves; ++k) {
        Rng child = master.fork();
        auto x = std::make_shared<const BinaryCurve<Fp>>(random_curve<Fp>(g, f, child));
        out.push_back({g, p, k, std::move(x), child.fork()});
      }
    }
  return out;
}

std::vector<BinaryCurve<Rational>> rational_curves(const SuiteConfig& c, bool hyperelliptic_only) {
  if (c.curve) {
    if (const auto* q = std::get_if<BinaryCurve<Rational>>(&*c.curve)) return {*q};
    throw std::invalid_argument("this suite needs a curve over Q (reduced at each prime)");
  }
  std::vector<BinaryCurve<Rational>> out;
  for (int g : c.genera) {
    out.push_back(standard_hyperelliptic(g));
    if (!hyperelliptic_only) out.push_back(standard_general(g));
  }
  return out;
}

Json sample_json(const Sample& s) { return Json{{"g", s.g}, {"p", s.p}, {"curve", s.index}}; }

struct Tally {
  SuiteReport& report;
  Json listed = Json::array();

  void check(bool ok, const std::function<Json()>& describe) {
    ++report.checked;
    if (ok) return;
    ++report.exceptions;
    if (listed.size() < kListedExceptions) listed.push_back(describe());
  }
};

std::uint64_t sum_from(const std::vector<std::uint64_t>& hist, std::size_t from) {
  std::uint64_t s = 0;
  for (std::size_t h = from; h < hist.size(); ++h) s += hist[h];
  return s;
}

std::uint64_t at(const std::vector<std::uint64_t>& hist, int h) {
  return h >= 0 && static_cast<std::size_t>(h) < hist.size() ? hist[static_cast<std::size_t>(h)] : 0;
}

// Every balanced class of degree d has h0 = d - g + 1.
void riemann(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  for (const auto& s : samples(c)) {
    std::uint64_t classes = 0, bad = 0;
    for (int d = 2 * s.g - 1; d <= 2 * s.g + 2; ++d)
      for (const auto& md : balanced_set(d, s.g)) {
        const auto hist = h0_histogram(*s.curve, md, c.enumeration.jobs);
        const std::uint64_t total = std::accumulate(hist.begin(), hist.end(), std::uint64_t{0});
        const std::uint64_t off = total - at(hist, d - s.g + 1);
        classes += total;
        bad += off;
        t.check(off == 0, [&] {
          Json j = sample_json(s);
          j["md"] = md_to_json(md);
          j["classes_off"] = off;
          return j;
        });
      }
    Json row = sample_json(s);
    row["classes"] = classes;
    row["exceptions"] = bad;
    rows.push_back(row);
  }
  rep.details = Json{{"rows", rows}};
}

// The unique class of a multidegree set with h0 >= r+1, if exactly one exists.
std::optional<LineBundle<Fp>> unique_class(const Sample& s, const std::vector<Multidegree>& mds, int r,
                                           const EnumerationOptions& opts, std::uint64_t& count) {
  count = 0;
  std::optional<LineBundle<Fp>> found;
  EnumerationOptions o = opts;
  o.witness_cap = 1;
  for (const auto& md : mds) {
    const auto rep = bn_enumerate(*s.curve, {md, r}, o);
    count += rep.count;
    if (rep.count > 0 && !found) found.emplace(s.curve, md, rep.witnesses.front());
  }
  if (count != 1) return std::nullopt;
  return found;
}

// h0 <= d/2 + 1 on 0 <= d <= 2g, with equality at d = 0 only for O and at
// d = 2g-2, h0 = g only for the canonical class.
void clifford(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  for (const auto& s : samples(c)) {
    std::uint64_t over = 0;
    for (int d = 0; d <= 2 * s.g; ++d)
      for (const auto& md : balanced_set(d, s.g)) {
        const auto hist = h0_histogram(*s.curve, md, c.enumeration.jobs);
        const std::uint64_t off = sum_from(hist, static_cast<std::size_t>(d / 2 + 2));
        over += off;
        t.check(off == 0, [&] {
          Json j = sample_json(s);
          j["md"] = md_to_json(md);
          j["above_bound"] = off;
          return j;
        });
      }
    std::uint64_t n_trivial = 0, n_canonical = 0;
    const auto o = unique_class(s, balanced_set(0, s.g), 0, c.enumeration, n_trivial);
    const bool trivial_ok = o && is_isomorphic(*o, trivial(s.curve));
    t.check(trivial_ok, [&] {
      Json j = sample_json(s);
      j["degree_0_h0_1_classes"] = n_trivial;
      return j;
    });
    bool canonical_ok = true;
    if (s.g >= 1) {
      const auto w = unique_class(s, balanced_set(2 * s.g - 2, s.g), s.g - 1, c.enumeration, n_canonical);
      canonical_ok = w && is_isomorphic(*w, canonical_bundle(*s.curve));
      t.check(canonical_ok, [&] {
        Json j = sample_json(s);
        j["degree_2g-2_h0_g_classes"] = n_canonical;
        return j;
      });
    }
    Json row = sample_json(s);
    row["above_bound"] = over;
    row["degree_0_equality"] = n_trivial;
    row["degree_2g-2_equality"] = n_canonical;
    row["trivial_ok"] = trivial_ok;
    row["canonical_ok"] = canonical_ok;
    rows.push_back(row);
  }
  rep.details = Json{{"rows", rows}};
}

// h0(w - L) = h0(L) - d + g - 1 on every class of the Riemann and Clifford grids.
void serre(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  for (const auto& s : samples(c)) {
    const auto omega = canonical_bundle(*s.curve);
    std::uint64_t classes = 0, bad = 0;
    for (int d = 0; d <= 2 * s.g + 2; ++d)
      for (const auto& md : balanced_set(d, s.g)) {
        TorusScanner scan(*s.curve, md);
        const Multidegree dual_md{s.g - 1 - md.d1, s.g - 1 - md.d2};
        TorusScanner dual_scan(*s.curve, dual_md);
        for (std::uint64_t i = 0; i < scan.size(); ++i) {
          const LineBundle<Fp> l(s.curve, md, scan.gluing(i));
          const int h = scan.h0(i);
          const int hd = dual_scan.h0_of(tensor(omega, dual(l)).gluing());
          ++classes;
          if (hd != h - d + s.g - 1) ++bad;
          t.check(hd == h - d + s.g - 1, [&] {
            Json j = sample_json(s);
            j["bundle"] = bundle_to_json(l);
            j["h0"] = h;
            j["h0_dual"] = hd;
            return j;
          });
        }
      }
    Json row = sample_json(s);
    row["classes"] = classes;
    row["exceptions"] = bad;
    rows.push_back(row);
  }
  rep.details = Json{{"rows", rows}};
}

// Loci predicted empty have no points.
void empty(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  for (const auto& s : samples(c)) {
    int cases = 0;
    for (int d = -1; d <= 2 * s.g - 2; ++d)
      for (const auto& md : balanced_set(d, s.g)) {
        std::optional<std::vector<std::uint64_t>> hist;
        for (int r = 0; r <= 2; ++r) {
          if (!predicted_empty(md, r, s.g)) continue;
          if (!hist) hist = h0_histogram(*s.curve, md, c.enumeration.jobs);
          const std::uint64_t n = sum_from(*hist, static_cast<std::size_t>(r + 1));
          ++cases;
          t.check(n == 0, [&] {
            Json j = sample_json(s);
            j["md"] = md_to_json(md);
            j["r"] = r;
            j["count"] = n;
            return j;
          });
        }
      }
    Json row = sample_json(s);
    row["cases"] = cases;
    rows.push_back(row);
  }
  rep.details = Json{{"rows", rows}};
}

// For -1 <= d1 <= d2 < g: h0 <= d + 1 - d2, attained by at most one class.
void extremal_class(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  std::uint64_t nonnegative_exceptions = 0;
  std::uint64_t bound_violations = 0;
  for (const auto& s : samples(c))
    for (int d2 = -1; d2 < s.g; ++d2)
      for (int d1 = -1; d1 <= d2; ++d1) {
        const Multidegree md{d1, d2};
        const auto hist = h0_histogram(*s.curve, md, c.enumeration.jobs);
        const int bound = d1 + 1;
        const std::uint64_t attained = at(hist, bound);
        const std::uint64_t above = sum_from(hist, static_cast<std::size_t>(bound + 1));
        bound_violations += above;
        const bool ok = attained <= 1 && above == 0;
        if (!ok && d1 >= 0) ++nonnegative_exceptions;
        t.check(ok, [&] {
          Json j = sample_json(s);
          j["md"] = md_to_json(md);
          j["attained"] = attained;
          j["above_bound"] = above;
          return j;
        });
        Json row = sample_json(s);
        row["md"] = md_to_json(md);
        row["bound"] = bound;
        row["attained"] = attained;
        rows.push_back(row);
      }
  rep.details = Json{{"rows", rows},
                     {"bound_violations", bound_violations},
                     {"exceptions_with_d1_nonnegative", nonnegative_exceptions}};
}

// The fast test agrees with W^1_(1,1) being nonempty, and a hyperelliptic
// curve has exactly one such class, the hyperelliptic one.
void hyperelliptic(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  std::map<std::pair<int, std::uint32_t>, std::array<int, 3>> by_gp;  // curves, hyperelliptic, disagreements
  Json per_curve = Json::array();
  for (const auto& s : samples(c)) {
    const bool fast = is_hyperelliptic_fast(*s.curve).hyperelliptic;
    EnumerationOptions o = c.enumeration;
    o.witness_cap = 1;
    const auto scan = bn_enumerate(*s.curve, {{1, 1}, 1}, o);
    bool ok = fast == (scan.count > 0);
    if (ok && fast)
      ok = scan.count == 1 &&
           is_isomorphic(LineBundle<Fp>(s.curve, {1, 1}, scan.witnesses.front()), hyperelliptic_class(*s.curve));
    Json entry = sample_json(s);
    entry["fast"] = fast;
    entry["count"] = scan.count;
    entry["witness"] = scan.witnesses.empty() ? Json() : scalars_to_json(scan.witnesses.front());
    per_curve.push_back(std::move(entry));
    auto& tally = by_gp[{s.g, s.p}];
    ++tally[0];
    if (fast) ++tally[1];
    if (!ok) ++tally[2];
    t.check(ok, [&] {
      Json j = sample_json(s);
      j["fast"] = fast;
      j["count"] = scan.count;
      return j;
    });
  }
  Json rows = Json::array();
  for (const auto& [gp, n] : by_gp)
    rows.push_back(Json{{"g", gp.first}, {"p", gp.second}, {"curves", n[0]}, {"hyperelliptic", n[1]},
                        {"disagreements", n[2]}});
  rep.details = Json{{"rows", rows}, {"curves", per_curve}};
}

std::string kind_name(MartensPrediction::Kind k) {
  switch (k) {
    case MartensPrediction::Kind::kEmpty: return "empty";
    case MartensPrediction::Kind::kExact: return "exact";
    case MartensPrediction::Kind::kAtMost: return "at_most";
  }
  return "";
}

// Two-prime dimension estimates against the Martens-type prediction. An
// inconclusive fit is reported, not counted as an exception.
void martens(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  int inconclusive = 0;
  for (const auto& x : rational_curves(c, false)) {
    const int g = x.genus();
    if (g < 3) throw std::invalid_argument("martens: genus must be at least 3");
    const bool hyp = is_hyperelliptic_fast(x).hyperelliptic;
    for (int d = 2; d <= g - 1; ++d)
      for (const auto& md : balanced_set(d, g))
        for (int r = 1; 2 * r <= d; ++r) {
          const auto pred = martens_bound(g, md, r, hyp);
          const auto est = estimate_dim(x, {md, r}, c.primes, c.enumeration);
          bool ok = true;
          if (pred.kind == MartensPrediction::Kind::kEmpty) {
            ok = est.empty;
          } else if (!est.empty && est.inconclusive) {
            ++inconclusive;
          } else if (pred.kind == MartensPrediction::Kind::kExact) {
            ok = !est.empty && est.rounded == pred.value;
          } else {
            ok = est.empty || *est.rounded <= pred.value;
          }
          Json row{{"g", g}, {"hyperelliptic", hyp}, {"md", md_to_json(md)}, {"r", r},
                   {"prediction", kind_name(pred.kind)}, {"value", pred.value}, {"estimate", to_json(est)}, {"ok", ok}};
          t.check(ok, [&] { return row; });
          rows.push_back(std::move(row));
        }
  }
  rep.details = Json{{"rows", rows}, {"inconclusive", inconclusive}};
}

// W^1 in degree g-1 has dimension g-3 on hyperelliptic curves and g-4
// otherwise. In genus 3 the hyperelliptic locus is a single point at every prime.
void theta(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  for (const auto& x : rational_curves(c, true)) {
    const int g = x.genus();
    if (g < 3) throw std::invalid_argument("theta: genus must be at least 3");
    const bool hyp = is_hyperelliptic_fast(x).hyperelliptic;
    const int expected = hyp ? g - 3 : g - 4;
    const Multidegree md{(g - 1) / 2, g - 1 - (g - 1) / 2};
    Json counts = Json::array();
    std::vector<PrimeCount> pc;
    for (std::uint32_t p : c.primes) {
      const auto r = bn_enumerate(reduce_mod(x, p), {md, 1}, c.enumeration);
      pc.push_back({p, r.count, r.total});
      counts.push_back(Json{{"p", p}, {"count", r.count}});
      if (expected == 0)
        t.check(r.count == 1, [&] { return Json{{"g", g}, {"p", p}, {"count", r.count}}; });
      if (expected < 0)
        t.check(r.count == 0, [&] { return Json{{"g", g}, {"p", p}, {"count", r.count}}; });
    }
    Json row{{"g", g}, {"hyperelliptic", hyp}, {"md", md_to_json(md)}, {"expected_dimension", expected},
             {"counts", counts}};
    if (pc.size() >= 2) {
      const auto est = fit_dimension(pc);
      row["estimate"] = to_json(est);
      if (expected > 0)
        t.check(!est.empty && est.rounded == expected, [&] { return row; });
    }
    rows.push_back(std::move(row));
  }
  rep.details = Json{{"rows", rows}};
}

void bn(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  if (c.curve) throw std::invalid_argument("bn: samples random curves; --curve is not accepted");
  BNSuiteConfig bc;
  bc.g = c.genera.front();
  bc.r = c.r;
  bc.primes = c.primes;
  bc.curves = c.curves;
  if (c.d) bc.d_min = bc.d_max = *c.d;
  bc.enumeration = c.enumeration;
  Rng rng(c.seed);
  const auto report = bn_suite(bc, rng);
  for (const auto& row : report.rows)
    t.check(row.verdict != BNSuiteRow::Verdict::kFail,
            [&] { return Json{{"p", row.p}, {"d", row.d}, {"rho", row.rho}, {"fraction", row.fraction}}; });
  rep.details = to_json(report);
}

void very_ample(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  for (auto s : samples(c)) {
    const auto r = verify_canonical_very_ample(*s.curve, s.rng, c.trials, c.exhaustive);
    Json row = sample_json(s);
    row["hyperelliptic"] = r.hyperelliptic;
    row["checks"] = r.checks.size();
    row["failures"] = r.failures;
    row["pass"] = r.pass;
    t.check(r.pass, [&] {
      Json j = row;
      j["report"] = to_json(r);
      return j;
    });
    rows.push_back(std::move(row));
  }
  rep.details = Json{{"rows", rows}};
}

void wbar(const SuiteConfig& c, SuiteReport& rep, Tally& t) {
  Json rows = Json::array();
  for (const auto& s : samples(c)) {
    std::vector<int> ds;
    if (c.d) ds.push_back(*c.d);
    else
      for (int d = 0; d <= c.r + s.g - 1; ++d) ds.push_back(d);
    for (int d : ds) {
      const auto w = assemble_Wbar(*s.curve, d, c.r, c.enumeration);
      const bool ok = !w.ell0_in_wbar && w.closure_order_ok && w.semicontinuity_ok;
      Json row = sample_json(s);
      row["d"] = d;
      row["type"] = to_string(w.type);
      row["strata"] = w.strata.size();
      row["total_count"] = w.total_count();
      row["ell0_in_wbar"] = w.ell0_in_wbar;
      row["closure_order_ok"] = w.closure_order_ok;
      row["semicontinuity_ok"] = w.semicontinuity_ok;
      t.check(ok, [&] { return row; });
      rows.push_back(std::move(row));
    }
  }
  rep.details = Json{{"rows", rows}};
}

using SuiteFn = void (*)(const SuiteConfig&, SuiteReport&, Tally&);

struct SuiteEntry {
  const char* name;
  const char* label;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {"riemann", "Riemann-Roch for balanced classes of degree >= 2g-1", riemann},
      {"clifford", "Clifford bound and its equality cases", clifford},
      {"serre", "Serre duality against the residue canonical class", serre},
      {"empty", "emptiness of W^r for small multidegrees", empty},
      {"lemma-e", "upper bound d+1-d2 and uniqueness of the extremal class", extremal_class},
      {"hyperelliptic", "hyperelliptic test against W^1_(1,1)", hyperelliptic},
      {"martens", "dimension bounds for W^r_md in degree <= g-1", martens},
      {"theta", "dimension of W^1 in degree g-1", theta},
      {"bn", "Brill-Noether emptiness and existence on random curves", bn},
      {"very-ample", "very ampleness of the canonical class", very_ample},
      {"wbar", "stratified closure of W^r in the compactified Picard variety", wbar},
  };
  return entries;
}

const SuiteEntry& entry(const std::string& suite) {
  for (const auto& e : registry())
    if (suite == e.name) return e;
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

std::string suite_label(const std::string& suite) { return entry(suite).label; }

SuiteConfig default_suite_config(const std::string& suite) {
  entry(suite);
  SuiteConfig c;
  if (suite == "riemann" || suite == "clifford" || suite == "serre") {
    c.genera = {1, 2, 3};
    c.primes = {5, 7};
    c.all_curves = true;
  } else if (suite == "empty") {
    c.genera = {2, 3, 4};
    c.primes = {7};
  } else if (suite == "lemma-e") {
    c.genera = {3};
    c.primes = {5, 7};
    c.all_curves = true;
  } else if (suite == "hyperelliptic") {
    c.genera = {3, 4};
    c.primes = {7, 11};
    c.curves = 200;
  } else if (suite == "martens") {
    c.genera = {4};
    c.primes = {17, 37};
  } else if (suite == "theta") {
    c.genera = {3};
    c.primes = {7, 11, 23};
  } else if (suite == "bn") {
    c.genera = {4};
    c.primes = {11};
    c.curves = 20;
  } else if (suite == "very-ample") {
    c.genera = {3, 4};
    c.primes = {11};
    c.curves = 5;
  } else if (suite == "wbar") {
    c.genera = {2, 3};
    c.primes = {7};
    c.curves = 2;
  }
  return c;
}

SuiteReport run_suite(const std::string& suite, const SuiteConfig& config) {
  const auto& e = entry(suite);
  if (config.genera.empty() && !config.curve) throw std::invalid_argument(suite + ": no genus given");
  if (config.primes.empty() && !(config.curve && std::holds_alternative<BinaryCurve<Fp>>(*config.curve)))
    throw std::invalid_argument(suite + ": no prime given");
  SuiteReport rep;
  rep.suite = e.name;
  rep.label = e.label;
  rep.config = config;
  Tally t{rep};
  e.run(config, rep, t);
  rep.pass = rep.exceptions == 0;
  rep.details["exceptions_listed"] = t.listed;
  return rep;
}

Json to_json(const SuiteConfig& c) {
  Json out{{"genera", c.genera},
           {"primes", c.primes},
           {"curves", c.curves},
           {"all_curves", c.all_curves},
           {"seed", c.seed},
           {"r", c.r},
           {"trials", c.trials},
           {"exhaustive", c.exhaustive},
           {"witness_cap", c.enumeration.witness_cap}};
  out["d"] = c.d ? Json(*c.d) : Json();
  if (c.curve) out["curve"] = std::visit([](const auto& x) { return curve_to_json(x); }, *c.curve);
  return out;
}

Json to_json(const SuiteReport& r) {
  return Json{{"suite", r.suite},
              {"label", r.label},
              {"version", kVersion},
              {"seed", r.config.seed},
              {"config", to_json(r.config)},
              {"pass", r.pass},
              {"checked", r.checked},
              {"exceptions", r.exceptions},
              {"details", r.details}};
}

BinaryCurve<Rational> standard_hyperelliptic(int g) {
  const auto q = FieldCtx::rationals();
  const auto at = [&](std::int64_t a) { return ProjPoint<Rational>::finite(q, Rational(a, 1)); };
  const auto inf = ProjPoint<Rational>::infinity(q);
  std::vector<Node<Rational>> nodes{{at(0), at(0)}, {at(1), at(1)}, {inf, inf}};
  for (int k = 2; static_cast<int>(nodes.size()) < g + 1; ++k) nodes.push_back({at(k), at(k)});
  if (static_cast<int>(nodes.size()) > g + 1) nodes.erase(nodes.begin() + g + 1, nodes.end());
  return BinaryCurve<Rational>(q, std::move(nodes));
}

BinaryCurve<Rational> standard_general(int g) {
  const auto q = FieldCtx::rationals();
  const auto at = [&](std::int64_t a) { return ProjPoint<Rational>::finite(q, Rational(a, 1)); };
  const auto inf = ProjPoint<Rational>::infinity(q);
  std::vector<Node<Rational>> nodes{{at(0), at(0)}, {at(1), at(1)}, {inf, inf}};
  for (int k = 2; static_cast<int>(nodes.size()) < g + 1; ++k) nodes.push_back({at(k), at(2 * k - 1)});
  if (static_cast<int>(nodes.size()) > g + 1) nodes.erase(nodes.begin() + g + 1, nodes.end());
  return BinaryCurve<Rational>(q, std::move(nodes));
}

}  // namespace bincurve
