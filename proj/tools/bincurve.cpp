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

// bincurve: cohomology and Brill-Noether loci of line bundles on binary curves.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bincurve/cache.hpp"
#include "bincurve/suites.hpp"

namespace bc = bincurve;
using bc::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string curve_file;
  std::optional<int> random_genus;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> p;
  std::string field;
  std::string md;
  int r = 1;
  std::string primes;
  unsigned jobs = 1;
  std::size_t witness_cap = 64;
  std::string out;
  bool no_cache = false;
  bool audit = false;
  std::string bundle;
  std::optional<int> d;
  std::optional<int> trials;
  std::string g;
  bool exhaustive = false;
  bool all_curves = false;
  std::optional<int> curves;
  std::string format = "json";
  std::string suite;
};

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::logic_error&) {
      throw UsageError(std::string("--") + what + ": cannot parse '" + text + "'");
    }
  }
  return out;
}

bc::Multidegree parse_md(const std::string& text) {
  const auto v = parse_list<int>(text, "md");
  if (v.size() != 2) throw UsageError("--md: expected d1,d2");
  return {v[0], v[1]};
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bc::InputError("cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw bc::InputError(path + ": malformed JSON");
  return j;
}

bc::FieldCtx field_of(const Options& o) {
  if (o.field == "Q") {
    if (o.p) throw UsageError("--p and --field Q are exclusive");
    return bc::FieldCtx::rationals();
  }
  if (!o.field.empty()) throw UsageError("--field: only Q is accepted; use --p for prime fields");
  if (!o.p) throw UsageError("a random curve needs --p P or --field Q");
  return bc::FieldCtx::prime(*o.p);
}

bc::AnyCurve load_curve(const Options& o) {
  if (!o.curve_file.empty() && o.random_genus) throw UsageError("--curve and --random-genus are exclusive");
  if (!o.curve_file.empty()) return bc::any_curve_from_json(read_json(o.curve_file));
  if (!o.random_genus) throw UsageError("give --curve FILE or --random-genus G");
  const bc::FieldCtx f = field_of(o);
  bc::Rng rng(o.seed);
  bc::Rng child = rng.fork();
  if (f.is_prime_field()) return bc::random_curve<bc::Fp>(*o.random_genus, f, child);
  return bc::random_curve<bc::Rational>(*o.random_genus, f, child);
}

const bc::BinaryCurve<bc::Fp>& prime_curve(const bc::AnyCurve& x, const char* command) {
  if (const auto* fp = std::get_if<bc::BinaryCurve<bc::Fp>>(&x)) return *fp;
  throw UsageError(std::string(command) + " needs a curve over a prime field");
}

Json curve_json(const bc::AnyCurve& x) {
  return std::visit([](const auto& c) { return bc::curve_to_json(c); }, x);
}

Json run_config(const std::string& command, const Options& o) {
  Json source;
  if (!o.curve_file.empty()) source = Json{{"file", o.curve_file}};
  else if (o.random_genus) source = Json{{"random", {{"g", *o.random_genus}, {"seed", o.seed}}}};
  Json c{{"command", command}, {"curve_source", source}};
  if (o.p) c["p"] = *o.p;
  if (!o.field.empty()) c["field"] = o.field;
  if (!o.md.empty()) c["md"] = o.md;
  c["r"] = o.r;
  if (!o.primes.empty()) c["primes"] = o.primes;
  c["witness_cap"] = o.witness_cap;
  return c;
}

Json envelope(const std::string& command, const Options& o) {
  return Json{{"command", command}, {"version", bc::kVersion}, {"seed", o.seed}, {"config", run_config(command, o)}};
}

void emit(const Json& report, const Options& o) {
  const std::string text = report.dump(2);
  std::cout << text << '\n';
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw bc::InputError("cannot write " + o.out);
    f << text << '\n';
  }
}

std::optional<bc::ScanCache> open_cache(const Options& o) {
  if (o.no_cache) return std::nullopt;
  return bc::ScanCache(bc::default_cache_dir());
}

bc::EnumerationOptions enumeration(const Options& o) { return {std::max(1u, o.jobs), o.witness_cap}; }

template <class Scalar>
bc::LineBundle<Scalar> load_bundle(const std::shared_ptr<const bc::BinaryCurve<Scalar>>& x, const Options& o) {
  if (o.bundle == "trivial") return bc::trivial(x);
  if (o.bundle == "canonical") return bc::LineBundle<Scalar>(x, {x->genus() - 1, x->genus() - 1},
                                                              bc::canonical_bundle(*x).gluing());
  if (o.bundle == "hyperelliptic") return bc::LineBundle<Scalar>(x, {1, 1}, bc::hyperelliptic_class(*x).gluing());
  if (!o.bundle.empty()) {
    const Json j = o.bundle.front() == '{' ? Json::parse(o.bundle, nullptr, false) : read_json(o.bundle);
    if (j.is_discarded()) throw bc::InputError("--bundle: malformed JSON");
    return bc::bundle_from_json(x, j);
  }
  if (o.md.empty()) throw UsageError("h0 needs --bundle or --md");
  return bc::LineBundle<Scalar>(x, parse_md(o.md), std::vector<Scalar>(x->node_count(), x->one()));
}

int cmd_h0(const Options& o) {
  const auto any = load_curve(o);
  Json report = envelope("h0", o);
  report["curve"] = curve_json(any);
  std::visit(
      [&](const auto& c) {
        using Curve = std::decay_t<decltype(c)>;
        const auto x = std::make_shared<const Curve>(c);
        const auto l = load_bundle(x, o);
        const int h = bc::h0(l);
        report["bundle"] = bc::bundle_to_json(l);
        report["degree"] = l.degree();
        report["h0"] = h;
        report["h1"] = bc::h1(l);
        report["base_locus"] = h > 0 ? bc::base_locus_to_json(bc::base_locus(l)) : Json();
      },
      any);
  emit(report, o);
  return 0;
}

int cmd_strata(const Options& o) {
  int g = 0;
  if (!o.curve_file.empty() || o.random_genus) {
    g = std::visit([](const auto& c) { return c.genus(); }, load_curve(o));
  } else {
    const auto gs = parse_list<int>(o.g, "g");
    if (gs.size() != 1) throw UsageError("strata needs --g G or a curve");
    g = gs.front();
  }
  if (!o.d) throw UsageError("strata needs --d");
  Json report = envelope("strata", o);
  report["strata"] = bc::to_json(bc::strata_keys(g, *o.d));
  emit(report, o);
  return 0;
}

std::string text_table(const bc::SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << r.label << '\n';
  os << "  seed " << r.config.seed << "  checked " << r.checked << "  exceptions " << r.exceptions << "  "
     << (r.pass ? "PASS" : "FAIL") << '\n';
  if (r.details.contains("rows"))
    for (const auto& row : r.details["rows"]) {
      os << "  ";
      for (const auto& [k, v] : row.items()) {
        if (v.is_object()) continue;
        os << k << '=' << v.dump() << ' ';
      }
      os << '\n';
    }
  return os.str();
}

int cmd_verify(const Options& o) {
  bc::SuiteConfig c = bc::default_suite_config(o.suite);
  if (!o.g.empty()) c.genera = parse_list<int>(o.g, "g");
  if (!o.primes.empty()) c.primes = parse_list<std::uint32_t>(o.primes, "primes");
  else if (o.p) c.primes = {*o.p};
  if (o.curves) c.curves = *o.curves;
  if (o.trials) c.trials = *o.trials;
  c.all_curves = c.all_curves || o.all_curves;
  c.seed = o.seed;
  c.r = o.r;
  c.d = o.d;
  c.exhaustive = o.exhaustive;
  c.enumeration = enumeration(o);
  if (!o.curve_file.empty() || o.random_genus) c.curve = load_curve(o);
  const auto r = bc::run_suite(o.suite, c);
  if (o.format == "text") {
    std::cout << text_table(r);
    if (!o.out.empty()) std::ofstream(o.out) << bc::to_json(r).dump(2) << '\n';
  } else {
    emit(bc::to_json(r), o);
  }
  return r.pass ? 0 : 1;
}

int cmd_clifford(const Options& o) {
  const auto any = load_curve(o);
  const auto& x = prime_curve(any, "clifford");
  const auto mode = o.exhaustive ? bc::CliffordMode::kFullScan : bc::CliffordMode::kShortcut;
  const auto cache = open_cache(o);
  const std::string key = bc::ScanCache::key(
      Json{{"op", "clifford"}, {"curve", bc::curve_to_json(x)}, {"full", o.exhaustive}});
  std::optional<Json> result;
  if (cache) result = cache->lookup(key);
  std::optional<bool> audit;
  if (result && o.audit) audit = *result == bc::to_json(bc::clifford_index(x, mode, std::max(1u, o.jobs)));
  if (!result) {
    result = bc::to_json(bc::clifford_index(x, mode, std::max(1u, o.jobs)));
    if (cache) cache->store(key, *result);
  }
  Json report = envelope("clifford", o);
  report["curve"] = bc::curve_to_json(x);
  report["clifford"] = *result;
  if (o.audit) report["audit"] = audit ? (*audit ? "match" : "mismatch") : "not-cached";
  emit(report, o);
  return audit == false ? 1 : 0;
}

int cmd_bn(const Options& o) {
  const auto any = load_curve(o);
  if (o.md.empty()) throw UsageError("bn needs --md");
  const bc::BNQuery q{parse_md(o.md), o.r};
  const auto cache = open_cache(o);
  const bc::ScanCache* cp = cache ? &*cache : nullptr;
  Json report = envelope("bn", o);
  report["curve"] = curve_json(any);
  bool mismatch = false;
  Json audits = Json::array();
  const auto scan = [&](const bc::BinaryCurve<bc::Fp>& x) {
    const auto s = bc::cached_bn_enumerate(x, q, enumeration(o), cp, o.audit);
    std::cerr << "bn: p=" << x.field().characteristic() << (s.hit ? " cache hit" : " computed") << '\n';
    if (o.audit) audits.push_back(s.audit_match ? (*s.audit_match ? "match" : "mismatch") : "not-cached");
    if (s.audit_match == false) mismatch = true;
    return s.report;
  };
  if (const auto* fp = std::get_if<bc::BinaryCurve<bc::Fp>>(&any)) {
    const Json r = bc::to_json(scan(*fp));
    for (const auto& [k, v] : r.items()) report[k] = v;
  } else {
    const auto primes = parse_list<std::uint32_t>(o.primes, "primes");
    if (primes.size() < 2) throw UsageError("bn over Q needs --primes with at least two primes");
    const auto& xq = std::get<bc::BinaryCurve<bc::Rational>>(any);
    std::vector<bc::PrimeCount> counts;
    Json per_prime = Json::array();
    for (std::uint32_t p : primes) {
      const auto r = scan(bc::reduce_mod(xq, p));
      counts.push_back({p, r.count, r.total});
      per_prime.push_back(bc::to_json(r));
    }
    report["query"] = Json{{"md", bc::md_to_json(q.md)}, {"r", q.r}};
    report["reports"] = per_prime;
    report["dimension"] = bc::to_json(bc::fit_dimension(counts));
  }
  if (o.audit) report["audit"] = audits;
  emit(report, o);
  return mismatch ? 1 : 0;
}

int cmd_abel(const Options& o) {
  const auto any = load_curve(o);
  const auto& x = prime_curve(any, "abel");
  if (o.md.empty()) throw UsageError("abel needs --md");
  const auto md = parse_md(o.md);
  const int trials = o.trials.value_or(200);
  const auto cache = open_cache(o);
  const std::string key = bc::ScanCache::key(Json{{"op", "abel"},
                                                  {"curve", bc::curve_to_json(x)},
                                                  {"md", bc::md_to_json(md)},
                                                  {"trials", trials},
                                                  {"seed", o.seed}});
  const auto sample = [&] {
    bc::Rng rng(o.seed);
    rng.fork();
    bc::Rng work = rng.fork();
    return bc::to_json(bc::abel_sample(x, md, work, trials));
  };
  std::optional<Json> result;
  if (cache) result = cache->lookup(key);
  std::optional<bool> audit;
  if (result && o.audit) audit = *result == sample();
  if (!result) {
    result = sample();
    if (cache) cache->store(key, *result);
  }
  Json report = envelope("abel", o);
  report["curve"] = bc::curve_to_json(x);
  report["md"] = bc::md_to_json(md);
  report["abel"] = *result;
  if (o.audit) report["audit"] = audit ? (*audit ? "match" : "mismatch") : "not-cached";
  emit(report, o);
  return audit == false ? 1 : 0;
}

void curve_options(CLI::App* c, Options& o) {
  c->add_option("--curve", o.curve_file, "curve JSON file");
  c->add_option("--random-genus", o.random_genus, "sample a random curve of this genus");
  c->add_option("--seed", o.seed, "seed for every random choice");
  c->add_option("--p", o.p, "prime field F_p");
  c->add_option("--field", o.field, "Q for the rationals");
  c->add_option("--out", o.out, "also write the report here");
}

void scan_options(CLI::App* c, Options& o) {
  c->add_option("--jobs", o.jobs, "worker threads");
  c->add_option("--witness-cap", o.witness_cap, "witnesses kept per scan");
  c->add_flag("--no-cache", o.no_cache, "neither read nor write the cache");
  c->add_flag("--audit", o.audit, "recompute cache hits and compare");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology and Brill-Noether loci of line bundles on binary curves"};
  app.require_subcommand(1);
  Options o;

  auto* h0 = app.add_subcommand("h0", "h0, h1 and base locus of one bundle");
  curve_options(h0, o);
  h0->add_option("--bundle", o.bundle, "bundle JSON file or text, or trivial|canonical|hyperelliptic");
  h0->add_option("--md", o.md, "multidegree d1,d2 with unit gluing");

  auto* strata = app.add_subcommand("strata", "strata of the compactified Picard variety");
  curve_options(strata, o);
  strata->add_option("--g", o.g, "genus");
  strata->add_option("--d", o.d, "degree")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(bc::suite_names()));
  curve_options(verify, o);
  scan_options(verify, o);
  verify->add_option("--g", o.g, "genera, comma separated");
  verify->add_option("--primes", o.primes, "primes, comma separated");
  verify->add_option("--curves", o.curves, "random curves per genus and prime");
  verify->add_flag("--all-curves", o.all_curves, "every normal-form curve instead of random ones");
  verify->add_option("--r", o.r, "r for W^r");
  verify->add_option("--d", o.d, "restrict to one degree");
  verify->add_option("--trials", o.trials, "random trials per curve");
  verify->add_flag("--exhaustive", o.exhaustive, "exhaustive checks where sampling is the default");
  verify->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* cliff = app.add_subcommand("clifford", "Clifford index over the ground field");
  curve_options(cliff, o);
  scan_options(cliff, o);
  cliff->add_flag("--exhaustive", o.exhaustive, "full scan instead of the shortcut");

  auto* bn = app.add_subcommand("bn", "count W^r_md, or estimate its dimension over Q");
  curve_options(bn, o);
  scan_options(bn, o);
  bn->add_option("--md", o.md, "multidegree d1,d2");
  bn->add_option("--r", o.r, "r for W^r");
  bn->add_option("--primes", o.primes, "primes for a curve over Q");

  auto* abel = app.add_subcommand("abel", "h0 of random effective divisors");
  curve_options(abel, o);
  abel->add_option("--md", o.md, "multidegree d1,d2");
  abel->add_option("--trials", o.trials, "samples");
  abel->add_flag("--no-cache", o.no_cache, "neither read nor write the cache");
  abel->add_flag("--audit", o.audit, "recompute cache hits and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*h0) return cmd_h0(o);
    if (*strata) return cmd_strata(o);
    if (*verify) return cmd_verify(o);
    if (*cliff) return cmd_clifford(o);
    if (*bn) return cmd_bn(o);
    if (*abel) return cmd_abel(o);
  } catch (const UsageError& e) {
    std::cerr << "bincurve: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bincurve: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "bincurve: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "bincurve: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
