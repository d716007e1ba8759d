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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace bincurve {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Runs fn(shard, begin, end) over `jobs` contiguous slices of [0, n).
template <class Fn>
void parallel_shards(std::uint64_t n, unsigned jobs, Fn fn) {
  jobs = std::max(1u, jobs);
  if (n < jobs) jobs = static_cast<unsigned>(std::max<std::uint64_t>(n, 1));
  if (jobs == 1) {
    fn(0u, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < jobs; ++k) {
    const std::uint64_t begin = n / jobs * k + std::min<std::uint64_t>(k, n % jobs);
    const std::uint64_t end = begin + n / jobs + (k < n % jobs ? 1 : 0);
    pool.emplace_back([=, &fn] { fn(k, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

TorusScanner::TorusScanner(const BinaryCurve<Fp>& x, Multidegree md)
    : p_(x.field().characteristic()),
      genus_(x.genus()),
      md_(md),
      k1_(static_cast<std::size_t>(std::max(md.d1 + 1, 0))),
      k2_(static_cast<std::size_t>(std::max(md.d2 + 1, 0))),
      rows_(x.node_count()) {
  if (!x.field().is_prime_field()) throw std::invalid_argument("TorusScanner: needs a prime field");
  size_ = BundleEnumerator(x, md).size();
  const Fp one = x.one();
  for (const auto& n : x.nodes()) {
    for (const auto& v : monomial_values(n.p, md.d1, one)) e1_.push_back(v.value());
    for (const auto& v : monomial_values(n.q, md.d2, one)) e2_.push_back(v.value());
  }
  c_.assign(rows_, 1);
  work_.resize(rows_ * (k1_ + k2_));
}

std::vector<Fp> TorusScanner::gluing(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("TorusScanner: index out of range");
  std::vector<Fp> c(rows_, Fp(1, p_));
  for (int k = genus_ - 1; k >= 0; --k) {
    c[static_cast<std::size_t>(k)] = Fp(static_cast<std::int64_t>(index % (p_ - 1)) + 1, p_);
    index /= p_ - 1;
  }
  return c;
}

int TorusScanner::h0(std::uint64_t index) {
  for (int k = genus_ - 1; k >= 0; --k) {
    c_[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(index % (p_ - 1)) + 1;
    index /= p_ - 1;
  }
  if (rows_ > 0) c_[rows_ - 1] = 1;
  return h0_raw();
}

int TorusScanner::h0_of(const std::vector<Fp>& c) {
  if (c.size() != rows_) throw std::invalid_argument("TorusScanner: wrong gluing length");
  for (std::size_t j = 0; j < rows_; ++j) c_[j] = c[j].value();
  return h0_raw();
}

int TorusScanner::h0_raw() {
  const std::size_t cols = k1_ + k2_;
  for (std::size_t j = 0; j < rows_; ++j) {
    std::uint32_t* row = &work_[j * cols];
    for (std::size_t k = 0; k < k1_; ++k) row[k] = e1_[j * k1_ + k];
    const std::uint32_t neg_c = p_ - c_[j];
    for (std::size_t k = 0; k < k2_; ++k) row[k1_ + k] = mulmod(neg_c, e2_[j * k2_ + k], p_);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && work_[piv * cols + col] == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t k = col; k < cols; ++k) std::swap(work_[piv * cols + k], work_[rank * cols + k]);
    const std::uint32_t inv = invmod(work_[rank * cols + col], p_);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      const std::uint32_t a = work_[i * cols + col];
      if (a == 0) continue;
      const std::uint32_t f = mulmod(a, inv, p_);
      for (std::size_t k = col; k < cols; ++k) {
        const std::uint32_t sub = mulmod(f, work_[rank * cols + k], p_);
        std::uint32_t& t = work_[i * cols + k];
        t = t >= sub ? t - sub : t + p_ - sub;
      }
    }
    ++rank;
  }
  return static_cast<int>(cols - rank);
}

BNReport bn_enumerate(const BinaryCurve<Fp>& x, const BNQuery& q, const EnumerationOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const TorusScanner proto(x, q.md);
  struct Shard {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> hits;
  };
  std::vector<Shard> shards(std::max(1u, opts.jobs));
  parallel_shards(proto.size(), opts.jobs, [&](unsigned k, std::uint64_t begin, std::uint64_t end) {
    TorusScanner scanner = proto;
    Shard& s = shards[k];
    for (std::uint64_t i = begin; i < end; ++i)
      if (scanner.h0(i) >= q.r + 1) {
        ++s.count;
        if (s.hits.size() < opts.witness_cap) s.hits.push_back(i);
      }
  });
  BNReport out;
  out.query = q;
  out.p = x.field().characteristic();
  out.total = proto.size();
  out.witness_cap = opts.witness_cap;
  // Shards cover consecutive index ranges, so concatenation is already sorted.
  for (const auto& s : shards) {
    out.count += s.count;
    for (std::uint64_t i : s.hits)
      if (out.witnesses.size() < opts.witness_cap) out.witnesses.push_back(proto.gluing(i));
  }
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<std::uint64_t> h0_histogram(const BinaryCurve<Fp>& x, Multidegree md, unsigned jobs) {
  const TorusScanner proto(x, md);
  std::vector<std::vector<std::uint64_t>> shards(std::max(1u, jobs));
  parallel_shards(proto.size(), jobs, [&](unsigned k, std::uint64_t begin, std::uint64_t end) {
    TorusScanner scanner = proto;
    auto& h = shards[k];
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto v = static_cast<std::size_t>(scanner.h0(i));
      if (h.size() <= v) h.resize(v + 1, 0);
      ++h[v];
    }
  });
  std::vector<std::uint64_t> out;
  for (const auto& h : shards) {
    if (out.size() < h.size()) out.resize(h.size(), 0);
    for (std::size_t v = 0; v < h.size(); ++v) out[v] += h[v];
  }
  return out;
}

bool predicted_empty(Multidegree md, int r, int g) {
  const int a = std::min(md.d1, md.d2);
  const int b = std::max(md.d1, md.d2);
  const int d = md.total();
  if (!is_balanced(md, g)) {
    // Off the balanced range only the negative case is decided: every
    // section vanishes on the negative component, so h0 = max(0, d2 - g).
    return a < 0 && b - g <= r;
  }
  return (a < 0 && d <= g + r) || (a >= 0 && a <= r - 1 && d <= g + r - 1);
}

int rho(int g, int d, int r) { return (r + 1) * d - r * g - (r + 1) * r; }

namespace {

// First class (in enumeration order) of md with h0 == want and h1 >= 2.
std::optional<std::uint64_t> find_class(const BinaryCurve<Fp>& x, Multidegree md, int want_h0) {
  TorusScanner scanner(x, md);
  const int g = x.genus();
  for (std::uint64_t i = 0; i < scanner.size(); ++i) {
    const int h = scanner.h0(i);
    if (h == want_h0 && h - md.total() + g - 1 >= 2) return i;
  }
  return std::nullopt;
}

CliffordReport full_scan(const BinaryCurve<Fp>& x, CliffordReport out, unsigned jobs) {
  const int g = x.genus();
  out.method = "full";
  // h0 >= 2 and h1 >= 2 force 2 <= d <= 2g-4 by Riemann-Roch and Clifford.
  for (int d = 0; d <= 2 * g - 2; ++d)
    for (const auto& md : balanced_set(d, g)) {
      const TorusScanner proto(x, md);
      struct Best {
        int cliff = 1 << 30;
        std::uint64_t index = 0;
        int h0 = 0;
      };
      std::vector<Best> shards(std::max(1u, jobs));
      parallel_shards(proto.size(), jobs, [&](unsigned k, std::uint64_t begin, std::uint64_t end) {
        TorusScanner scanner = proto;
        for (std::uint64_t i = begin; i < end; ++i) {
          const int h = scanner.h0(i);
          if (h < 2 || h - d + g - 1 < 2) continue;
          const int c = d - 2 * h + 2;
          if (c < shards[k].cliff) shards[k] = {c, i, h};
        }
      });
      for (const auto& b : shards)
        if (b.cliff < (1 << 30) && (!out.cliff || b.cliff < *out.cliff)) {
          out.cliff = b.cliff;
          out.md = md;
          out.witness = proto.gluing(b.index);
          out.h0 = b.h0;
        }
    }
  return out;
}

}  // namespace

CliffordReport clifford_index(const BinaryCurve<Fp>& x, CliffordMode mode, unsigned jobs) {
  const int g = x.genus();
  CliffordReport out;
  out.p = x.field().characteristic();
  if (g <= 2) {
    out.method = "genus<=2";
    out.cliff = 0;
    return out;
  }
  if (mode == CliffordMode::kFullScan) return full_scan(x, out, jobs);
  out.method = "shortcut";
  for (int h = 1; h <= g - 2; ++h) {
    const Multidegree md{h, h};
    if (auto i = find_class(x, md, h + 1)) {
      out.cliff = 0;
      out.md = md;
      out.witness = TorusScanner(x, md).gluing(*i);
      out.h0 = h + 1;
      return out;
    }
  }
  for (int h = 1; h <= g - 2; ++h)
    for (const Multidegree md : {Multidegree{h, h + 1}, Multidegree{h + 1, h}}) {
      if (auto i = find_class(x, md, h + 1)) {
        out.cliff = 1;
        out.md = md;
        out.witness = TorusScanner(x, md).gluing(*i);
        out.h0 = h + 1;
        return out;
      }
    }
  return full_scan(x, out, jobs);
}

CliffordZeroVerdict clifford_zero_classification(const BinaryCurve<Fp>& x, int d) {
  const int g = x.genus();
  if (d < 0 || d > 2 * g - 2 || d % 2 != 0)
    throw std::invalid_argument("clifford_zero_classification: d must be even in [0, 2g-2]");
  const auto curve = std::make_shared<const BinaryCurve<Fp>>(x);
  const auto expected = power(hyperelliptic_class(*curve), d / 2);
  CliffordZeroVerdict out{d, true, LineBundle<Fp>(curve, expected.multidegree(), expected.gluing()), {}, std::nullopt};
  for (const auto& md : balanced_set(d, g)) {
    TorusScanner scanner(x, md);
    for (std::uint64_t i = 0; i < scanner.size(); ++i) {
      if (scanner.h0(i) != d / 2 + 1) continue;
      LineBundle<Fp> l(curve, md, scanner.gluing(i));
      if (!is_isomorphic(l, out.expected) && !out.counterexample) {
        out.counterexample = l;
        out.pass = false;
      }
      out.found.push_back(std::move(l));
    }
  }
  if (out.found.size() != 1) out.pass = false;
  return out;
}

std::string MartensPrediction::to_string() const {
  switch (kind) {
    case Kind::kEmpty:
      return "empty";
    case Kind::kExact:
      return "= " + std::to_string(value);
    case Kind::kAtMost:
      return "<= " + std::to_string(value);
  }
  return "";
}

MartensPrediction martens_bound(int g, Multidegree md, int r, bool hyperelliptic) {
  const int d = md.total();
  if (g < 3 || d < 2 || d > g - 1 || r <= 0 || 2 * r > d)
    throw std::invalid_argument("martens_bound: needs g >= 3, 2 <= d <= g-1 and 0 < 2r <= d");
  if (predicted_empty(md, r, g)) return {MartensPrediction::Kind::kEmpty, 0};
  if (hyperelliptic) return {MartensPrediction::Kind::kExact, d - 2 * r};
  return {MartensPrediction::Kind::kAtMost, d - 2 * r - 1};
}

BinaryCurve<Fp> reduce_mod(const BinaryCurve<Rational>& x, std::uint32_t p) {
  const FieldCtx f = FieldCtx::prime(p);
  const auto reduce = [&](const ProjPoint<Rational>& v) {
    if (v.is_infinity()) return ProjPoint<Fp>::infinity(f);
    const mpq_class& q = v.x().value();
    const mpz_class den = q.get_den();
    if (den % p == 0) throw BadReduction("reduce_mod: " + v.to_string() + " is not integral at " + std::to_string(p));
    const mpz_class num = q.get_num() % p;
    const mpz_class d = den % p;
    return ProjPoint<Fp>::finite(f, Fp(num.get_si(), p) / Fp(d.get_si(), p));
  };
  std::vector<Node<Fp>> nodes;
  for (const auto& n : x.nodes()) nodes.push_back({reduce(n.p), reduce(n.q)});
  try {
    return BinaryCurve<Fp>(f, std::move(nodes));
  } catch (const std::invalid_argument& e) {
    throw BadReduction(std::string("reduce_mod: branch points collide mod ") + std::to_string(p));
  }
}

DimEstimate fit_dimension(std::vector<PrimeCount> counts, double tolerance) {
  DimEstimate out;
  out.tolerance = tolerance;
  if (counts.size() < 2) throw std::invalid_argument("fit_dimension: needs at least two primes");
  out.counts = std::move(counts);
  const auto zero = std::count_if(out.counts.begin(), out.counts.end(), [](const PrimeCount& c) { return c.count == 0; });
  if (zero == static_cast<long>(out.counts.size())) {
    out.empty = true;
    return out;
  }
  if (zero > 0) {
    out.inconclusive = true;
    return out;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(out.counts.size());
  for (const auto& c : out.counts) {
    const double lx = std::log(static_cast<double>(c.p));
    const double ly = std::log(static_cast<double>(c.count));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  out.estimate = slope;
  out.rounded = static_cast<int>(std::lround(slope));
  out.residual = std::fabs(slope - *out.rounded);
  out.inconclusive = out.residual > tolerance;
  return out;
}

DimEstimate estimate_dim(const BinaryCurve<Rational>& x, const BNQuery& q, const std::vector<std::uint32_t>& primes,
                         const EnumerationOptions& opts, double tolerance) {
  if (primes.size() < 2) throw std::invalid_argument("estimate_dim: needs at least two primes");
  std::vector<PrimeCount> counts;
  for (std::uint32_t p : primes) {
    const auto report = bn_enumerate(reduce_mod(x, p), q, opts);
    counts.push_back({p, report.count, report.total});
  }
  return fit_dimension(std::move(counts), tolerance);
}

AbelStats abel_sample(const BinaryCurve<Fp>& x, Multidegree md, Rng& rng, int trials) {
  if (md.d1 < 0 || md.d2 < 0 || md.total() > x.genus())
    throw std::invalid_argument("abel_sample: needs md >= 0 and d <= g");
  const auto curve = std::make_shared<const BinaryCurve<Fp>>(x);
  const std::vector<ProjPoint<Fp>> pts[2] = {smooth_points(x, 1), smooth_points(x, 2)};
  AbelStats out;
  for (int t = 0; t < trials; ++t) {
    EffectiveDivisor<Fp> d;
    for (int comp = 1; comp <= 2; ++comp) {
      const auto& pool = pts[comp - 1];
      for (int k = 0; k < (comp == 1 ? md.d1 : md.d2); ++k) d.add(comp, pool[rng.below(pool.size())]);
    }
    ++out.trials;
    if (h0(from_divisor(curve, d)) == 1) ++out.h0_one;
  }
  return out;
}

std::uint64_t WbarReport::total_count() const {
  std::uint64_t n = 0;
  for (const auto& s : strata) n += s.count;
  return n + (ell0_in_wbar ? 1 : 0);
}

WbarReport assemble_Wbar(const BinaryCurve<Fp>& x, int d, int r, const EnumerationOptions& opts) {
  const int g = x.genus();
  if (d > r + g - 1)
    throw std::invalid_argument("assemble_Wbar: the stratification holds for d <= r+g-1; got d=" + std::to_string(d) +
                                ", r=" + std::to_string(r) + ", g=" + std::to_string(g));
  const auto strata = enumerate_strata(x, d);
  WbarReport out;
  out.d = d;
  out.r = r;
  out.type = strata.type;
  EnumerationOptions quiet = opts;
  quiet.witness_cap = 0;
  for (const auto& s : strata.strata) {
    const auto rep = bn_enumerate(s.curve, {s.key.md, r}, quiet);
    out.strata.push_back({s.key, s.dimension, rep.count, rep.total});
  }
  if (strata.ell0) {
    out.ell0_h0 = h0_bar(*strata.ell0);
    out.ell0_in_wbar = *out.ell0_h0 >= r + 1;
  }
  out.closure_order_ok = true;
  for (const auto& a : out.strata) {
    if (!closure_leq(a.key, a.key)) out.closure_order_ok = false;
    for (const auto& b : out.strata) {
      if (closure_leq(a.key, b.key) && closure_leq(b.key, a.key) && !(a.key == b.key)) out.closure_order_ok = false;
      if (!closure_leq(a.key, b.key)) continue;
      for (const auto& c : out.strata)
        if (closure_leq(b.key, c.key) && !closure_leq(a.key, c.key)) out.closure_order_ok = false;
    }
  }
  // h0 is upper semicontinuous: a stratum lying entirely in W^r drags the
  // strata in its closure along.
  out.semicontinuity_ok = true;
  for (const auto& a : out.strata) {
    if (a.count != a.total) continue;
    for (const auto& b : out.strata)
      if (closure_leq(a.key, b.key) && b.count != b.total) out.semicontinuity_ok = false;
  }
  return out;
}

namespace {

std::string describe(int comp, const ProjPoint<Fp>& v) { return "C" + std::to_string(comp) + ":" + v.to_string(); }

}  // namespace

VeryAmpleReport verify_canonical_very_ample(const BinaryCurve<Fp>& x, Rng& rng, int trials, bool exhaustive) {
  const int g = x.genus();
  if (g < 3) throw std::invalid_argument("verify_canonical_very_ample: genus must be at least 3");
  if (static_cast<int>(x.field().characteristic()) <= 2 * g)
    throw std::domain_error("verify_canonical_very_ample: needs p > 2g for derivative conditions");
  VeryAmpleReport out;
  out.hyperelliptic = is_hyperelliptic_fast(x).hyperelliptic;
  const auto curve = std::make_shared<const BinaryCurve<Fp>>(x);
  const auto omega = canonical_bundle(*curve);
  const auto add = [&](std::string name, std::string where, int expected, int observed) {
    out.checks.push_back({std::move(name), std::move(where), expected, observed});
    if (expected != observed) ++out.failures;
  };

  std::vector<SmoothPoint<Fp>> smooth;
  for (int comp = 1; comp <= 2; ++comp)
    for (const auto& v : smooth_points(x, comp)) smooth.push_back({comp, v});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    for (std::size_t a = 0; a < smooth.size(); ++a)
      for (std::size_t b = a; b < smooth.size(); ++b) pairs.push_back({a, b});
  } else {
    for (int t = 0; t < trials; ++t) {
      auto a = static_cast<std::size_t>(rng.below(smooth.size()));
      auto b = static_cast<std::size_t>(rng.below(smooth.size()));
      pairs.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  for (auto [a, b] : pairs) {
    EffectiveDivisor<Fp> d;
    d.add(smooth[a].component, smooth[a].point).add(smooth[b].component, smooth[b].point);
    add("pq", describe(smooth[a].component, smooth[a].point) + "+" + describe(smooth[b].component, smooth[b].point),
        g - 2, h0_vanishing(omega, d));
  }

  for (std::size_t n = 0; n < x.node_count(); ++n) {
    const NodeSubset s({n}, x.node_count());
    const auto pulled = restrict_to_normalization(omega, s);
    const auto& r = x.node(n).p;
    const auto& sp = x.node(n).q;
    const std::string where = "node " + std::to_string(n + 1);
    const auto twist = [&](int mr, int ms) {
      EffectiveDivisor<Fp> d;
      d.add(1, r, mr).add(2, sp, ms);
      return h0_vanishing(pulled, d);
    };
    add("nY", where, g - 1, twist(1, 1));
    add("2r+s", where, g - 2, twist(2, 1));
    add("r+2s", where, g - 2, twist(1, 2));
    add("2r+2s", where, g - 3, twist(2, 2));
    add("3r+s", where, g - 3, twist(3, 1));
    add("r+3s", where, g - 3, twist(1, 3));

    // A smooth point and the node: separated when h0 drops to g-2.
    const int samples = exhaustive ? static_cast<int>(smooth.size()) : std::min<int>(trials, static_cast<int>(smooth.size()));
    for (int t = 0; t < samples; ++t) {
      const auto& pt = smooth[exhaustive ? static_cast<std::size_t>(t) : static_cast<std::size_t>(rng.below(smooth.size()))];
      EffectiveDivisor<Fp> d;
      d.add(1, r).add(2, sp).add(pt.component, pt.point);
      add("pn", where + "+" + describe(pt.component, pt.point), g - 2, h0_vanishing(pulled, d));
    }
    for (std::size_t m = n + 1; m < x.node_count(); ++m) {
      const auto both = restrict_to_normalization(omega, NodeSubset({n, m}, x.node_count()));
      EffectiveDivisor<Fp> d;
      d.add(1, r).add(2, sp).add(1, x.node(m).p).add(2, x.node(m).q);
      add("nn", where + "+node " + std::to_string(m + 1), g - 2, h0_vanishing(both, d));
    }
  }
  out.pass = out.hyperelliptic ? out.failures > 0 : out.failures == 0;
  return out;
}

std::string to_string(BNSuiteRow::Verdict v) {
  switch (v) {
    case BNSuiteRow::Verdict::kPass:
      return "pass";
    case BNSuiteRow::Verdict::kFail:
      return "fail";
    case BNSuiteRow::Verdict::kReportOnly:
      return "report-only";
  }
  return "";
}

BNSuiteReport bn_suite(const BNSuiteConfig& config, Rng& rng) {
  BNSuiteReport out;
  out.config = config;
  out.seed = rng.seed();
  const int g = config.g;
  const int d_max = config.d_max < 0 ? 2 * g - 2 : config.d_max;
  EnumerationOptions quiet = config.enumeration;
  quiet.witness_cap = 0;
  out.pass = true;
  for (std::uint32_t p : config.primes) {
    const FieldCtx f = FieldCtx::prime(p);
    std::vector<BinaryCurve<Fp>> curves;
    for (int k = 0; k < config.curves; ++k) {
      Rng child = rng.fork();
      curves.push_back(random_curve<Fp>(g, f, child));
    }
    for (int d = config.d_min; d <= d_max; ++d) {
      BNSuiteRow row;
      row.p = p;
      row.d = d;
      row.rho = rho(g, d, config.r);
      row.mds = balanced_set(d, g);
      row.nonempty_per_md.assign(row.mds.size(), 0);
      row.curves = config.curves;
      for (const auto& x : curves) {
        bool any = false;
        for (std::size_t k = 0; k < row.mds.size(); ++k) {
          if (bn_enumerate(x, {row.mds[k], config.r}, quiet).count == 0) continue;
          ++row.nonempty_per_md[k];
          any = true;
        }
        if (any) ++row.nonempty_any;
      }
      const double nonempty = row.curves == 0 ? 0.0 : static_cast<double>(row.nonempty_any) / row.curves;
      if (row.rho < 0) {
        row.fraction = 1.0 - nonempty;
        row.verdict = row.fraction >= config.empty_threshold ? BNSuiteRow::Verdict::kPass : BNSuiteRow::Verdict::kFail;
      } else if (row.rho >= 1) {
        row.fraction = nonempty;
        row.verdict = row.fraction >= config.nonempty_threshold ? BNSuiteRow::Verdict::kPass : BNSuiteRow::Verdict::kFail;
      } else {
        row.fraction = nonempty;
        row.verdict = BNSuiteRow::Verdict::kReportOnly;
      }
      if (row.verdict == BNSuiteRow::Verdict::kFail) out.pass = false;
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace bincurve
