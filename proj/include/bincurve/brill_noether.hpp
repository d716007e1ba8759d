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

// Brill-Noether loci W^r_md = { L : h0(L) >= r+1 } over prime fields, by
// exhaustive scan of the (p-1)^g classes of a multidegree, and the verdicts
// built on those scans.

#ifndef BINCURVE_BRILL_NOETHER_HPP
#define BINCURVE_BRILL_NOETHER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bincurve/cohomology.hpp"
#include "bincurve/curve.hpp"
#include "bincurve/line_bundle.hpp"
#include "bincurve/picard.hpp"
#include "bincurve/rng.hpp"

namespace bincurve {

// h0 for every class of one multidegree, on machine words. Holds scratch
// space, so each thread needs its own instance.
class TorusScanner {
 public:
  TorusScanner(const BinaryCurve<Fp>& x, Multidegree md);

  std::uint64_t size() const { return size_; }
  Multidegree multidegree() const { return md_; }
  // Gluing of class `index` in BundleEnumerator order.
  std::vector<Fp> gluing(std::uint64_t index) const;
  int h0(std::uint64_t index);
  // Any gluing vector, canonical or not.
  int h0_of(const std::vector<Fp>& c);

 private:
  int h0_raw();

  std::uint32_t p_;
  int genus_;
  Multidegree md_;
  std::size_t k1_, k2_, rows_;
  std::uint64_t size_ = 1;
  std::vector<std::uint32_t> e1_, e2_;  // rows_ x k1_, rows_ x k2_
  std::vector<std::uint32_t> c_;
  std::vector<std::uint32_t> work_;
};

struct BNQuery {
  Multidegree md;
  int r = 0;
};

struct EnumerationOptions {
  unsigned jobs = 1;
  std::size_t witness_cap = 64;
};

struct BNReport {
  BNQuery query;
  std::uint32_t p = 0;
  std::uint64_t total = 0;  // classes scanned
  std::uint64_t count = 0;  // classes with h0 >= r+1
  std::size_t witness_cap = 0;
  std::vector<std::vector<Fp>> witnesses;  // first witness_cap hits in enumeration order
  double elapsed_seconds = 0;
};

BNReport bn_enumerate(const BinaryCurve<Fp>& x, const BNQuery& q, const EnumerationOptions& opts = {});

// counts[h] = number of classes with h0 = h.
std::vector<std::uint64_t> h0_histogram(const BinaryCurve<Fp>& x, Multidegree md, unsigned jobs = 1);

// Multidegrees of balanced loci known to be empty: after sorting d1 <= d2,
// either d1 < 0 and d <= g+r, or 0 <= d1 <= r-1 and d <= g+r-1. For an
// unbalanced md only d1 < 0 is decided, by h0 = max(0, d2 - g).
bool predicted_empty(Multidegree md, int r, int g);

// Expected dimension (r+1)d - rg - (r+1)r.
int rho(int g, int d, int r);

struct CliffordReport {
  std::uint32_t p = 0;
  std::optional<int> cliff;  // nullopt when no class has h0 >= 2 and h1 >= 2
  std::optional<Multidegree> md;
  std::vector<Fp> witness;
  int h0 = 0;
  std::string method;  // "genus<=2", "shortcut" or "full"
};

enum class CliffordMode { kShortcut, kFullScan };

// Minimum of d - 2h0 + 2 over balanced L with h0 >= 2 and h1 >= 2, over the
// ground field. The shortcut mode looks at (h,h) and (h,h+1) multidegrees
// first and falls back to the full scan.
CliffordReport clifford_index(const BinaryCurve<Fp>& x, CliffordMode mode = CliffordMode::kShortcut,
                              unsigned jobs = 1);

struct CliffordZeroVerdict {
  int d = 0;
  bool pass = false;
  LineBundle<Fp> expected;                    // H^(d/2)
  std::vector<LineBundle<Fp>> found;          // balanced, degree d, h0 = d/2 + 1
  std::optional<LineBundle<Fp>> counterexample;
};

// For hyperelliptic X and even d in [0, 2g-2]: the balanced classes with
// h0 = d/2 + 1 are exactly H^(d/2).
CliffordZeroVerdict clifford_zero_classification(const BinaryCurve<Fp>& x, int d);

struct MartensPrediction {
  enum class Kind { kEmpty, kExact, kAtMost };
  Kind kind;
  int value = 0;  // dimension, or its upper bound
  std::string to_string() const;
};

MartensPrediction martens_bound(int g, Multidegree md, int r, bool hyperelliptic);

struct BadReduction : std::domain_error {
  using std::domain_error::domain_error;
};

// Reduction of a curve with p-integral coordinates.
BinaryCurve<Fp> reduce_mod(const BinaryCurve<Rational>& x, std::uint32_t p);

struct PrimeCount {
  std::uint32_t p = 0;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
};

struct DimEstimate {
  std::vector<PrimeCount> counts;
  bool empty = false;          // zero at every prime
  bool inconclusive = false;   // mixed zero/nonzero counts or residual above the tolerance
  std::optional<double> estimate;
  std::optional<int> rounded;
  double residual = 0;
  double tolerance = 0.35;
};

// Least-squares slope of log N against log p.
DimEstimate fit_dimension(std::vector<PrimeCount> counts, double tolerance = 0.35);
DimEstimate estimate_dim(const BinaryCurve<Rational>& x, const BNQuery& q, const std::vector<std::uint32_t>& primes,
                         const EnumerationOptions& opts = {}, double tolerance = 0.35);

struct AbelStats {
  int trials = 0;
  int h0_one = 0;
  double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(h0_one) / trials; }
};

// Random effective divisors of multidegree md, points drawn uniformly (with
// repetition) from the smooth locus.
AbelStats abel_sample(const BinaryCurve<Fp>& x, Multidegree md, Rng& rng, int trials);

struct StratumCount {
  StratumKey key;
  int dimension = 0;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
};

struct WbarReport {
  int d = 0;
  int r = 0;
  PicardType type;
  std::vector<StratumCount> strata;
  std::optional<int> ell0_h0;
  bool ell0_in_wbar = false;
  bool closure_order_ok = false;   // closure_leq is a partial order on the keys
  bool semicontinuity_ok = false;  // full strata have full strata in their closure
  std::uint64_t total_count() const;
};

WbarReport assemble_Wbar(const BinaryCurve<Fp>& x, int d, int r, const EnumerationOptions& opts = {});

struct VeryAmpleCheck {
  std::string name;      // "pq", "nY", "2r+s", "r+2s", "2r+2s", "3r+s", "r+3s", "pn", "nn"
  std::string location;  // human-readable points
  int expected = 0;
  int observed = 0;
  bool ok() const { return expected == observed; }
};

struct VeryAmpleReport {
  bool hyperelliptic = false;
  std::vector<VeryAmpleCheck> checks;
  std::size_t failures = 0;
  // Non-hyperelliptic: no failure. Hyperelliptic: at least one failure.
  bool pass = false;
};

VeryAmpleReport verify_canonical_very_ample(const BinaryCurve<Fp>& x, Rng& rng, int trials, bool exhaustive = false);

struct BNSuiteConfig {
  int g = 3;
  int r = 1;
  std::vector<std::uint32_t> primes{11};
  int curves = 20;
  int d_min = 0;
  int d_max = -1;  // defaults to 2g-2
  double empty_threshold = 0.9;
  double nonempty_threshold = 0.8;
  EnumerationOptions enumeration;
};

struct BNSuiteRow {
  std::uint32_t p = 0;
  int d = 0;
  int rho = 0;
  std::vector<Multidegree> mds;
  std::vector<int> nonempty_per_md;  // curves with a nonzero count, per md
  int curves = 0;
  int nonempty_any = 0;              // curves nonempty for some md
  enum class Verdict { kPass, kFail, kReportOnly } verdict;
  double fraction = 0;  // compared against the threshold; ignored for report-only rows
};

struct BNSuiteReport {
  BNSuiteConfig config;
  std::uint64_t seed = 0;
  std::vector<BNSuiteRow> rows;
  bool pass = false;
};

BNSuiteReport bn_suite(const BNSuiteConfig& config, Rng& rng);

std::string to_string(BNSuiteRow::Verdict v);

}  // namespace bincurve

#endif  // BINCURVE_BRILL_NOETHER_HPP
