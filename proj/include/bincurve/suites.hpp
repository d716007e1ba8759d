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

// Verification suites run by `bincurve verify`. Each one sweeps seeded random
// curves (or a given curve) and counts exceptions to one statement.

#ifndef BINCURVE_SUITES_HPP
#define BINCURVE_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bincurve/json_io.hpp"

namespace bincurve {

struct SuiteConfig {
  std::vector<int> genera;
  std::vector<std::uint32_t> primes;
  int curves = 1;
  // Every normal-form curve instead of `curves` random ones. Also used when
  // the sampler cannot run (g < 2 or p < g+3).
  bool all_curves = false;
  std::uint64_t seed = 1;
  int r = 1;
  std::optional<int> d;
  int trials = 50;
  bool exhaustive = false;
  EnumerationOptions enumeration;
  std::optional<AnyCurve> curve;  // replaces the random curves
};

struct SuiteReport {
  std::string suite;
  std::string label;
  SuiteConfig config;
  bool pass = false;
  std::uint64_t checked = 0;
  std::uint64_t exceptions = 0;
  Json details;
};

const std::vector<std::string>& suite_names();
std::string suite_label(const std::string& suite);

// Defaults sized for a desk run; throws std::invalid_argument on unknown names.
SuiteConfig default_suite_config(const std::string& suite);
SuiteReport run_suite(const std::string& suite, const SuiteConfig& config);

Json to_json(const SuiteConfig& c);
Json to_json(const SuiteReport& r);

// Integer-coordinate curves used when no curve is given.
BinaryCurve<Rational> standard_hyperelliptic(int g);
BinaryCurve<Rational> standard_general(int g);

}  // namespace bincurve

#endif  // BINCURVE_SUITES_HPP
