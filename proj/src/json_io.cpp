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

#include "bincurve/json_io.hpp"

namespace bincurve {

Json field_to_json(const FieldCtx& ctx) {
  if (ctx.is_prime_field()) return Json{{"type", "Fp"}, {"p", ctx.characteristic()}};
  return Json{{"type", "Q"}};
}

FieldCtx field_from_json(const Json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "Q") return FieldCtx::rationals();
    if (type == "Fp") {
      const auto p = j.at("p").get<std::int64_t>();
      if (p < 5 || p > 0xffffffffLL) throw InputError("field: p out of range");
      return FieldCtx::prime(static_cast<std::uint32_t>(p));
    }
    throw InputError("field: unknown type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field: ") + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw InputError("scalar: expected a string or an integer");
}

AnyCurve any_curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) throw InputError("curve: missing field");
  if (field_from_json(j.at("field")).is_prime_field()) return curve_from_json<Fp>(j);
  return curve_from_json<Rational>(j);
}

Multidegree md_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw InputError("md: expected [d1, d2]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json subset_to_json(const NodeSubset& s) {
  Json out = Json::array();
  for (auto j : s.indices()) out.push_back(j + 1);
  return out;
}

Json to_json(const BNReport& r) {
  Json w = Json::array();
  for (const auto& c : r.witnesses) w.push_back(scalars_to_json(c));
  return Json{{"query", {{"md", md_to_json(r.query.md)}, {"r", r.query.r}}},
              {"p", r.p},
              {"total", r.total},
              {"count", r.count},
              {"witness_cap", r.witness_cap},
              {"witnesses", w}};
}

BNReport bn_report_from_json(const Json& j) {
  try {
    BNReport r;
    r.query = {md_from_json(j.at("query").at("md")), j.at("query").at("r").get<int>()};
    r.p = j.at("p").get<std::uint32_t>();
    r.total = j.at("total").get<std::uint64_t>();
    r.count = j.at("count").get<std::uint64_t>();
    r.witness_cap = j.at("witness_cap").get<std::size_t>();
    for (const auto& w : j.at("witnesses")) {
      std::vector<Fp> c;
      for (const auto& v : w) c.emplace_back(std::stoll(scalar_text(v)), r.p);
      r.witnesses.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

Json to_json(const CliffordReport& r) {
  Json out{{"p", r.p}, {"over", "F_" + std::to_string(r.p)}, {"method", r.method}};
  out["cliff"] = r.cliff ? Json(*r.cliff) : Json();
  out["md"] = r.md ? md_to_json(*r.md) : Json();
  out["h0"] = r.h0;
  out["witness"] = scalars_to_json(r.witness);
  return out;
}

Json to_json(const DimEstimate& e) {
  Json counts = Json::array();
  for (const auto& c : e.counts) counts.push_back(Json{{"p", c.p}, {"count", c.count}, {"total", c.total}});
  std::string verdict = "estimate";
  if (e.empty) verdict = "empty";
  else if (e.inconclusive) verdict = "inconclusive";
  Json out{{"counts", counts}, {"verdict", verdict}};
  out["estimate"] = e.estimate ? Json(*e.estimate) : Json();
  out["rounded"] = e.rounded ? Json(*e.rounded) : Json();
  out["residual"] = e.residual;
  out["tolerance"] = e.tolerance;
  return out;
}

Json to_json(const AbelStats& s) {
  return Json{{"trials", s.trials}, {"h0_one", s.h0_one}, {"fraction", s.fraction()}};
}

namespace {

Json key_to_json(const StratumKey& k) { return Json{{"S", subset_to_json(k.s)}, {"md", md_to_json(k.md)}}; }

}  // namespace

Json to_json(const StrataListing& s) {
  Json strata = Json::array();
  for (const auto& k : s.strata) {
    Json e = key_to_json(k);
    e["dimension"] = stratum_dimension(k, s.g);
    strata.push_back(e);
  }
  Json out{{"g", s.g}, {"d", s.d}, {"type", to_string(s.type)}, {"count", s.strata.size()}, {"strata", strata}};
  out["ell0"] = s.ell0 ? Json{{"d", s.ell0->d}, {"g", s.ell0->g}, {"h0_bar", h0_bar(*s.ell0)}} : Json();
  return out;
}

Json to_json(const WbarReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    Json e = key_to_json(s.key);
    e["dimension"] = s.dimension;
    e["count"] = s.count;
    e["total"] = s.total;
    strata.push_back(e);
  }
  Json out{{"d", r.d}, {"r", r.r}, {"type", to_string(r.type)}, {"strata", strata}, {"total_count", r.total_count()}};
  out["ell0_h0"] = r.ell0_h0 ? Json(*r.ell0_h0) : Json();
  out["ell0_in_wbar"] = r.ell0_in_wbar;
  out["closure_order_ok"] = r.closure_order_ok;
  out["semicontinuity_ok"] = r.semicontinuity_ok;
  return out;
}

Json to_json(const VeryAmpleReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"check", c.name}, {"at", c.location}, {"expected", c.expected}, {"observed", c.observed}});
  return Json{{"hyperelliptic", r.hyperelliptic}, {"failures", r.failures}, {"pass", r.pass}, {"checks", checks}};
}

Json to_json(const BNSuiteReport& r) {
  const auto& c = r.config;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json mds = Json::array();
    for (const auto& md : row.mds) mds.push_back(md_to_json(md));
    rows.push_back(Json{{"p", row.p},
                        {"d", row.d},
                        {"rho", row.rho},
                        {"mds", mds},
                        {"nonempty_per_md", row.nonempty_per_md},
                        {"curves", row.curves},
                        {"nonempty_any", row.nonempty_any},
                        {"fraction", row.fraction},
                        {"verdict", to_string(row.verdict)}});
  }
  return Json{{"config",
               {{"g", c.g},
                {"r", c.r},
                {"primes", c.primes},
                {"curves", c.curves},
                {"d_min", c.d_min},
                {"d_max", c.d_max},
                {"empty_threshold", c.empty_threshold},
                {"nonempty_threshold", c.nonempty_threshold}}},
              {"seed", r.seed},
              {"rows", rows},
              {"pass", r.pass}};
}

}  // namespace bincurve
