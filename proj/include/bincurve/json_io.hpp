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

// JSON forms of curves, bundles and reports. Scalars are decimal strings
// ("3", "-1/2"), points are homogeneous pairs in normal form (["a","1"] or
// ["1","0"]; a bare scalar or "inf" is also read), node subsets are 1-based.

#ifndef BINCURVE_JSON_IO_HPP
#define BINCURVE_JSON_IO_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bincurve/brill_noether.hpp"
#include "bincurve/cohomology.hpp"
#include "bincurve/curve.hpp"
#include "bincurve/line_bundle.hpp"
#include "bincurve/picard.hpp"

namespace bincurve {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json field_to_json(const FieldCtx& ctx);
FieldCtx field_from_json(const Json& j);

// Accepts strings and integers.
std::string scalar_text(const Json& j);

template <class Scalar>
Json point_to_json(const ProjPoint<Scalar>& pt) {
  return Json::array({pt.x().to_string(), pt.y().to_string()});
}

template <class Scalar>
ProjPoint<Scalar> point_from_json(const FieldCtx& ctx, const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return ProjPoint<Scalar>::infinity(ctx);
    return ProjPoint<Scalar>::finite(ctx, FieldTraits<Scalar>::parse(ctx, s));
  }
  if (j.is_number_integer()) return ProjPoint<Scalar>::finite(ctx, j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2)
    return ProjPoint<Scalar>::from_homogeneous(ctx, FieldTraits<Scalar>::parse(ctx, scalar_text(j[0])),
                                               FieldTraits<Scalar>::parse(ctx, scalar_text(j[1])));
  throw InputError("point: expected a scalar, \"inf\" or [x, y]");
}

template <class Scalar>
Json curve_to_json(const BinaryCurve<Scalar>& x) {
  Json nodes = Json::array();
  for (const auto& n : x.nodes()) nodes.push_back(Json::array({point_to_json(n.p), point_to_json(n.q)}));
  return Json{{"field", field_to_json(x.field())}, {"nodes", nodes}};
}

template <class Scalar>
BinaryCurve<Scalar> curve_from_json(const Json& j) {
  try {
    const FieldCtx ctx = field_from_json(j.at("field"));
    std::vector<Node<Scalar>> nodes;
    for (const auto& n : j.at("nodes")) {
      if (!n.is_array() || n.size() != 2) throw InputError("curve: every node is a pair of points");
      nodes.push_back({point_from_json<Scalar>(ctx, n[0]), point_from_json<Scalar>(ctx, n[1])});
    }
    if (nodes.size() < 2) throw InputError("curve: need at least two nodes");
    return BinaryCurve<Scalar>(ctx, std::move(nodes));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("curve: ") + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

using AnyCurve = std::variant<BinaryCurve<Fp>, BinaryCurve<Rational>>;

AnyCurve any_curve_from_json(const Json& j);

template <class Scalar>
Json scalars_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

inline Json md_to_json(Multidegree md) { return Json::array({md.d1, md.d2}); }
Multidegree md_from_json(const Json& j);

template <class Scalar>
Json bundle_to_json(const LineBundle<Scalar>& l) {
  return Json{{"md", md_to_json(l.multidegree())}, {"c", scalars_to_json(l.gluing())}};
}

template <class Scalar>
LineBundle<Scalar> bundle_from_json(std::shared_ptr<const BinaryCurve<Scalar>> x, const Json& j) {
  try {
    const Multidegree md = md_from_json(j.at("md"));
    std::vector<Scalar> c;
    for (const auto& v : j.at("c")) c.push_back(FieldTraits<Scalar>::parse(x->field(), scalar_text(v)));
    return LineBundle<Scalar>(std::move(x), md, std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bundle: ") + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json subset_to_json(const NodeSubset& s);

template <class Scalar>
Json base_locus_to_json(const BaseLocus<Scalar>& b) {
  Json nodes = Json::array();
  for (auto j : b.nodes) nodes.push_back(j + 1);
  Json pts = Json::array();
  for (const auto& s : b.smooth_points) pts.push_back(Json{{"component", s.component}, {"point", point_to_json(s.point)}});
  return Json{{"nodes", nodes},
              {"smooth_points", pts},
              {"whole_C1", b.whole_component[0]},
              {"whole_C2", b.whole_component[1]}};
}

Json to_json(const BNReport& r);
Json to_json(const CliffordReport& r);
Json to_json(const DimEstimate& e);
Json to_json(const AbelStats& s);
Json to_json(const StrataListing& s);
Json to_json(const WbarReport& r);
Json to_json(const VeryAmpleReport& r);
Json to_json(const BNSuiteReport& r);

BNReport bn_report_from_json(const Json& j);

}  // namespace bincurve

#endif  // BINCURVE_JSON_IO_HPP
