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

#include "bincurve/line_bundle.hpp"

#include <limits>

namespace bincurve {

BundleEnumerator::BundleEnumerator(std::shared_ptr<const BinaryCurve<Fp>> x, Multidegree md)
    : curve_(std::move(x)), md_(md) {
  if (!curve_->field().is_prime_field()) throw std::invalid_argument("BundleEnumerator: needs a prime field");
  const std::uint64_t base = curve_->field().characteristic() - 1;
  for (int k = 0; k < curve_->genus(); ++k) {
    if (size_ > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("BundleEnumerator: torus too large");
    size_ *= base;
  }
}

std::vector<Fp> BundleEnumerator::gluing(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("BundleEnumerator: index out of range");
  const std::uint32_t p = curve_->field().characteristic();
  const std::uint64_t base = p - 1;
  std::vector<Fp> c(curve_->node_count(), Fp(1, p));
  for (int k = curve_->genus() - 1; k >= 0; --k) {
    c[static_cast<std::size_t>(k)] = Fp(static_cast<std::int64_t>(index % base) + 1, p);
    index /= base;
  }
  return c;
}

std::uint64_t BundleEnumerator::index_of(const std::vector<Fp>& c) const {
  if (c.size() != curve_->node_count()) throw std::invalid_argument("BundleEnumerator: wrong gluing length");
  const std::uint64_t base = curve_->field().characteristic() - 1;
  std::uint64_t index = 0;
  for (int k = 0; k < curve_->genus(); ++k) index = index * base + (c[static_cast<std::size_t>(k)].value() - 1);
  return index;
}

}  // namespace bincurve
