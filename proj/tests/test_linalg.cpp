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


#include "bincurve/linalg.hpp"

#include "bincurve/rng.hpp"
#include "doctest.h"

using namespace bincurve;

namespace {

Matrix<Fp> fp_matrix(std::uint32_t p, Index r, Index c, std::initializer_list<std::int64_t> v) {
  Matrix<Fp> m(r, c);
  auto it = v.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Fp(*it++, p);
  return m;
}

Matrix<Rational> q_matrix(Index r, Index c, std::initializer_list<std::int64_t> v) {
  Matrix<Rational> m(r, c);
  auto it = v.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Rational(*it++, 1);
  return m;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(Matrix<Fp>(0, 4)) == 0);
  CHECK(rank(fp_matrix(7, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == 3);
  CHECK(rank(q_matrix(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(fp_matrix(5, 2, 2, {1, 2, 2, 4})) == 1);
  // det = 5, singular mod 5 only
  CHECK(rank(q_matrix(2, 2, {1, 2, 3, 11})) == 2);
  CHECK(rank(fp_matrix(5, 2, 2, {1, 2, 3, 11})) == 1);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(fp_matrix(7, 2, 2, {1, 0, 0, 1}), Fp(1, 7)).empty());
  CHECK(kernel_basis(fp_matrix(7, 1, 2, {0, 0}), Fp(1, 7)).size() == 2);
  const auto k = kernel_basis(fp_matrix(5, 1, 2, {1, -1}), Fp(1, 5));
  REQUIRE(k.size() == 1);
  CHECK(k[0](0) == Fp(1, 5));
  CHECK(k[0](1) == Fp(1, 5));
}

TEST_CASE("rank-nullity and transpose on random matrices") {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const Index r = static_cast<Index>(rng.below(6)), c = static_cast<Index>(1 + rng.below(6));
    Matrix<Rational> q(r, c);
    Matrix<Fp> f(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) {
        const std::int64_t v = static_cast<std::int64_t>(rng.below(5)) - 2;
        q(i, j) = Rational(v, 1);
        f(i, j) = Fp(v, 101);
      }
    const Index rq = rank(q);
    CHECK(rq == rank(Matrix<Rational>(q.transpose())));
    CHECK(rank(f) == rank(Matrix<Fp>(f.transpose())));
    const auto kq = kernel_basis(q, Rational(1));
    CHECK(static_cast<Index>(kq.size()) + rq == c);
    for (const auto& v : kq) {
      const Vector<Rational> w = q * v;
      for (Index i = 0; i < w.size(); ++i) CHECK(w(i) == Rational(0));
    }
    // Small entries against a large prime: ranks agree unless a minor vanishes mod p.
    CHECK(rank(f) <= rq);
  }
}
