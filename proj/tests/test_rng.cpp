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


#include "bincurve/rng.hpp"

#include "doctest.h"

using bincurve::Rng;

TEST_CASE("reference stream") {
  Rng rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
  CHECK(rng.next() == 4593380528125082431ULL);
  CHECK(rng.next() == 16408922859458223821ULL);
  CHECK(rng.seed() == 1234567);
}

TEST_CASE("bounded draws are reproducible and in range") {
  Rng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(13);
    CHECK(x < 13);
    CHECK(x == b.below(13));
  }
  Rng c(7);
  Rng child = c.fork();
  Rng d(7);
  CHECK(child.seed() == d.next());
}
