// Copyright 2026 The appbasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include "appbasis/forms.hpp"
#include "appbasis/mbasis.hpp"
#include "generators.hpp"
#include "reference.hpp"

using namespace appbasis;
using namespace appbasis::testing;

TEST_SUITE("basecase") {
  TEST_CASE("order-one basis examples") {
    Field f(7);
    auto z = mbasis1(ConstMat(f, 3, 2), Shift{1, 2, 3});
    CHECK(z.matrix == PolyMat::identity(f, 3));
    CHECK(z.pivots.degree == std::vector<long long>{0, 0, 0});

    auto full = mbasis1(ConstMat::identity(f, 2), Shift{5, -3});
    CHECK(full.matrix(0, 0) == Poly::monomial(1, 1));
    CHECK(full.matrix(1, 1) == Poly::monomial(1, 1));
    CHECK(full.matrix(0, 1).is_zero());
    CHECK(full.pivots.degree == std::vector<long long>{1, 1});

    ConstMat c(f, 2, 1);
    c.at(0, 0) = 1;
    c.at(1, 0) = 1;
    auto b = mbasis1(c, Shift{0, 0});
    CHECK(b.matrix(0, 0) == Poly::monomial(1, 1));
    CHECK(b.matrix(0, 1).is_zero());
    CHECK(b.matrix(1, 0) == Poly::constant(6));
    CHECK(b.matrix(1, 1) == Poly::constant(1));
    CHECK(b.pivots.degree == std::vector<long long>{1, 0});
  }

  TEST_CASE("order-one basis property: Popov, approximant, rank-sized, canonical") {
    Rng rng(31);
    for (std::uint64_t p : {7ULL, 998244353ULL}) {
      Field f(p);
      for (int it = 0; it < 150; ++it) {
        std::size_t m = uniform_int(rng, 1, 7), n = uniform_int(rng, 1, 5);
        ConstMat c(f, m, n);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            c.at(i, j) = uniform_int(rng, 0, 2) ? static_cast<Elem>(uniform_int(rng, 0, static_cast<long long>(p - 1))) : 0;
          }
        }
        Shift s = make_shift(rng, static_cast<ShiftClass>(it % 3), m, 1);
        auto b = mbasis1(c, s);
        CHECK(check_form(b.matrix, s, Form::kPopov));
        CHECK(multiply(b.matrix.coefficient(0), c).is_zero());
        CHECK(sum(b.pivots.degree) == static_cast<long long>(rank(c)));
        PolyMat fm = PolyMat::from_constant(c);
        CHECK(b.matrix == canonical_basis(OrderTuple::uniform(n, 1), fm, s).matrix);
      }
    }
  }
}
