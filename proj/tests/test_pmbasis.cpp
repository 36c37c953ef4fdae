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
#include "appbasis/oracle.hpp"
#include "appbasis/pmbasis.hpp"
#include "generators.hpp"
#include "reference.hpp"

using namespace appbasis;
using namespace appbasis::testing;

namespace {

Poly P(std::initializer_list<Elem> c) { return Poly(std::vector<Elem>(c)); }

}  // namespace

TEST_SUITE("pmbasis") {
  const Field f7(7);

  PolyMat small_input() {
    PolyMat F(f7, 2, 1);
    F.at(0, 0) = P({1});
    F.at(1, 0) = P({1, 1});
    return F;
  }

  TEST_CASE("uniform order examples") {
    Rng rng(41);
    Field f;
    PolyMat F = random_polymat(rng, f, 3, 2, 1);
    CHECK(pm_basis(1, F, Shift{0, 1, 2}).matrix == mbasis1(F.coefficient(0), Shift{0, 1, 2}).matrix);

    PolyMat one(f7, 1, 1);
    one.at(0, 0) = P({1});
    CHECK(pm_basis(3, one, Shift{0}).matrix(0, 0) == Poly::monomial(1, 3));

    auto b = pm_basis(2, small_input(), Shift{0, 0});
    CHECK(b.pivots.degree == std::vector<long long>{1, 1});
    CHECK(check_form(b.matrix, Shift{0, 0}, Form::kOrderedWeakPopov));
    PolyMat expect(f7, 2, 2);
    expect.at(0, 0) = P({1, 1});
    expect.at(0, 1) = P({6});
    expect.at(1, 0) = P({0, 6});
    expect.at(1, 1) = P({0, 1});
    CHECK(b.matrix == expect);
  }

  TEST_CASE("order padding") {
    Rng rng(42);
    Field f;
    PolyMat F = random_input(rng, f, 2, {3, 3});
    auto u = pad_orders(OrderTuple{3, 3}, F);
    CHECK(u.sigma == 3);
    CHECK(u.f == F);
    PolyMat G = random_input(rng, f, 2, {2, 1});
    auto v = pad_orders(OrderTuple{2, 1}, G);
    CHECK(v.sigma == 2);
    CHECK(v.f(1, 1) == G(1, 1).shifted_up(1));
    CHECK(v.f(0, 0) == G(0, 0));
  }

  TEST_CASE("two-pass Popov examples") {
    CHECK(popov_pm_basis(OrderTuple{4}, PolyMat(f7, 3, 1), Shift{1, 2, 3}).matrix == PolyMat::identity(f7, 3));
    auto b = popov_pm_basis(OrderTuple{2}, small_input(), Shift{0, 0});
    PolyMat expect(f7, 2, 2);
    expect.at(0, 0) = P({1, 1});
    expect.at(0, 1) = P({6});
    expect.at(1, 0) = P({1});
    expect.at(1, 1) = P({6, 1});
    CHECK(b.matrix == expect);
  }

  TEST_CASE("property: owp approximant basis of degree at most sigma") {
    Rng rng(43);
    Field f;
    for (int it = 0; it < 80; ++it) {
      std::size_t m = uniform_int(rng, 1, 5), n = uniform_int(rng, 1, 5);
      long long sigma = uniform_int(rng, 1, 20);
      PolyMat F = random_polymat(rng, f, m, n, sigma);
      Shift s = make_shift(rng, static_cast<ShiftClass>(it % 3), m, sigma);
      auto b = pm_basis(sigma, F, s);
      OrderTuple d = OrderTuple::uniform(n, sigma);
      CHECK(b.matrix.degree() <= Degree(sigma));
      CHECK(verify_basis(b.matrix, d, F, s, Form::kOrderedWeakPopov).all());
      CHECK(b.pivots.degree == iterative_appbasis(d, F, s).pivots.degree);
    }
  }

  TEST_CASE("property: two-pass Popov equals the canonical basis") {
    Rng rng(44);
    Field f;
    for (int it = 0; it < 80; ++it) {
      std::size_t m = uniform_int(rng, 1, 5), n = uniform_int(rng, 1, 5);
      auto dv = random_orders(rng, n, 10, 30);
      PolyMat F = random_input(rng, f, m, dv);
      OrderTuple d(dv);
      Shift s = make_shift(rng, static_cast<ShiftClass>(it % 3), m, d.sigma());
      CHECK(popov_pm_basis(d, F, s).matrix == canonical_basis(d, F, s).matrix);
    }
  }
}
