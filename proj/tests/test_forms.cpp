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
#include "appbasis/multiply.hpp"
#include "generators.hpp"

using namespace appbasis;
using namespace appbasis::testing;

namespace {

Poly P(std::initializer_list<Elem> c) { return Poly(std::vector<Elem>(c)); }

PolyMat mat2(const Field& f, Poly a, Poly b, Poly c, Poly d) {
  PolyMat m(f, 2, 2);
  m.at(0, 0) = std::move(a);
  m.at(0, 1) = std::move(b);
  m.at(1, 0) = std::move(c);
  m.at(1, 1) = std::move(d);
  return m;
}

ConstMat cmat2(const Field& f, Elem a, Elem b, Elem c, Elem d) {
  ConstMat m(f, 2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

TEST_SUITE("forms") {
  const Field f7(7);
  const PolyMat popov = mat2(f7, P({1, 1}), P({6}), P({1}), P({6, 1}));  // [[X+1,6],[1,X+6]]

  TEST_CASE("leading matrix examples") {
    PolyMat xi = mat2(f7, P({0, 1}), P({}), P({}), P({0, 1}));
    CHECK(leading_matrix(xi, Shift{0, 0}) == ConstMat::identity(f7, 2));
    CHECK(leading_matrix(popov, Shift{-1, -1}) == ConstMat::identity(f7, 2));
    PolyMat m1 = mat2(f7, P({0, 1}), P({}), P({6}), P({1}));
    CHECK(leading_matrix(m1, Shift{0, 0}) == cmat2(f7, 1, 0, 6, 1));
  }

  TEST_CASE("form checks") {
    PolyMat id = PolyMat::identity(f7, 3);
    for (Form form : {Form::kReduced, Form::kOrderedWeakPopov, Form::kPopov}) {
      CHECK(check_form(id, Shift{4, -2, 9}, form));
    }
    CHECK(check_form(popov, Shift{0, 0}, Form::kPopov));
    PolyMat owp = mat2(f7, P({1, 1}), P({6}), P({0, 6}), P({0, 1}));  // [[X+1,-1],[-X,X]]
    CHECK(check_form(owp, Shift{0, 0}, Form::kOrderedWeakPopov));
    CHECK_FALSE(check_form(owp, Shift{0, 0}, Form::kPopov));
    PolyMat singular = popov;
    singular.at(1, 0) = Poly();
    singular.at(1, 1) = Poly();
    CHECK_FALSE(check_form(singular, Shift{0, 0}, Form::kReduced));
  }

  TEST_CASE("pivot profile examples") {
    PolyMat xi = mat2(f7, P({0, 1}), P({}), P({}), P({0, 1}));
    auto a = pivot_profile(xi, Shift{0, 0});
    CHECK(a.index == std::vector<std::size_t>{0, 1});
    CHECK(a.degree == std::vector<long long>{1, 1});
    PolyMat m1 = mat2(f7, P({0, 1}), P({}), P({6}), P({1}));
    auto b = pivot_profile(m1, Shift{0, 0});
    CHECK(b.index == std::vector<std::size_t>{0, 1});
    CHECK(b.degree == std::vector<long long>{1, 0});
    PolyMat same = mat2(f7, P({0, 1}), P({}), P({0, 1}), P({}));
    CHECK_THROWS_AS(pivot_profile(same, Shift{0, 0}), std::domain_error);
  }

  TEST_CASE("normalization examples") {
    CHECK(normalize_to_popov(popov, {1, 1}).matrix == popov);
    PolyMat r = mat2(f7, P({1, 1}), P({6}), P({0, 6}), P({0, 1}));  // [[X+1,6],[6X,X]]
    auto out = normalize_to_popov(r, {1, 1});
    CHECK(out.matrix == popov);
    CHECK(out.pivots.degree == std::vector<long long>{1, 1});
  }

  TEST_CASE("membership examples") {
    Shift s{0, 0};
    CHECK(membership_reduce(popov.select_rows({0}), popov, s).is_zero());
    PolyMat v(f7, 1, 2);
    for (std::size_t j = 0; j < 2; ++j) {
      v.at(0, j) = add(f7, popov(0, j).shifted_up(1), popov(1, j));
    }
    CHECK(membership_reduce(v, popov, s).is_zero());
    PolyMat e(f7, 1, 2);
    e.at(0, 0) = P({1});
    CHECK_FALSE(membership_reduce(e, popov, s).is_zero());
  }

  TEST_CASE("membership property: random combinations reduce to zero") {
    Rng rng(21);
    Field f;
    for (int it = 0; it < 50; ++it) {
      std::size_t m = uniform_int(rng, 1, 4);
      // Unit upper triangular times diag(X^k) is in Popov form for s = 0
      // once the off-diagonal entries stay below the diagonal degree.
      PolyMat p(f, m, m);
      std::vector<long long> deg(m);
      for (std::size_t i = 0; i < m; ++i) deg[i] = uniform_int(rng, 1, 4);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (i == j) {
            p.at(i, i) = add(f, Poly::monomial(1, static_cast<std::size_t>(deg[i])), random_poly(rng, f, deg[i]));
          } else {
            p.at(i, j) = random_poly(rng, f, std::min(deg[j], deg[i] + (j < i ? 1 : 0)));
          }
        }
      }
      Shift s = Shift::uniform(m);
      if (!check_form(p, s, Form::kOrderedWeakPopov)) continue;
      PolyMat lambda = random_polymat(rng, f, 1, m, uniform_int(rng, 0, 5));
      PolyMat v = multiply(lambda, p);
      CHECK(membership_reduce(v, p, s).is_zero());
    }
  }

  TEST_CASE("principal submatrix and embedding") {
    Rng rng(22);
    Field f;
    PolyMat p = random_polymat(rng, f, 4, 4, 3);
    std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(principal_submatrix(p, all) == p);
    std::vector<std::size_t> idx{1, 3};
    PolyMat b = principal_submatrix(p, idx);
    CHECK(b(0, 1) == p(1, 3));
    CHECK(embed_principal(b, idx, p) == p);
  }
}
