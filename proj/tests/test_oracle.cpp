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

#include "appbasis/multiply.hpp"
#include "appbasis/oracle.hpp"
#include "generators.hpp"
#include "reference.hpp"

using namespace appbasis;
using namespace appbasis::testing;

namespace {

PolyMat x_times(const PolyMat& a) {
  PolyMat out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j).shifted_up(1);
  }
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("iterative example") {
    Field f7(7);
    PolyMat F(f7, 2, 1);
    F.at(0, 0) = Poly::constant(1);
    F.at(1, 0) = Poly(std::vector<Elem>{1, 1});
    auto b = iterative_appbasis(OrderTuple{2}, F, Shift{0, 0});
    PolyMat expect(f7, 2, 2);
    expect.at(0, 0) = Poly(std::vector<Elem>{1, 1});
    expect.at(0, 1) = Poly::constant(6);
    expect.at(1, 0) = Poly(std::vector<Elem>{0, 6});
    expect.at(1, 1) = Poly(std::vector<Elem>{0, 1});
    CHECK(b.matrix == expect);
    CHECK(b.pivots.degree == std::vector<long long>{1, 1});
  }

  TEST_CASE("verify flags") {
    Rng rng(101);
    Field f;
    PolyMat F = random_input(rng, f, 3, {4, 3});
    OrderTuple d{4, 3};
    Shift s{0, 1, 2};
    auto canon = canonical_basis(d, F, s);
    CHECK(verify_basis(canon.matrix, d, F, s, Form::kPopov).all());
    CHECK(verify_basis(canon.matrix, d, F, s, Form::kPopov).line() ==
          "approximant=ok form=ok degrees=ok generation=ok");

    auto scaled = verify_basis(x_times(canon.matrix), d, F, s, Form::kReduced);
    CHECK(scaled.approximant);
    CHECK(!scaled.generation);

    PolyMat zero_row = canon.matrix;
    for (std::size_t j = 0; j < 3; ++j) zero_row.at(1, j) = Poly();
    auto z = verify_basis(zero_row, d, F, s, Form::kReduced);
    CHECK(!z.form);
    CHECK(!z.all());
    CHECK(z.line().find("form=FAIL") != std::string::npos);

    PolyMat wrong = PolyMat::identity(f, 3);
    CHECK(!verify_basis(wrong, d, F, s, Form::kPopov).approximant);
  }

  TEST_CASE("property: any corruption of a canonical basis is flagged") {
    Rng rng(104);
    Field f;
    int trials = 0;
    while (trials < 100) {
      std::size_t m = uniform_int(rng, 2, 4), n = uniform_int(rng, 1, 3);
      auto dv = random_orders(rng, n, 6, 16);
      PolyMat F = random_input(rng, f, m, dv);
      OrderTuple d(dv);
      Shift s = make_shift(rng, ShiftClass::kRandom, m, d.sigma());
      PolyMat good = canonical_basis(d, F, s).matrix;
      PolyMat bad = good;
      std::size_t i = uniform_int(rng, 0, m - 1);
      switch (trials % 3) {
        case 0: {
          std::size_t j = uniform_int(rng, 0, m - 1);
          std::size_t k = uniform_int(rng, 0, std::max<long long>(0, good(i, j).degree().is_finite()
                                                                          ? good(i, j).degree().value()
                                                                          : 0));
          bad.at(i, j).set_coeff(k, f.add(good(i, j).coeff(k), 1));
          break;
        }
        case 1: {
          Elem c = uniform_int(rng, 2, 1000);
          for (std::size_t j = 0; j < m; ++j) bad.at(i, j) = scale(f, c, good(i, j));
          break;
        }
        default: {
          std::size_t k = (i + 1) % m;
          for (std::size_t j = 0; j < m; ++j) std::swap(bad.at(i, j), bad.at(k, j));
        }
      }
      ++trials;
      CHECK(!verify_basis(bad, d, F, s, Form::kPopov).all());
    }
  }

  TEST_CASE("matmul embedding examples") {
    Field f7(7);
    PolyMat a(f7, 1, 1), b(f7, 1, 1);
    a.at(0, 0) = Poly::constant(2);
    b.at(0, 0) = Poly::constant(3);
    CHECK(matmul_embed(a, b, 0)(0, 0) == Poly::constant(6));
    CHECK(matmul_embed(PolyMat(f7, 2, 2), PolyMat(f7, 2, 2), 3).is_zero());
  }

  TEST_CASE("property: matmul embedding agrees with the product") {
    Rng rng(102);
    Field f;
    for (int it = 0; it < 20; ++it) {
      std::size_t n = uniform_int(rng, 1, 3);
      long long deg = uniform_int(rng, 0, 4);
      PolyMat a = random_polymat(rng, f, n, n, deg + 1), b = random_polymat(rng, f, n, n, deg + 1);
      CHECK(matmul_embed(a, b, deg) == multiply(a, b, MatMulAlgo::kSchoolbook));
    }
  }

  TEST_CASE("property: iterative basis is an ordered weak Popov approximant basis") {
    Rng rng(103);
    Field f;
    for (int it = 0; it < 60; ++it) {
      std::size_t m = uniform_int(rng, 1, 5), n = uniform_int(rng, 1, 5);
      auto dv = random_orders(rng, n, 8, 24);
      PolyMat F = random_input(rng, f, m, dv);
      OrderTuple d(dv);
      Shift s = make_shift(rng, static_cast<ShiftClass>(it % 3), m, d.sigma());
      auto b = iterative_appbasis(d, F, s);
      auto rep = verify_basis(b.matrix, d, F, s, Form::kOrderedWeakPopov);
      CHECK(rep.approximant);
      CHECK(rep.form);
      CHECK(sum(b.pivots.degree) <= d.sigma());
    }
  }
}
