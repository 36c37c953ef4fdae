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

#include <sstream>

#include "appbasis/io.hpp"
#include "generators.hpp"

using namespace appbasis;
using namespace appbasis::testing;

namespace {

std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_polymat(in);
  } catch (const std::runtime_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("text layout") {
    Field f7(7);
    PolyMat a(f7, 1, 2);
    a.at(0, 1) = Poly(std::vector<Elem>{3, 0, 5});
    CHECK(to_text(a, std::vector<long long>{2, 4}) ==
          "POLYMAT 1\nmodulus 7\ndims 1 2\norders 2 4\n0 0 :\n0 1 : 3 0 5\n");
  }

  TEST_CASE("property: round trip") {
    Rng rng(111);
    for (Elem p : {Elem{7}, Elem{998244353}, Elem{1000000007}}) {
      Field f(p);
      for (int it = 0; it < 20; ++it) {
        std::size_t m = uniform_int(rng, 0, 4), n = uniform_int(rng, 0, 4);
        PolyMat a = random_polymat(rng, f, m, n, uniform_int(rng, 0, 6));
        std::optional<std::vector<long long>> orders;
        if (it % 2) orders = random_orders(rng, n, 5, 20);
        std::string text = to_text(a, orders);
        std::istringstream in(text);
        auto back = read_polymat(in);
        CHECK(back.matrix == a);
        CHECK(back.orders == orders);
        CHECK(to_text(back.matrix, back.orders) == text);
      }
    }
  }

  TEST_CASE("malformed input reports the line") {
    CHECK(error_of("") .find("POLYMAT line 0") == 0);
    CHECK(error_of("POLYMAT 1\nmodulus 8\n").find("POLYMAT line 2") == 0);
    CHECK(error_of("POLYMAT 1\nmodulus 7\ndims x\n").find("POLYMAT line 3") == 0);
    CHECK(error_of("POLYMAT 1\nmodulus 7\ndims 1 1\n0 0 : 9\n").find("line 4: coefficient") != std::string::npos);
    CHECK(error_of("POLYMAT 1\nmodulus 7\ndims 1 2\n0 1 : 1\n0 0 :\n").find("line 4") != std::string::npos);
    CHECK(error_of("POLYMAT 1\nmodulus 7\ndims 1 2\n0 0 : 1\n").find("expected 2 entries") != std::string::npos);
    CHECK(error_of("POLYMAT 1\nmodulus 7\ndims 1 1\norders 1 2\n0 0 :\n").find("line 4") != std::string::npos);
    CHECK(error_of("POLYMAT 1\nmodulus 7\ndims 1 1\n0 0 : -1\n").find("bad coefficient") != std::string::npos);
    CHECK(error_of("POLYMAT 1\nmodulus 7\ndims 1 1\n0 0 : 1\n").empty());
  }
}
