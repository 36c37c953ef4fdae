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

#include "appbasis/mbasis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "appbasis/lsp.hpp"

namespace appbasis {

BasisResult mbasis1(const ConstMat& c, const Shift& s) {
  const std::size_t m = c.rows();
  if (s.size() != m) throw std::invalid_argument("mbasis1: shift length differs from row count");
  const Field& f = c.field();

  // order[k] is the k-th row by increasing (s_i, i); pos is its inverse.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  std::vector<std::size_t> pos(m);
  for (std::size_t k = 0; k < m; ++k) pos[order[k]] = k;

  ConstMat cs(f, m, c.cols());
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < c.cols(); ++j) cs.at(k, j) = c(order[k], j);
  }
  RowProfile rp = row_rank_profile(cs);
  std::vector<bool> in_profile(m, false);
  for (auto k : rp.profile) in_profile[k] = true;

  BasisResult out{PolyMat(f, m, m), {}, Form::kPopov};
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t k = pos[i];
    if (in_profile[k]) {
      out.matrix.at(i, i) = Poly::monomial(1, 1);
    } else {
      out.matrix.at(i, i) = Poly::constant(1);
      for (std::size_t l = 0; l < k; ++l) {
        Elem x = rp.L(k, l);
        if (x != 0) out.matrix.at(i, order[l]) = Poly::constant(f.neg(x));
      }
    }
    out.pivots.index.push_back(i);
    out.pivots.degree.push_back(in_profile[k] ? 1 : 0);
  }
  return out;
}

}  // namespace appbasis
