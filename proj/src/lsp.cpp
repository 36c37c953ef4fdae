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

#include "appbasis/lsp.hpp"

namespace appbasis {

RowProfile row_rank_profile(const ConstMat& c) {
  const Field& f = c.field();
  const std::size_t m = c.rows(), n = c.cols();
  RowProfile out{{}, ConstMat::identity(f, m)};

  // Echelon rows with their pivot column, and each one's expression as a
  // combination of original rows (dense over the m row indices).
  std::vector<std::vector<Elem>> ech;
  std::vector<std::size_t> ech_col;
  std::vector<std::vector<Elem>> ech_comb;

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Elem> row(n), comb(m, 0);
    for (std::size_t j = 0; j < n; ++j) row[j] = c(i, j);
    comb[i] = 1;
    for (std::size_t e = 0; e < ech.size(); ++e) {
      Elem x = row[ech_col[e]];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) row[j] = f.sub(row[j], f.mul(x, ech[e][j]));
      for (std::size_t k = 0; k < i; ++k) comb[k] = f.sub(comb[k], f.mul(x, ech_comb[e][k]));
    }
    std::size_t piv = 0;
    while (piv < n && row[piv] == 0) ++piv;
    if (piv == n) {
      // comb . C = 0 with comb[i] = 1; L holds the negated off-diagonal part.
      for (std::size_t k = 0; k < i; ++k) out.L.at(i, k) = f.neg(comb[k]);
      continue;
    }
    Elem s = f.inv(row[piv]);
    for (auto& x : row) x = f.mul(x, s);
    for (auto& x : comb) x = f.mul(x, s);
    // Keep the echelon rows fully reduced on pivot columns.
    for (std::size_t e = 0; e < ech.size(); ++e) {
      Elem x = ech[e][piv];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) ech[e][j] = f.sub(ech[e][j], f.mul(x, row[j]));
      for (std::size_t k = 0; k <= i; ++k) ech_comb[e][k] = f.sub(ech_comb[e][k], f.mul(x, comb[k]));
    }
    ech.push_back(std::move(row));
    ech_col.push_back(piv);
    ech_comb.push_back(std::move(comb));
    out.profile.push_back(i);
  }
  return out;
}

}  // namespace appbasis
