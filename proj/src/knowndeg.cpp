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

#include "appbasis/knowndeg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "appbasis/coldim.hpp"
#include "appbasis/forms.hpp"
#include "appbasis/linearize.hpp"
#include "appbasis/multiply.hpp"
#include "appbasis/pmbasis.hpp"
#include "appbasis/residual.hpp"

namespace appbasis {

BasisResult known_deg_appbasis(const OrderTuple& d, const PolyMat& f, const Shift& s,
                               const std::vector<long long>& delta, bool verify) {
  const std::size_t m = f.rows(), n = f.cols();
  if (d.size() != n || s.size() != m || delta.size() != m) {
    throw std::invalid_argument("known_deg_appbasis: shape mismatch");
  }
  const long long sigma = d.sigma();
  for (long long x : delta) {
    if (x < 0) throw std::invalid_argument("known_deg_appbasis: negative pivot degree");
  }
  if (sum(delta) > sigma) throw std::invalid_argument("known_deg_appbasis: sum(delta) exceeds sigma");
  const Field& fld = f.field();
  if (n == 0) return normalize_to_popov(PolyMat::identity(fld, m), delta);

  const long long ms = static_cast<long long>(m);
  const long long deg_exp = std::max<long long>(1, (sigma + ms - 1) / ms);
  Shift neg_delta = Shift(delta).negated();
  RowLinearization rl = col_par_lin(d.values(), f, neg_delta, deg_exp, neg_delta.max());
  const std::size_t mh = rl.m_hat();

  // Columns by nonincreasing order.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  OrderTuple ds = d.subset(perm);
  PolyMat fs = rl.f_hat.select_cols(perm);

  std::vector<long long> d_hat = ds.values();
  PolyMat f_hat = fs;
  Shift t_hat = rl.s_hat;
  PolyMat r1 = PolyMat::identity(fld, mh);
  if (n >= mh) {
    ColDimReduction red = reduce_coldim(ds, fs, rl.s_hat);
    d_hat = red.d_hat;
    f_hat = red.f_hat;
    t_hat = red.s_hat;
    r1 = red.partial.matrix;
  }

  PolyMat r2 = PolyMat::identity(fld, mh);
  if (!d_hat.empty()) {
    OverlapLinearization ol = overlapping_lin(d_hat, f_hat, deg_exp);
    std::vector<long long> t = t_hat.values();
    t.insert(t.end(), ol.n_tilde, -deg_exp);
    const long long D = *std::max_element(ol.orders.begin(), ol.orders.end());
    std::vector<long long> pad(ol.orders.size());
    for (std::size_t j = 0; j < pad.size(); ++j) pad[j] = D - ol.orders[j];
    PolyMat lin = shift_columns_up(ol.matrix, pad);
    r2 = lift_back(pm_basis(D, lin, Shift(t)).matrix, mh);
  }

  PolyMat rows = multiply(r2, r1).select_rows(rl.block_last);
  PolyMat r = compress_columns(rl, rows);
  BasisResult out = normalize_to_popov(r, delta);
  if (verify) {
    PolyMat res = residual(out.matrix, f, d.values(), std::vector<long long>(n, 0));
    if (!res.is_zero() || !check_form(out.matrix, s, Form::kPopov) ||
        pivot_profile(out.matrix, s).degree != delta) {
      throw std::logic_error("known_deg_appbasis: output is not the Popov approximant basis");
    }
  }
  return out;
}

}  // namespace appbasis
