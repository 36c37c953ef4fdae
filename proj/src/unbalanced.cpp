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

#include "appbasis/unbalanced.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "appbasis/coldim.hpp"
#include "appbasis/forms.hpp"
#include "appbasis/knowndeg.hpp"
#include "appbasis/linearize.hpp"
#include "appbasis/multiply.hpp"
#include "appbasis/pmbasis.hpp"
#include "appbasis/residual.hpp"

namespace appbasis {
namespace {

BasisResult owp_result(PolyMat p) {
  BasisResult r{std::move(p), {}, Form::kOrderedWeakPopov};
  r.pivots.degree = diagonal_degrees(r.matrix);
  for (std::size_t i = 0; i < r.matrix.rows(); ++i) r.pivots.index.push_back(i);
  return r;
}

std::vector<std::size_t> nonincreasing_order(const OrderTuple& d) {
  std::vector<std::size_t> perm(d.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  return perm;
}

std::vector<long long> finite_row_degrees(const PolyMat& p, const Shift& s) {
  std::vector<long long> t;
  for (auto r : p.row_degrees(s)) t.push_back(r.value());
  return t;
}

// Pivot degrees of the approximants of (d, F) obtained by column reduction
// followed by an order-padded PM-Basis on what remains.
std::vector<long long> pivot_degrees_by_reduction(const OrderTuple& d, const PolyMat& f, const Shift& s) {
  const std::size_t m = f.rows();
  std::vector<std::size_t> perm = nonincreasing_order(d);
  OrderTuple ds = d.subset(perm);
  PolyMat fs = f.select_cols(perm);
  std::vector<long long> delta(m, 0);
  std::vector<long long> dr = ds.values();
  PolyMat fr = fs;
  Shift sr = s;
  if (f.cols() >= m) {
    ColDimReduction red = reduce_coldim(ds, fs, s);
    delta = red.partial.pivots.degree;
    dr = red.d_hat;
    fr = red.f_hat;
    sr = red.s_hat;
  }
  if (!dr.empty()) {
    PaddedInstance pad = pad_orders(OrderTuple(dr), fr);
    delta = add(delta, pm_basis(pad.sigma, pad.f, sr).pivots.degree);
  }
  return delta;
}

}  // namespace

BasisResult shift_around_min(const OrderTuple& d, const PolyMat& f, const Shift& s) {
  const std::size_t m = f.rows(), n = f.cols();
  if (d.size() != n || s.size() != m) throw std::invalid_argument("shift_around_min: shape mismatch");
  const Field& fld = f.field();
  if (n == 0) return owp_result(PolyMat::identity(fld, m));

  if (n >= m) {
    std::vector<std::size_t> perm = nonincreasing_order(d);
    ColDimReduction red = reduce_coldim(d.subset(perm), f.select_cols(perm), s);
    std::vector<long long> delta = red.partial.pivots.degree;
    if (!red.d_hat.empty()) {
      delta = add(delta, shift_around_min(OrderTuple(red.d_hat), red.f_hat, red.s_hat).pivots.degree);
    }
    return known_deg_appbasis(d, f, s, delta);
  }

  const long long smin = s.min();
  std::vector<long long> s0(m);
  long long spread = 0;
  for (std::size_t i = 0; i < m; ++i) {
    s0[i] = s[i] - smin;
    spread += s0[i];
  }
  const long long ms = static_cast<long long>(m);
  long long deg_exp = std::max<long long>(1, (d.sigma() + spread + ms - 1) / ms);

  OverlapLinearization lin = overlapping_lin(d.values(), f, deg_exp);
  auto padded_basis = [&](const PolyMat& g, const std::vector<long long>& ord, long long order,
                          const Shift& t) {
    std::vector<long long> pad(ord.size());
    for (std::size_t j = 0; j < ord.size(); ++j) pad[j] = order - ord[j];
    return pm_basis(order, shift_columns_up(g, pad), t).matrix;
  };
  auto full_shift = [&](std::size_t rows) {
    std::vector<long long> t = s0;
    t.resize(rows, 0);
    return Shift(t);
  };
  PolyMat p = padded_basis(lin.matrix, lin.orders, 2 * deg_exp, full_shift(m + lin.n_tilde));

  // Rows [p q] with rdeg q < rdeg p <= deg_exp are final.
  std::vector<bool> done(m, false);
  auto update_done = [&](const PolyMat& cur) {
    for (std::size_t i = 0; i < m; ++i) {
      if (done[i]) continue;
      Degree dp, dq;
      for (std::size_t j = 0; j < cur.cols(); ++j) {
        (j < m ? dp : dq) = max(j < m ? dp : dq, cur(i, j).degree());
      }
      if (dq < dp && dp <= Degree(deg_exp)) done[i] = true;
    }
  };
  update_done(p);

  while (std::count(done.begin(), done.end(), true) < static_cast<long>(m)) {
    Doubling db = doubling_structs(d.values(), f, deg_exp);
    const std::size_t big = m + db.lin1.n_tilde;
    const std::size_t small = m + db.n_tilde2;
    std::vector<std::size_t> rem;
    for (std::size_t c = 0; c < db.mu.size(); ++c) {
      if (db.nu[c] > db.mu[c]) rem.push_back(c);
    }
    std::vector<std::size_t> jc;
    for (std::size_t i = 0; i < big; ++i) {
      if (i >= m || !done[i]) jc.push_back(i);
    }
    if (!rem.empty()) {
      // Residual of the unfinished rows on the remaining part of the order.
      PolyMat pj = p.select_rows(jc);
      std::vector<std::size_t> top(db.perm.begin(), db.perm.begin() + static_cast<long>(small));
      PolyMat lin2r = db.lin2.matrix.select_cols(rem);
      std::vector<long long> nu_r, mu_r, gap(rem.size());
      for (std::size_t k = 0; k < rem.size(); ++k) {
        nu_r.push_back(db.nu[rem[k]]);
        mu_r.push_back(db.mu[rem[k]]);
        gap[k] = nu_r[k] - mu_r[k];
      }
      PolyMat g = residual(pj.select_cols(top), lin2r, nu_r, mu_r);
      Shift t(finite_row_degrees(pj, full_shift(big)));
      PolyMat p2 = padded_basis(g, gap, 2 * deg_exp, t);
      PolyMat upd = multiply(p2, pj);
      for (std::size_t a = 0; a < jc.size(); ++a) {
        for (std::size_t c = 0; c < big; ++c) p.at(jc[a], c) = upd(a, c);
      }
    }
    std::vector<std::size_t> keep(db.perm.begin(), db.perm.begin() + static_cast<long>(small));
    p = principal_submatrix(p, keep);
    if (rem.empty()) return owp_result(std::move(p));
    deg_exp *= 2;
    update_done(p);
  }
  return owp_result(lift_back(p, m));
}

BasisResult shift_around_max(const OrderTuple& d, const PolyMat& f, const Shift& s,
                             std::vector<std::size_t>* trace) {
  const std::size_t m = f.rows(), n = f.cols();
  if (d.size() != n || s.size() != m) throw std::invalid_argument("shift_around_max: shape mismatch");
  const Field& fld = f.field();
  if (n == 0) return owp_result(PolyMat::identity(fld, m));
  const long long smax = s.max();
  const long long sigma = d.sigma();
  long long spread = 0;
  for (long long x : s) spread += smax - x;

  PolyMat p(fld, m, m);
  std::vector<std::size_t> rows(m);
  std::iota(rows.begin(), rows.end(), 0);

  auto place = [&](std::size_t i, const PolyMat& src, std::size_t src_row) {
    for (std::size_t k = 0; k < rows.size(); ++k) p.at(i, rows[k]) = src(src_row, k);
  };

  while (!rows.empty() && sigma + spread <= static_cast<long long>(rows.size()) * d.max()) {
    if (trace) trace->push_back(rows.size());
    long long spread_i = 0;
    for (auto i : rows) spread_i += smax - s[i];
    const long long deg_exp = 1 + 2 * (spread_i / static_cast<long long>(rows.size()));
    PolyMat fi = f.select_rows(rows);
    Shift si = s.subset(rows);
    RowLinearization rl = col_par_lin(d.values(), fi, si, deg_exp, deg_exp);
    BasisResult ph = shift_around_min(d, rl.f_hat, rl.s_hat);
    ProjectedRows pr = project_rows(ph.matrix, rl);
    std::vector<std::size_t> left;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (s[rows[k]] >= smax - deg_exp || !pr.low_degree[k]) {
        place(rows[k], pr.rows, k);
      } else {
        left.push_back(rows[k]);
      }
    }
    rows = std::move(left);
  }
  if (trace) trace->push_back(rows.size());

  if (!rows.empty()) {
    PolyMat fi = f.select_rows(rows);
    Shift si = s.subset(rows);
    std::vector<long long> delta = pivot_degrees_by_reduction(d, fi, si);
    BasisResult pt = known_deg_appbasis(d, fi, si, delta);
    for (std::size_t k = 0; k < rows.size(); ++k) place(rows[k], pt.matrix, k);
  }
  return owp_result(std::move(p));
}

}  // namespace appbasis
