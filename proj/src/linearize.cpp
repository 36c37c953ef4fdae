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

#include "appbasis/linearize.hpp"

#include <stdexcept>

#include "appbasis/multiply.hpp"

namespace appbasis {

PolyMat RowLinearization::expansion(const Field& f, std::size_t m) const {
  PolyMat e(f, m_hat(), m);
  for (std::size_t r = 0; r < m_hat(); ++r) {
    e.at(r, row_source[r]) = Poly::monomial(1, static_cast<std::size_t>(row_exp[r]));
  }
  return e;
}

RowLinearization col_par_lin(const std::vector<long long>& d, const PolyMat& f, const Shift& s,
                             long long deg_exp, long long sdiff) {
  if (deg_exp < 1) throw std::invalid_argument("col_par_lin: deg_exp must be positive");
  if (s.size() != f.rows() || d.size() != f.cols()) throw std::invalid_argument("col_par_lin: shape");
  const std::size_t m = f.rows();
  RowLinearization lin;
  lin.deg_exp = deg_exp;
  const long long smax = m ? s.max() : 0;
  std::vector<long long> sh;
  for (std::size_t i = 0; i < m; ++i) {
    long long t = s[i] - smax + sdiff;
    long long a = 1, b = -t;
    if (t < 0) {
      a = (-t + deg_exp - 1) / deg_exp;
      b = -t - (a - 1) * deg_exp;
    }
    lin.alpha.push_back(a);
    lin.beta.push_back(b);
    for (long long k = 0; k < a; ++k) {
      lin.row_source.push_back(i);
      lin.row_exp.push_back(k * deg_exp);
      sh.push_back(k + 1 < a ? -deg_exp : -b);
    }
    lin.block_last.push_back(lin.row_source.size() - 1);
  }
  lin.s_hat = Shift(std::move(sh));
  lin.f_hat = PolyMat(f.field(), lin.m_hat(), f.cols());
  for (std::size_t r = 0; r < lin.m_hat(); ++r) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      long long keep = d[j] - lin.row_exp[r];
      if (keep <= 0) continue;
      lin.f_hat.at(r, j) = f(lin.row_source[r], j)
                               .truncated(static_cast<std::size_t>(keep))
                               .shifted_up(static_cast<std::size_t>(lin.row_exp[r]));
    }
  }
  return lin;
}

PolyMat compress_columns(const RowLinearization& lin, const PolyMat& p_hat) {
  if (p_hat.cols() != lin.m_hat()) throw std::invalid_argument("compress_columns: shape");
  const Field& f = p_hat.field();
  const std::size_t m = lin.alpha.size();
  PolyMat out(f, p_hat.rows(), m);
  for (std::size_t i = 0; i < p_hat.rows(); ++i) {
    std::vector<std::vector<Elem>> acc(m);
    for (std::size_t r = 0; r < lin.m_hat(); ++r) {
      axpy_shifted(f, acc[lin.row_source[r]], 1, p_hat(i, r), static_cast<std::size_t>(lin.row_exp[r]));
    }
    for (std::size_t j = 0; j < m; ++j) out.at(i, j) = Poly(std::move(acc[j]));
  }
  return out;
}

ProjectedRows project_rows(const PolyMat& p_hat, const RowLinearization& lin) {
  PolyMat sel = p_hat.select_rows(lin.block_last);
  auto rd = sel.row_degrees(lin.s_hat);
  ProjectedRows out{compress_columns(lin, sel), {}};
  for (auto r : rd) out.low_degree.push_back(r <= Degree(0));
  return out;
}

OverlapLinearization overlapping_lin(const std::vector<long long>& d, const PolyMat& f,
                                     long long deg_exp) {
  if (deg_exp < 1) throw std::invalid_argument("overlapping_lin: deg_exp must be positive");
  if (d.size() != f.cols()) throw std::invalid_argument("overlapping_lin: shape");
  const std::size_t m = f.rows(), n = f.cols();
  OverlapLinearization lin;
  lin.deg_exp = deg_exp;
  lin.m = m;
  std::size_t ncols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long long a = (d[i] - 1) / deg_exp;
    lin.alpha.push_back(a);
    lin.beta.push_back(d[i] - a * deg_exp);
    lin.col_start.push_back(ncols);
    lin.col_count.push_back(a > 1 ? static_cast<std::size_t>(a) : 1);
    lin.sel_start.push_back(lin.n_tilde);
    ncols += lin.col_count.back();
    if (a > 1) lin.n_tilde += static_cast<std::size_t>(a - 1);
  }
  lin.matrix = PolyMat(f.field(), m + lin.n_tilde, ncols);
  for (std::size_t i = 0; i < n; ++i) {
    const long long a = lin.alpha[i];
    if (a <= 1) {
      for (std::size_t r = 0; r < m; ++r) {
        lin.matrix.at(r, lin.col_start[i]) = f(r, i).truncated(static_cast<std::size_t>(d[i]));
      }
      lin.orders.push_back(d[i]);
      continue;
    }
    for (long long k = 0; k < a; ++k) {
      std::size_t c = lin.col_start[i] + static_cast<std::size_t>(k);
      long long ord = k + 1 < a ? 2 * deg_exp : deg_exp + lin.beta[i];
      for (std::size_t r = 0; r < m; ++r) {
        lin.matrix.at(r, c) = f(r, i).window(k * deg_exp, static_cast<std::size_t>(ord));
      }
      lin.orders.push_back(ord);
      if (k >= 1) {
        lin.matrix.at(m + lin.sel_start[i] + static_cast<std::size_t>(k - 1), c) = Poly::constant(1);
      }
    }
  }
  return lin;
}

PolyMat overlap_completion(const PolyMat& p, const OverlapLinearization& lin) {
  if (p.cols() != lin.m) throw std::invalid_argument("overlap_completion: shape");
  const Field& f = p.field();
  PolyMat top = lin.matrix.block(0, 0, lin.m, lin.matrix.cols());
  PolyMat prod = multiply(p, top);
  PolyMat q(f, p.rows(), lin.n_tilde);
  for (std::size_t i = 0; i < lin.alpha.size(); ++i) {
    for (long long k = 1; k < lin.alpha[i] && lin.alpha[i] > 1; ++k) {
      std::size_t c = lin.col_start[i] + static_cast<std::size_t>(k);
      std::size_t r = lin.sel_start[i] + static_cast<std::size_t>(k - 1);
      for (std::size_t row = 0; row < p.rows(); ++row) {
        q.at(row, r) = neg(f, prod(row, c).truncated(static_cast<std::size_t>(lin.orders[c])));
      }
    }
  }
  return q;
}

PolyMat lift_back(const PolyMat& p_hat, std::size_t m) { return p_hat.block(0, 0, m, m); }

ConstMat Doubling::e_bar(const Field& f) const {
  ConstMat e(f, lin1.matrix.cols(), e_bar_cols.size());
  for (std::size_t k = 0; k < e_bar_cols.size(); ++k) e.at(e_bar_cols[k], k) = 1;
  return e;
}

ConstMat Doubling::e_bar_c(const Field& f) const {
  ConstMat e(f, lin1.matrix.cols(), e_bar_complement.size());
  for (std::size_t k = 0; k < e_bar_complement.size(); ++k) e.at(e_bar_complement[k], k) = 1;
  return e;
}

Doubling doubling_structs(const std::vector<long long>& d, const PolyMat& f, long long deg_exp) {
  Doubling db;
  db.lin1 = overlapping_lin(d, f, deg_exp);
  db.lin2 = overlapping_lin(d, f, 2 * deg_exp);
  const std::size_t m = f.rows(), n = f.cols();
  db.n_tilde2 = db.lin2.n_tilde;

  // Selector row r (1-based within a block of lin1) is "even" when r = 2k
  // with k <= ceil((alpha - 1) / 2) - 1; it then carries selector row k of lin2.
  std::vector<std::size_t> even, odd;
  db.f_check2 = PolyMat(f.field(), m + db.lin1.n_tilde, db.lin2.matrix.cols());
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < db.lin2.matrix.cols(); ++c) db.f_check2.at(r, c) = db.lin2.matrix(r, c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const long long a = db.lin1.alpha[i];
    const long long rsz = a - 1;
    const long long keven = rsz > 0 ? (rsz + 1) / 2 - 1 : 0;
    for (long long r = 1; r <= rsz; ++r) {
      std::size_t row = m + db.lin1.sel_start[i] + static_cast<std::size_t>(r - 1);
      if (r % 2 == 0 && r / 2 <= keven) {
        even.push_back(row);
        std::size_t row2 = m + db.lin2.sel_start[i] + static_cast<std::size_t>(r / 2 - 1);
        for (std::size_t c = 0; c < db.lin2.matrix.cols(); ++c) {
          db.f_check2.at(row, c) = db.lin2.matrix(row2, c);
        }
      } else {
        odd.push_back(row);
      }
    }
    // E_bar keeps chunk 0 and chunks 2k, k = 1..floor(alpha/2) - 1.
    const std::size_t kept = a > 1 ? static_cast<std::size_t>(a / 2) : 1;
    for (std::size_t k = 0; k < db.lin1.col_count[i]; ++k) {
      std::size_t c = db.lin1.col_start[i] + k;
      if (k % 2 == 0 && k / 2 < kept) {
        db.e_bar_cols.push_back(c);
      } else {
        db.e_bar_complement.push_back(c);
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) db.perm.push_back(k);
  db.perm.insert(db.perm.end(), even.begin(), even.end());
  db.perm.insert(db.perm.end(), odd.begin(), odd.end());
  for (auto c : db.e_bar_cols) db.mu.push_back(db.lin1.orders[c]);
  db.nu = db.lin2.orders;
  if (db.mu.size() != db.nu.size() || even.size() != db.n_tilde2) {
    throw std::logic_error("doubling_structs: inconsistent block sizes");
  }
  return db;
}

}  // namespace appbasis
