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

#pragma once

#include <cstddef>
#include <vector>

#include "appbasis/const_matrix.hpp"
#include "appbasis/polymat.hpp"
#include "appbasis/types.hpp"

namespace appbasis {

// Partial linearization of the rows of an instance, driven by a shift.
//
// With t = s - max(s) + sdiff, row i is expanded into alpha_i rows
// X^{k deg_exp} F_i (k < alpha_i), where alpha_i = ceil(-t_i / deg_exp) when
// t_i < 0 and 1 otherwise. The approximants of (d, F) are those of
// (d, E F mod X^d) multiplied by E.
struct RowLinearization {
  long long deg_exp = 1;
  std::vector<long long> alpha, beta;
  Shift s_hat;
  // Row r of E is X^{row_exp[r]} e_{row_source[r]}.
  std::vector<std::size_t> row_source;
  std::vector<long long> row_exp;
  // Index of the last expanded row of each original row.
  std::vector<std::size_t> block_last;
  PolyMat f_hat;  // E F mod X^d

  std::size_t m_hat() const { return row_source.size(); }
  // E as an explicit m_hat x m polynomial matrix.
  PolyMat expansion(const Field& f, std::size_t m) const;
};

RowLinearization col_par_lin(const std::vector<long long>& d, const PolyMat& f, const Shift& s,
                             long long deg_exp, long long sdiff);

// P_hat E, computed by folding the expanded columns.
PolyMat compress_columns(const RowLinearization& lin, const PolyMat& p_hat);

// Rows block_last of P_hat E. low_degree[i] is set when the s_hat degree of
// the selected row of P_hat is <= 0: that row then has pivot degree
// delta_i <= -t_i and is not certified by the linearization.
struct ProjectedRows {
  PolyMat rows;
  std::vector<bool> low_degree;
};
ProjectedRows project_rows(const PolyMat& p_hat, const RowLinearization& lin);

// Overlapping linearization of the columns of (d, F) with parameter deg_exp.
//
// Column i with alpha_i = (d_i - 1) / deg_exp > 1 is replaced by the alpha_i
// columns f^(k) + f^(k+1) X^deg_exp (deg_exp-adic chunks of F_i), with
// orders 2 deg_exp except the last one, deg_exp + beta_i. The matrix gets
// alpha_i - 1 extra rows selecting the chunks 1..alpha_i-1. Other columns
// are kept with their order.
struct OverlapLinearization {
  long long deg_exp = 1;
  std::size_t m = 0, n_tilde = 0;
  std::vector<long long> alpha, beta;
  std::vector<std::size_t> col_start;  // first column of each block
  std::vector<std::size_t> col_count;  // max(alpha_i, 1)
  std::vector<std::size_t> sel_start;  // first selector row of each block, counted after m
  PolyMat matrix;                      // (m + n_tilde) x (n + n_tilde)
  std::vector<long long> orders;
};

OverlapLinearization overlapping_lin(const std::vector<long long>& d, const PolyMat& f,
                                     long long deg_exp);

// For approximants p (rows of a k x m matrix) of the original instance, the
// unique completion q with [p q] an approximant of the linearized one and
// rdeg q < rdeg p: q = -(p F_lin) E_sel^T mod X^{orders of the selected columns}.
PolyMat overlap_completion(const PolyMat& p, const OverlapLinearization& lin);

// Leading m x m block.
PolyMat lift_back(const PolyMat& p_hat, std::size_t m);

// Structures relating the overlapping linearizations at deg_exp and 2 deg_exp.
struct Doubling {
  OverlapLinearization lin1, lin2;
  // lin2.matrix with its selector rows interleaved into the selector layout
  // of lin1: (m + n_tilde1) x (n + n_tilde2).
  PolyMat f_check2;
  // perm[k] is the row of the lin1 layout receiving row k of the compressed
  // layout [top m | even selector rows | odd selector rows].
  std::vector<std::size_t> perm;
  std::size_t n_tilde2 = 0;
  // Columns of lin1 kept by E_bar (one per column of lin2) and the others.
  std::vector<std::size_t> e_bar_cols, e_bar_complement;
  std::vector<long long> mu, nu;

  ConstMat e_bar(const Field& f) const;
  ConstMat e_bar_c(const Field& f) const;
};

Doubling doubling_structs(const std::vector<long long>& d, const PolyMat& f, long long deg_exp);

}  // namespace appbasis
