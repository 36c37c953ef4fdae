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

#include "appbasis/coldim.hpp"

#include <stdexcept>

#include "appbasis/forms.hpp"
#include "appbasis/mbasis.hpp"
#include "appbasis/multiply.hpp"
#include "appbasis/pmbasis.hpp"
#include "appbasis/residual.hpp"

namespace appbasis {
namespace {

long long next_pow2(long long x) {
  long long p = 1;
  while (p < x) p <<= 1;
  return p;
}

}  // namespace

ColDimReduction reduce_coldim(const OrderTuple& d, const PolyMat& f, const Shift& s) {
  const std::size_t m = f.rows(), n = f.cols();
  if (n < m || m == 0) throw std::invalid_argument("reduce_coldim: needs n >= m >= 1");
  if (!d.is_nonincreasing()) throw std::invalid_argument("reduce_coldim: orders must be nonincreasing");
  if (d.size() != n || s.size() != m) throw std::invalid_argument("reduce_coldim: shape mismatch");
  const Field& fld = f.field();

  // Pad the orders: powers of two from column m on, and the first m - 1
  // columns lifted by the same amount as column m.
  const long long dm = d[m - 1];
  const long long dtm = next_pow2(dm);
  std::vector<long long> dt(n), e(n);
  for (std::size_t j = 0; j < n; ++j) {
    dt[j] = j + 1 >= m ? next_pow2(d[j]) : d[j] + dtm - dm;
    e[j] = dt[j] - d[j];
  }
  int ell = 0;
  while ((1LL << ell) < dtm) ++ell;

  // Constant coefficient of F X^{dt - d}.
  ConstMat c0(fld, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) c0.at(i, j) = e[j] == 0 ? f(i, j).coeff(0) : 0;
  }
  PolyMat p = mbasis1(c0, s).matrix;
  for (int i = 1; i <= ell; ++i) {
    const long long h = 1LL << (i - 1);
    std::size_t mu = 0;
    while (mu < n && dt[mu] >= 2 * h) ++mu;
    std::vector<std::size_t> cols(mu);
    for (std::size_t j = 0; j < mu; ++j) cols[j] = j;
    std::vector<long long> ej(e.begin(), e.begin() + static_cast<long>(mu));
    PolyMat res = residual_scaled(p, f.select_cols(cols), ej, std::vector<long long>(mu, 2 * h),
                                  std::vector<long long>(mu, h));
    std::vector<long long> t;
    for (auto r : p.row_degrees(s)) t.push_back(r.value());
    PolyMat pi = pm_basis(h, res, Shift(t)).matrix;
    p = multiply(pi, p);
  }

  std::size_t nu = 0;
  while (nu < n && dt[nu] > (1LL << ell)) ++nu;

  ColDimReduction out{{}, PolyMat(fld, m, nu), {}, {}};
  std::vector<std::size_t> cols(nu);
  std::vector<long long> dd(nu), off(nu, dm);
  for (std::size_t j = 0; j < nu; ++j) {
    cols[j] = j;
    dd[j] = d[j];
    out.d_hat.push_back(d[j] - dm);
  }
  if (nu > 0) out.f_hat = residual(p, f.select_cols(cols), dd, off);
  std::vector<long long> t;
  for (auto r : p.row_degrees(s)) t.push_back(r.value());
  out.s_hat = Shift(t);
  std::vector<long long> delta = diagonal_degrees(p);
  out.partial.pivots.degree = delta;
  for (std::size_t i = 0; i < m; ++i) out.partial.pivots.index.push_back(i);
  out.partial.matrix = std::move(p);
  out.partial.form = Form::kOrderedWeakPopov;
  return out;
}

}  // namespace appbasis
