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

#include "appbasis/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "appbasis/coldim.hpp"
#include "appbasis/forms.hpp"
#include "appbasis/knowndeg.hpp"
#include "appbasis/pmbasis.hpp"
#include "appbasis/residual.hpp"

namespace appbasis {
namespace {

BasisResult identity_basis(const Field& f, std::size_t m) {
  return normalize_to_popov(PolyMat::identity(f, m), std::vector<long long>(m, 0));
}

BasisResult solve(const OrderTuple& d, const PolyMat& f, const Shift& s, bool top) {
  const std::size_t m = f.rows(), n = f.cols();
  if (n == 0) return identity_basis(f.field(), m);
  const long long sigma = d.sigma();
  if (sigma <= static_cast<long long>(m)) return popov_pm_basis(d, f, s);

  if (n >= m) {
    if (!top) throw std::logic_error("popov_appbasis: column reduction needed below the top level");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
    ColDimReduction red = reduce_coldim(d.subset(perm), f.select_cols(perm), s);
    std::vector<long long> delta = red.partial.pivots.degree;
    if (!red.d_hat.empty()) {
      BasisResult p2 = solve(OrderTuple(red.d_hat), red.f_hat, red.s_hat, false);
      delta = add(delta, p2.pivots.degree);
    }
    return known_deg_appbasis(d, f, s, delta);
  }

  // Split the total order in halves, cutting column i0 at partial order dd.
  const long long half = sigma / 2;
  std::size_t i0 = 0;
  long long acc = 0;
  while (acc + d[i0] < half) acc += d[i0++];
  const long long dd = half - acc;

  std::vector<long long> d1, d2;
  std::vector<std::size_t> c1, c2;
  for (std::size_t j = 0; j < i0; ++j) {
    d1.push_back(d[j]);
    c1.push_back(j);
  }
  PolyMat f1(f.field(), m, i0 + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i0; ++j) f1.at(i, j) = f(i, j);
    f1.at(i, i0) = f(i, i0).truncated(static_cast<std::size_t>(dd));
  }
  d1.push_back(dd);

  // Second half: the high part of column i0 (if any order remains) and the
  // later columns, all as residuals of the first basis.
  std::vector<long long> rd, ro;
  std::vector<std::size_t> rc;
  if (d[i0] > dd) {
    rc.push_back(i0);
    rd.push_back(d[i0]);
    ro.push_back(dd);
  }
  for (std::size_t j = i0 + 1; j < n; ++j) {
    rc.push_back(j);
    rd.push_back(d[j]);
    ro.push_back(0);
  }

  BasisResult p1 = solve(OrderTuple(d1), f1, s, false);
  std::vector<long long> delta = p1.pivots.degree;
  if (!rc.empty()) {
    PolyMat g = residual(p1.matrix, f.select_cols(rc), rd, ro, ResidualStrategy::kSplitBasis);
    for (std::size_t k = 0; k < rd.size(); ++k) rd[k] -= ro[k];
    BasisResult p2 = solve(OrderTuple(rd), g, s.plus(delta), false);
    delta = add(delta, p2.pivots.degree);
  }
  return known_deg_appbasis(d, f, s, delta);
}

}  // namespace

BasisResult popov_appbasis(const std::vector<long long>& d, const PolyMat& f, const Shift& s) {
  if (d.size() != f.cols() || s.size() != f.rows()) throw std::invalid_argument("popov_appbasis: shape mismatch");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] < 0) throw std::invalid_argument("popov_appbasis: negative order");
    if (d[j] > 0) keep.push_back(j);
  }
  std::vector<long long> dk;
  for (auto j : keep) dk.push_back(d[j]);
  return solve(OrderTuple(dk), f.select_cols(keep), s, true);
}

}  // namespace appbasis
