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

#include "appbasis/pmbasis.hpp"

#include <stdexcept>

#include "appbasis/forms.hpp"
#include "appbasis/mbasis.hpp"
#include "appbasis/multiply.hpp"
#include "appbasis/residual.hpp"

namespace appbasis {
namespace {

Shift shifted_row_degrees(const PolyMat& p, const Shift& s) {
  auto rd = p.row_degrees(s);
  std::vector<long long> t(rd.size());
  for (std::size_t i = 0; i < rd.size(); ++i) t[i] = rd[i].value();
  return Shift(std::move(t));
}

PolyMat pm_rec(long long sigma, const PolyMat& f, const Shift& s) {
  if (sigma == 1) return mbasis1(f.coefficient(0), s).matrix;
  const long long s1 = (sigma + 1) / 2, s2 = sigma - s1;
  const std::size_t n = f.cols();
  PolyMat p1 = pm_rec(s1, truncate_columns(f, std::vector<long long>(n, s1)), s);
  PolyMat g = residual(p1, f, std::vector<long long>(n, sigma), std::vector<long long>(n, s1));
  PolyMat p2 = pm_rec(s2, g, shifted_row_degrees(p1, s));
  return multiply(p2, p1);
}

}  // namespace

BasisResult pm_basis(long long sigma, const PolyMat& f, const Shift& s) {
  if (sigma < 1) throw std::invalid_argument("pm_basis: order must be positive");
  if (s.size() != f.rows()) throw std::invalid_argument("pm_basis: shift length differs from row count");
  PolyMat p = pm_rec(sigma, f, s);
  std::vector<long long> delta = diagonal_degrees(p);
  PivotProfile prof;
  for (std::size_t i = 0; i < p.rows(); ++i) prof.index.push_back(i);
  prof.degree = std::move(delta);
  return {std::move(p), std::move(prof), Form::kOrderedWeakPopov};
}

PaddedInstance pad_orders(const OrderTuple& d, const PolyMat& f) {
  if (d.size() != f.cols()) throw std::invalid_argument("pad_orders: order length differs from column count");
  const long long D = d.max();
  std::vector<long long> e(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) e[j] = D - d[j];
  return {D, shift_columns_up(truncate_columns(f, d.values()), e)};
}

BasisResult popov_pm_basis(const OrderTuple& d, const PolyMat& f, const Shift& s) {
  if (f.cols() == 0) {
    BasisResult r{PolyMat::identity(f.field(), f.rows()), {}, Form::kPopov};
    for (std::size_t i = 0; i < f.rows(); ++i) {
      r.pivots.index.push_back(i);
      r.pivots.degree.push_back(0);
    }
    return r;
  }
  PaddedInstance pad = pad_orders(d, f);
  BasisResult first = pm_basis(pad.sigma, pad.f, s);
  const auto& delta = first.pivots.degree;
  BasisResult second = pm_basis(pad.sigma, pad.f, Shift(delta).negated());
  return normalize_to_popov(second.matrix, delta);
}

}  // namespace appbasis
