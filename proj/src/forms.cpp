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

#include "appbasis/forms.hpp"

#include <stdexcept>

namespace appbasis {

ConstMat leading_matrix(const PolyMat& p, const Shift& s) {
  auto rdeg = p.row_degrees(s);
  ConstMat lm(p.field(), p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (!rdeg[i].is_finite()) continue;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      long long k = rdeg[i].value() - s[j];
      if (k >= 0) lm.at(i, j) = p(i, j).coeff(static_cast<std::size_t>(k));
    }
  }
  return lm;
}

bool check_form(const PolyMat& p, const Shift& s, Form form) {
  if (p.rows() != p.cols()) return false;
  ConstMat lm = leading_matrix(p, s);
  if (rank(lm) != p.rows()) return false;
  if (form == Form::kReduced) return true;
  if (!is_lower_triangular(lm)) return false;
  if (form == Form::kOrderedWeakPopov) return true;
  for (std::size_t i = 0; i < lm.rows(); ++i) {
    if (lm(i, i) != 1) return false;
  }
  // Column leading matrix must be the identity: monic diagonal strictly
  // dominating its column.
  ConstMat clm = leading_matrix(p.transpose(), Shift::uniform(p.rows()));
  return clm == ConstMat::identity(p.field(), p.rows());
}

PivotProfile pivot_profile(const PolyMat& p, const Shift& s) {
  auto rdeg = p.row_degrees(s);
  PivotProfile prof;
  std::vector<bool> seen(p.cols(), false);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (!rdeg[i].is_finite()) throw std::domain_error("pivot of a zero row");
    std::size_t piv = p.cols();
    for (std::size_t j = p.cols(); j-- > 0;) {
      if (p(i, j).degree() + s[j] == rdeg[i]) {
        piv = j;
        break;
      }
    }
    if (seen[piv]) throw std::domain_error("repeated pivot index: matrix is not in weak Popov form");
    seen[piv] = true;
    prof.index.push_back(piv);
    prof.degree.push_back(p(i, piv).degree().value());
  }
  return prof;
}

std::vector<long long> diagonal_degrees(const PolyMat& p) {
  std::vector<long long> d(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) d[i] = p(i, i).degree().value();
  return d;
}

BasisResult normalize_to_popov(const PolyMat& r, const std::vector<long long>& delta) {
  if (r.rows() != r.cols() || delta.size() != r.rows()) {
    throw std::invalid_argument("normalize_to_popov: shape mismatch");
  }
  Shift t = Shift(delta).negated();
  ConstMat lm = leading_matrix(r, t);
  PolyMat p = multiply(inverse(lm), r);
  PivotProfile prof;
  for (std::size_t i = 0; i < delta.size(); ++i) prof.index.push_back(i);
  prof.degree = delta;
  return {std::move(p), std::move(prof), Form::kPopov};
}

PolyMat membership_reduce(const PolyMat& v, const PolyMat& p, const Shift& s) {
  if (v.rows() != 1 || v.cols() != p.cols()) throw std::invalid_argument("membership_reduce: shape");
  const Field& f = p.field();
  PivotProfile prof = pivot_profile(p, s);
  std::vector<std::size_t> row_of(p.cols(), p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) row_of[prof.index[i]] = i;
  PolyMat r = v;
  for (;;) {
    Degree rd = r.row_degrees(s)[0];
    if (!rd.is_finite()) return r;
    std::size_t j = r.cols();
    while (j-- > 0) {
      if (r(0, j).degree() + s[j] == rd) break;
    }
    std::size_t i = row_of[j];
    long long e = r(0, j).degree().value();
    if (i == p.rows() || e < prof.degree[i]) return r;
    Elem c = f.neg(f.mul(r(0, j).leading_coeff(), f.inv(p(i, j).leading_coeff())));
    std::size_t sh = static_cast<std::size_t>(e - prof.degree[i]);
    for (std::size_t k = 0; k < r.cols(); ++k) {
      std::vector<Elem> a(r(0, k).coeffs().begin(), r(0, k).coeffs().end());
      axpy_shifted(f, a, c, p(i, k), sh);
      r.at(0, k) = Poly(std::move(a));
    }
  }
}

PolyMat principal_submatrix(const PolyMat& p, const std::vector<std::size_t>& idx) {
  return p.select_rows(idx).select_cols(idx);
}

PolyMat embed_principal(const PolyMat& block, const std::vector<std::size_t>& idx,
                        const PolyMat& rest) {
  PolyMat r = rest;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) r.at(idx[a], idx[b]) = block(a, b);
  }
  return r;
}

}  // namespace appbasis
