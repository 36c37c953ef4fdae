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

#include "appbasis/residual.hpp"

#include <algorithm>
#include <stdexcept>

namespace appbasis {
namespace {

void check_args(const PolyMat& p, const PolyMat& f, const std::vector<long long>& d,
                const std::vector<long long>& offsets) {
  if (p.cols() != f.rows()) throw std::invalid_argument("residual: P and F do not conform");
  if (d.size() != f.cols() || offsets.size() != f.cols()) {
    throw std::invalid_argument("residual: order or offset length differs from column count");
  }
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (offsets[j] < 0 || offsets[j] > d[j]) throw std::invalid_argument("residual: bad offset");
  }
}

PolyMat extract(const PolyMat& prod, const std::vector<long long>& d,
                const std::vector<long long>& offsets, const std::vector<long long>& e) {
  PolyMat r(prod.field(), prod.rows(), prod.cols());
  for (std::size_t i = 0; i < prod.rows(); ++i) {
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      r.at(i, j) = prod(i, j).window(offsets[j] - e[j], static_cast<std::size_t>(d[j] - offsets[j]));
    }
  }
  return r;
}

PolyMat naive(const PolyMat& p, const PolyMat& f, const std::vector<long long>& d,
              const std::vector<long long>& offsets) {
  PolyMat prod = multiply(p, truncate_columns(f, d));
  return extract(prod, d, offsets, std::vector<long long>(d.size(), 0));
}

PolyMat split_input(const PolyMat& p, const PolyMat& f, const std::vector<long long>& d,
                    const std::vector<long long>& offsets) {
  const Field& fld = p.field();
  const std::size_t m = p.rows();
  Degree dp = p.degree();
  if (!dp.is_finite()) return PolyMat(fld, m, f.cols());
  const long long w = dp.value() + 1;
  // Slice (j, k) holds coefficients [k w, (k+1) w) of F_j and contributes to
  // degrees [k w, k w + 2w - 1) of the product.
  struct Slice {
    std::size_t col;
    long long k;
  };
  std::vector<Slice> slices;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    for (long long k = 0; k * w < d[j]; ++k) {
      if (k * w + 2 * w - 1 <= offsets[j]) continue;
      slices.push_back({j, k});
    }
  }
  PolyMat fs(fld, f.rows(), slices.size());
  for (std::size_t s = 0; s < slices.size(); ++s) {
    long long hi = std::min((slices[s].k + 1) * w, d[slices[s].col]);
    for (std::size_t i = 0; i < f.rows(); ++i) {
      fs.at(i, s) = f(i, slices[s].col).window(slices[s].k * w,
                                                static_cast<std::size_t>(hi - slices[s].k * w));
    }
  }
  PolyMat prod = multiply(p, fs);
  PolyMat r(fld, m, f.cols());
  std::vector<std::vector<Elem>> acc(m * f.cols());
  for (std::size_t s = 0; s < slices.size(); ++s) {
    std::size_t j = slices[s].col;
    long long len = d[j] - offsets[j];
    long long base = slices[s].k * w - offsets[j];
    for (std::size_t i = 0; i < m; ++i) {
      const Poly& q = prod(i, s);
      auto& a = acc[i * f.cols() + j];
      for (std::size_t t = 0; t < q.length(); ++t) {
        long long pos = base + static_cast<long long>(t);
        if (pos < 0) continue;
        if (pos >= len) break;
        if (a.size() <= static_cast<std::size_t>(pos)) a.resize(static_cast<std::size_t>(len), 0);
        a[static_cast<std::size_t>(pos)] = fld.add(a[static_cast<std::size_t>(pos)], q.coeff(t));
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) r.at(i, j) = Poly(std::move(acc[i * f.cols() + j]));
  }
  return r;
}

PolyMat split_basis(const PolyMat& p, const PolyMat& f, const std::vector<long long>& d,
                    const std::vector<long long>& offsets) {
  const Field& fld = p.field();
  const std::size_t m = p.cols();
  long long sigma = 0;
  for (long long x : d) sigma += x;
  Degree dp = p.degree();
  if (!dp.is_finite() || m == 0) return PolyMat(fld, p.rows(), f.cols());
  const long long w = std::max<long long>(1, (sigma + static_cast<long long>(m) - 1) /
                                                 static_cast<long long>(m));
  // P = P_hat E, column (i, k) of P_hat holds coefficients [k w, (k+1) w) of
  // column i of P, and row (i, k) of E is X^{k w} e_i.
  std::vector<std::size_t> col;
  std::vector<long long> expo;
  for (std::size_t i = 0; i < m; ++i) {
    Degree ci;
    for (std::size_t r = 0; r < p.rows(); ++r) ci = max(ci, p(r, i).degree());
    long long nk = ci.is_finite() ? ci.value() / w + 1 : 1;
    for (long long k = 0; k < nk; ++k) {
      col.push_back(i);
      expo.push_back(k * w);
    }
  }
  PolyMat ph(fld, p.rows(), col.size());
  PolyMat ef(fld, col.size(), f.cols());
  for (std::size_t c = 0; c < col.size(); ++c) {
    for (std::size_t r = 0; r < p.rows(); ++r) {
      ph.at(r, c) = p(r, col[c]).window(expo[c], static_cast<std::size_t>(w));
    }
    for (std::size_t j = 0; j < f.cols(); ++j) {
      long long keep = d[j] - expo[c];
      if (keep > 0) ef.at(c, j) = f(col[c], j).truncated(static_cast<std::size_t>(keep)).shifted_up(
          static_cast<std::size_t>(expo[c]));
    }
  }
  return split_input(ph, ef, d, offsets);
}

}  // namespace

PolyMat residual(const PolyMat& p, const PolyMat& f, const std::vector<long long>& d,
                 const std::vector<long long>& offsets, ResidualStrategy strategy) {
  check_args(p, f, d, offsets);
  switch (strategy) {
    case ResidualStrategy::kNaive:
      return naive(p, f, d, offsets);
    case ResidualStrategy::kSplitBasis:
      return split_basis(p, f, d, offsets);
    default:
      return split_input(p, f, d, offsets);
  }
}

PolyMat residual_scaled(const PolyMat& p, const PolyMat& f, const std::vector<long long>& e,
                        const std::vector<long long>& d, const std::vector<long long>& offsets) {
  check_args(p, f, d, offsets);
  // Coefficients [o, d) of P X^e F_j are coefficients [o - e, d - e) of P F_j.
  std::vector<long long> d2(d.size()), o2(d.size()), lead(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    d2[j] = std::max(0LL, d[j] - e[j]);
    o2[j] = std::clamp(offsets[j] - e[j], 0LL, d2[j]);
    lead[j] = std::max(0LL, e[j] - offsets[j]);
  }
  PolyMat r = residual(p, f, d2, o2);
  PolyMat out(p.field(), r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      out.at(i, j) = r(i, j).shifted_up(static_cast<std::size_t>(lead[j]))
                         .truncated(static_cast<std::size_t>(d[j] - offsets[j]));
    }
  }
  return out;
}

}  // namespace appbasis
