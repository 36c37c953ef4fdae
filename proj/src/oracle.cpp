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

#include "appbasis/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "appbasis/forms.hpp"
#include "appbasis/mbasis.hpp"
#include "appbasis/multiply.hpp"
#include "appbasis/solver.hpp"

namespace appbasis {
namespace {

// A P in place, for A = a0 + X a1 with sparse constant coefficients.
void apply_degree_one(const ConstMat& a0, const ConstMat& a1, std::vector<std::vector<std::vector<Elem>>>& rows,
                      const Field& f) {
  const std::size_t m = a0.rows();
  std::vector<std::vector<std::vector<Elem>>> out(m, std::vector<std::vector<Elem>>(rows[0].size()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      for (int e = 0; e < 2; ++e) {
        Elem c = e == 0 ? a0(i, k) : a1(i, k);
        if (c == 0) continue;
        for (std::size_t j = 0; j < rows[k].size(); ++j) {
          const auto& src = rows[k][j];
          auto& dst = out[i][j];
          if (dst.size() < src.size() + static_cast<std::size_t>(e)) dst.resize(src.size() + e, 0);
          for (std::size_t t = 0; t < src.size(); ++t) dst[t + e] = f.add(dst[t + e], f.mul(c, src[t]));
        }
      }
    }
  }
  rows = std::move(out);
}

}  // namespace

BasisResult iterative_appbasis(const OrderTuple& d, const PolyMat& f, const Shift& s) {
  const std::size_t m = f.rows(), n = f.cols();
  if (d.size() != n || s.size() != m) throw std::invalid_argument("iterative_appbasis: shape mismatch");
  const Field& fld = f.field();

  // Basis and residual P F mod X^d, both stored as raw coefficient rows.
  std::vector<std::vector<std::vector<Elem>>> basis(m, std::vector<std::vector<Elem>>(m));
  std::vector<std::vector<std::vector<Elem>>> res(m, std::vector<std::vector<Elem>>(n));
  for (std::size_t i = 0; i < m; ++i) {
    basis[i][i] = {1};
    for (std::size_t j = 0; j < n; ++j) {
      Poly c = f(i, j).truncated(static_cast<std::size_t>(d[j]));
      res[i][j].assign(c.coeffs().begin(), c.coeffs().end());
    }
  }
  std::vector<long long> rdeg = s.values();  // rdeg_s(I) = s

  for (long long k = 0; k < d.max(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[j] <= k) continue;
      ConstMat c(fld, m, 1);
      for (std::size_t i = 0; i < m; ++i) {
        c.at(i, 0) = static_cast<std::size_t>(k) < res[i][j].size() ? res[i][j][static_cast<std::size_t>(k)] : 0;
      }
      BasisResult step = mbasis1(c, Shift(rdeg));
      ConstMat a0 = step.matrix.coefficient(0), a1 = step.matrix.coefficient(1);
      apply_degree_one(a0, a1, basis, fld);
      apply_degree_one(a0, a1, res, fld);
      for (std::size_t i = 0; i < m; ++i) {
        rdeg[i] += step.pivots.degree[i];
        for (std::size_t jj = 0; jj < n; ++jj) {
          if (res[i][jj].size() > static_cast<std::size_t>(d[jj])) res[i][jj].resize(static_cast<std::size_t>(d[jj]));
        }
      }
    }
  }

  PolyMat p(fld, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) p.at(i, j) = Poly(std::move(basis[i][j]));
  }
  BasisResult out{std::move(p), {}, Form::kOrderedWeakPopov};
  out.pivots.degree = diagonal_degrees(out.matrix);
  for (std::size_t i = 0; i < m; ++i) out.pivots.index.push_back(i);
  return out;
}

std::string VerifyReport::line() const {
  auto w = [](bool b) { return b ? "ok" : "FAIL"; };
  return std::string("approximant=") + w(approximant) + " form=" + w(form) + " degrees=" + w(degrees) +
         " generation=" + w(generation);
}

VerifyReport verify_basis(const PolyMat& p, const OrderTuple& d, const PolyMat& f, const Shift& s,
                          Form form) {
  VerifyReport r;
  const std::size_t m = f.rows();
  if (p.rows() != m || p.cols() != m) return r;

  PolyMat prod = truncate_columns(multiply(p, truncate_columns(f, d.values()), MatMulAlgo::kSchoolbook),
                                  d.values());
  r.approximant = prod.is_zero();
  r.form = check_form(p, s, form);

  BasisResult ref = iterative_appbasis(d, f, s);
  PivotProfile prof;
  bool weak_popov = true;
  try {
    prof = pivot_profile(p, s);
  } catch (const std::domain_error&) {
    weak_popov = false;
  }
  if (weak_popov) {
    std::vector<long long> by_index(m, -1);
    for (std::size_t i = 0; i < m; ++i) by_index[prof.index[i]] = prof.degree[i];
    long long top = by_index.empty() ? 0 : *std::max_element(by_index.begin(), by_index.end());
    r.degrees = by_index == ref.pivots.degree && sum(by_index) <= d.sigma() && top <= d.max();
    bool gen = sum(prof.degree) == sum(ref.pivots.degree);
    for (std::size_t i = 0; gen && i < m; ++i) {
      gen = membership_reduce(ref.matrix.select_rows({i}), p, s).is_zero();
    }
    r.generation = gen;
  }
  return r;
}

PolyMat matmul_embed(const PolyMat& a, const PolyMat& b, long long deg) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n) throw std::invalid_argument("matmul_embed: shape");
  const Field& fld = a.field();
  const std::size_t e = static_cast<std::size_t>(2 * deg + 1);
  const Poly xe = Poly::monomial(1, e);
  PolyMat f(fld, 4 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    f.at(i, i) = xe;
    f.at(n + i, n + i) = xe;
    f.at(2 * n + i, i) = Poly::constant(fld.neg(1));
    f.at(3 * n + i, n + i) = Poly::constant(fld.neg(1));
    for (std::size_t j = 0; j < n; ++j) {
      f.at(i, n + j) = b(i, j);
      f.at(n + i, j) = neg(fld, a(i, j).shifted_up(e));
    }
  }
  BasisResult basis = popov_appbasis(std::vector<long long>(2 * n, 6 * deg + 4), f, Shift::uniform(4 * n));
  PolyMat ab = basis.matrix.block(3 * n, 3 * n, n, n);
  for (std::size_t i = 0; i < n; ++i) ab.at(i, i) = sub(fld, ab(i, i), xe);
  return ab;
}

}  // namespace appbasis
