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

#include "appbasis/polymat.hpp"

#include <stdexcept>

#include "appbasis/types.hpp"

namespace appbasis {
namespace {

void check_same_shape(const PolyMat& a, const PolyMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field())) {
    throw std::invalid_argument("polynomial matrices of different shape or field");
  }
}

}  // namespace

PolyMat PolyMat::identity(Field f, std::size_t n) {
  PolyMat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(1);
  return m;
}

PolyMat PolyMat::from_constant(const ConstMat& c) {
  PolyMat m(c.field(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) m.at(i, j) = Poly::constant(c(i, j));
  }
  return m;
}

bool PolyMat::is_zero() const {
  for (const auto& p : e_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Degree PolyMat::degree() const {
  Degree d;
  for (const auto& p : e_) d = max(d, p.degree());
  return d;
}

std::vector<Degree> PolyMat::row_degrees(const Shift& s) const {
  if (s.size() != cols_) throw std::invalid_argument("shift length differs from column count");
  std::vector<Degree> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r[i] = max(r[i], (*this)(i, j).degree() + s[j]);
  }
  return r;
}

std::vector<Degree> PolyMat::row_degrees() const { return row_degrees(Shift::uniform(cols_)); }

std::vector<Degree> PolyMat::column_degrees() const {
  std::vector<Degree> c(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) c[j] = max(c[j], (*this)(i, j).degree());
  }
  return c;
}

ConstMat PolyMat::coefficient(std::size_t k) const {
  ConstMat c(f_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) c.at(i, j) = (*this)(i, j).coeff(k);
  }
  return c;
}

PolyMat PolyMat::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMat r(f_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = (*this)(idx[i], j);
  }
  return r;
}

PolyMat PolyMat::select_cols(const std::vector<std::size_t>& idx) const {
  PolyMat r(f_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = (*this)(i, idx[j]);
  }
  return r;
}

PolyMat PolyMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
  PolyMat r(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = (*this)(r0 + i, c0 + j);
  }
  return r;
}

PolyMat PolyMat::transpose() const {
  PolyMat t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMat add(const PolyMat& a, const PolyMat& b) {
  check_same_shape(a, b);
  PolyMat c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = add(a.field(), a(i, j), b(i, j));
  }
  return c;
}

PolyMat sub(const PolyMat& a, const PolyMat& b) {
  check_same_shape(a, b);
  PolyMat c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = sub(a.field(), a(i, j), b(i, j));
  }
  return c;
}

PolyMat multiply(const ConstMat& c, const PolyMat& a) {
  if (c.cols() != a.rows()) throw std::invalid_argument("constant times matrix: dimension mismatch");
  const Field& f = a.field();
  PolyMat r(f, c.rows(), a.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::vector<Elem> acc;
      for (std::size_t k = 0; k < c.cols(); ++k) axpy_shifted(f, acc, c(i, k), a(k, j), 0);
      r.at(i, j) = Poly(std::move(acc));
    }
  }
  return r;
}

PolyMat truncate_columns(const PolyMat& a, const std::vector<long long>& d) {
  if (d.size() != a.cols()) throw std::invalid_argument("order length differs from column count");
  PolyMat r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = a(i, j).truncated(static_cast<std::size_t>(d[j]));
    }
  }
  return r;
}

PolyMat shift_columns_up(const PolyMat& a, const std::vector<long long>& e) {
  if (e.size() != a.cols()) throw std::invalid_argument("exponent length differs from column count");
  PolyMat r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = a(i, j).shifted_up(static_cast<std::size_t>(e[j]));
    }
  }
  return r;
}

PolyMat shift_rows_up(const PolyMat& a, const std::vector<long long>& e) {
  if (e.size() != a.rows()) throw std::invalid_argument("exponent length differs from row count");
  PolyMat r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = a(i, j).shifted_up(static_cast<std::size_t>(e[i]));
    }
  }
  return r;
}

PolyMat vstack(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  PolyMat r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b(i, j);
  }
  return r;
}

PolyMat hstack(const PolyMat& a, const PolyMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
  PolyMat r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b(i, j);
  }
  return r;
}

}  // namespace appbasis
