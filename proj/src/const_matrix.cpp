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

#include "appbasis/const_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace appbasis {

ConstMat ConstMat::identity(Field f, std::size_t n) {
  ConstMat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool ConstMat::is_zero() const {
  for (Elem x : a_) {
    if (x != 0) return false;
  }
  return true;
}

ConstMat ConstMat::transpose() const {
  ConstMat t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  }
  return t;
}

ConstMat multiply(const ConstMat& a, const ConstMat& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw std::invalid_argument("constant matrix product: dimension mismatch");
  }
  const Field& f = a.field();
  ConstMat c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
      }
    }
  }
  return c;
}

std::size_t rank(const ConstMat& a) {
  const Field& f = a.field();
  ConstMat m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    Elem inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Elem x = f.mul(m(i, c), inv);
      if (x == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = f.sub(m(i, j), f.mul(x, m(r, j)));
    }
    ++r;
  }
  return r;
}

ConstMat inverse(const ConstMat& a) {
  if (a.rows() != a.cols()) throw std::domain_error("inverse of a non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  ConstMat m = a;
  ConstMat inv = ConstMat::identity(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m.at(c, j), m.at(piv, j));
      std::swap(inv.at(c, j), inv.at(piv, j));
    }
    Elem s = f.inv(m(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m.at(c, j) = f.mul(m(c, j), s);
      inv.at(c, j) = f.mul(inv(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Elem x = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) = f.sub(m(i, j), f.mul(x, m(c, j)));
        inv.at(i, j) = f.sub(inv(i, j), f.mul(x, inv(c, j)));
      }
    }
  }
  return inv;
}

bool is_lower_triangular(const ConstMat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace appbasis
