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
#include "appbasis/degree.hpp"
#include "appbasis/field.hpp"
#include "appbasis/poly.hpp"

namespace appbasis {

class Shift;

// m x n matrix of polynomials over F_p, entries stored row-major.
class PolyMat {
 public:
  PolyMat() : PolyMat(Field(), 0, 0) {}
  PolyMat(Field f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), e_(rows * cols) {}

  static PolyMat identity(Field f, std::size_t n);
  static PolyMat from_constant(const ConstMat& c);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool is_zero() const;
  Degree degree() const;
  // rdeg_s; zero rows get Degree::neg_inf().
  std::vector<Degree> row_degrees(const Shift& s) const;
  std::vector<Degree> row_degrees() const;
  std::vector<Degree> column_degrees() const;
  // Coefficient of X^k as a constant matrix.
  ConstMat coefficient(std::size_t k) const;

  PolyMat select_rows(const std::vector<std::size_t>& idx) const;
  PolyMat select_cols(const std::vector<std::size_t>& idx) const;
  PolyMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  PolyMat transpose() const;

  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Poly> e_;
};

PolyMat add(const PolyMat& a, const PolyMat& b);
PolyMat sub(const PolyMat& a, const PolyMat& b);
// Constant matrix times polynomial matrix.
PolyMat multiply(const ConstMat& c, const PolyMat& a);
// Column j reduced modulo X^{d_j}.
PolyMat truncate_columns(const PolyMat& a, const std::vector<long long>& d);
// Column j multiplied by X^{e_j}.
PolyMat shift_columns_up(const PolyMat& a, const std::vector<long long>& e);
// Row i multiplied by X^{e_i}.
PolyMat shift_rows_up(const PolyMat& a, const std::vector<long long>& e);
// Stack [a; b] and [a b].
PolyMat vstack(const PolyMat& a, const PolyMat& b);
PolyMat hstack(const PolyMat& a, const PolyMat& b);

}  // namespace appbasis
