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

#include "appbasis/field.hpp"

namespace appbasis {

// Dense matrix over F_p, row-major.
class ConstMat {
 public:
  ConstMat(Field f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static ConstMat identity(Field f, std::size_t n);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  bool is_zero() const;
  ConstMat transpose() const;

  friend bool operator==(const ConstMat& a, const ConstMat& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

ConstMat multiply(const ConstMat& a, const ConstMat& b);
std::size_t rank(const ConstMat& a);
// Throws std::domain_error when a is singular or not square.
ConstMat inverse(const ConstMat& a);
bool is_lower_triangular(const ConstMat& a);

}  // namespace appbasis
