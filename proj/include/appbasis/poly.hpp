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
#include <span>
#include <vector>

#include "appbasis/degree.hpp"
#include "appbasis/field.hpp"

namespace appbasis {

// Dense univariate polynomial over F_p, coefficients low to high. The
// coefficient vector never has a trailing zero; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  static Poly monomial(Elem c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  Degree degree() const {
    return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long long>(c_.size()) - 1);
  }
  std::size_t length() const { return c_.size(); }
  Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  Elem leading_coeff() const { return c_.empty() ? 0 : c_.back(); }
  std::span<const Elem> coeffs() const { return c_; }

  void set_coeff(std::size_t k, Elem v);

  // p mod X^k.
  Poly truncated(std::size_t k) const;
  // p div X^k.
  Poly shifted_down(std::size_t k) const;
  // X^k p.
  Poly shifted_up(std::size_t k) const;
  // Coefficients [start, start + len) as a polynomial; negative indices read as zero.
  Poly window(long long start, std::size_t len) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly neg(const Field& f, const Poly& a);
Poly scale(const Field& f, Elem c, const Poly& a);

// a += c * X^shift * b, in place on a raw coefficient buffer (grown as needed).
void axpy_shifted(const Field& f, std::vector<Elem>& a, Elem c, const Poly& b,
                  std::size_t shift);

enum class PolyMulAlgo { kAuto, kSchoolbook, kKaratsuba, kTransform };

// Product of two polynomials; kAuto picks by size and field.
Poly mul(const Field& f, const Poly& a, const Poly& b, PolyMulAlgo algo = PolyMulAlgo::kAuto);

}  // namespace appbasis
