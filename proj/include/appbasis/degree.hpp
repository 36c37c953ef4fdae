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

#include <compare>
#include <stdexcept>
#include <string>

namespace appbasis {

// Degree of a polynomial, or of a (shifted) row. The zero polynomial has
// degree "minus infinity", which compares below every finite value and is
// absorbed by shift arithmetic.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(long long v) : v_(v), finite_(true) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_finite() const { return finite_; }

  long long value() const {
    if (!finite_) throw std::domain_error("degree of the zero polynomial");
    return v_;
  }

  constexpr Degree operator+(long long s) const {
    return finite_ ? Degree(v_ + s) : Degree();
  }
  constexpr Degree operator-(long long s) const {
    return finite_ ? Degree(v_ - s) : Degree();
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.v_ <=> b.v_;
  }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  long long v_ = 0;
  bool finite_ = false;
};

inline Degree max(Degree a, Degree b) { return a < b ? b : a; }

}  // namespace appbasis
