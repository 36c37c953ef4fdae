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

#include "appbasis/poly.hpp"

#include <algorithm>

namespace appbasis {

Poly Poly::monomial(Elem c, std::size_t k) {
  if (c == 0) return Poly();
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::set_coeff(std::size_t k, Elem v) {
  if (k >= c_.size()) {
    if (v == 0) return;
    c_.resize(k + 1, 0);
  }
  c_[k] = v;
  trim();
}

Poly Poly::truncated(std::size_t k) const {
  if (k >= c_.size()) return *this;
  return Poly(std::vector<Elem>(c_.begin(), c_.begin() + static_cast<long>(k)));
}

Poly Poly::shifted_down(std::size_t k) const {
  if (k >= c_.size()) return Poly();
  return Poly(std::vector<Elem>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::shifted_up(std::size_t k) const {
  if (c_.empty()) return Poly();
  std::vector<Elem> v(k + c_.size(), 0);
  std::copy(c_.begin(), c_.end(), v.begin() + static_cast<long>(k));
  return Poly(std::move(v));
}

Poly Poly::window(long long start, std::size_t len) const {
  std::vector<Elem> v(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    long long k = start + static_cast<long long>(i);
    if (k >= 0 && static_cast<std::size_t>(k) < c_.size()) v[i] = c_[static_cast<std::size_t>(k)];
  }
  return Poly(std::move(v));
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Elem> v(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(v));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Elem> v(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(v));
}

Poly neg(const Field& f, const Poly& a) {
  std::vector<Elem> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : v) x = f.neg(x);
  return Poly(std::move(v));
}

Poly scale(const Field& f, Elem c, const Poly& a) {
  if (c == 0) return Poly();
  std::vector<Elem> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : v) x = f.mul(c, x);
  return Poly(std::move(v));
}

void axpy_shifted(const Field& f, std::vector<Elem>& a, Elem c, const Poly& b,
                  std::size_t shift) {
  if (c == 0 || b.is_zero()) return;
  if (a.size() < shift + b.length()) a.resize(shift + b.length(), 0);
  auto bc = b.coeffs();
  for (std::size_t i = 0; i < bc.size(); ++i) {
    a[shift + i] = f.add(a[shift + i], f.mul(c, bc[i]));
  }
}

}  // namespace appbasis
