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

#include "appbasis/types.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace appbasis {

long long Shift::min() const {
  if (v_.empty()) throw std::domain_error("min of an empty shift");
  return *std::min_element(v_.begin(), v_.end());
}

long long Shift::max() const {
  if (v_.empty()) throw std::domain_error("max of an empty shift");
  return *std::max_element(v_.begin(), v_.end());
}

Shift Shift::plus(const std::vector<long long>& other) const {
  return Shift(appbasis::add(v_, other));
}

Shift Shift::plus(long long c) const {
  std::vector<long long> r = v_;
  for (auto& x : r) x += c;
  return Shift(std::move(r));
}

Shift Shift::negated() const {
  std::vector<long long> r = v_;
  for (auto& x : r) x = -x;
  return Shift(std::move(r));
}

Shift Shift::subset(const std::vector<std::size_t>& idx) const {
  std::vector<long long> r;
  r.reserve(idx.size());
  for (auto i : idx) r.push_back(v_.at(i));
  return Shift(std::move(r));
}

OrderTuple::OrderTuple(std::vector<long long> d) : d_(std::move(d)) {
  for (long long x : d_) {
    if (x < 1) throw std::invalid_argument("approximation orders must be positive");
  }
}

long long OrderTuple::sigma() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }

long long OrderTuple::max() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

bool OrderTuple::is_nonincreasing() const {
  return std::is_sorted(d_.begin(), d_.end(), std::greater<>());
}

OrderTuple OrderTuple::subset(const std::vector<std::size_t>& idx) const {
  std::vector<long long> r;
  r.reserve(idx.size());
  for (auto j : idx) r.push_back(d_.at(j));
  return OrderTuple(std::move(r));
}

std::string form_name(Form f) {
  switch (f) {
    case Form::kReduced:
      return "reduced";
    case Form::kOrderedWeakPopov:
      return "owp";
    case Form::kPopov:
      return "popov";
  }
  return "?";
}

long long sum(const std::vector<long long>& v) { return std::accumulate(v.begin(), v.end(), 0LL); }

std::vector<long long> add(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple lengths differ");
  std::vector<long long> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::string format_tuple(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace appbasis
