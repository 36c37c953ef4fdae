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
#include <initializer_list>
#include <string>
#include <vector>

#include "appbasis/polymat.hpp"

namespace appbasis {

// Integer degree weights, one per row of a basis (column of the input).
class Shift {
 public:
  Shift() = default;
  explicit Shift(std::vector<long long> v) : v_(std::move(v)) {}
  Shift(std::initializer_list<long long> v) : v_(v) {}

  static Shift uniform(std::size_t m) { return Shift(std::vector<long long>(m, 0)); }

  std::size_t size() const { return v_.size(); }
  long long operator[](std::size_t i) const { return v_[i]; }
  const std::vector<long long>& values() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  long long min() const;
  long long max() const;
  // Entrywise sum with another vector of the same length.
  Shift plus(const std::vector<long long>& other) const;
  Shift plus(long long c) const;
  Shift negated() const;
  Shift subset(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const Shift&, const Shift&) = default;

 private:
  std::vector<long long> v_;
};

// Per-column approximation orders, all positive.
class OrderTuple {
 public:
  OrderTuple() = default;
  explicit OrderTuple(std::vector<long long> d);
  OrderTuple(std::initializer_list<long long> d) : OrderTuple(std::vector<long long>(d)) {}

  static OrderTuple uniform(std::size_t n, long long d) {
    return OrderTuple(std::vector<long long>(n, d));
  }

  std::size_t size() const { return d_.size(); }
  long long operator[](std::size_t j) const { return d_[j]; }
  const std::vector<long long>& values() const { return d_; }
  auto begin() const { return d_.begin(); }
  auto end() const { return d_.end(); }

  long long sigma() const;
  long long max() const;
  bool is_nonincreasing() const;
  OrderTuple subset(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const OrderTuple&, const OrderTuple&) = default;

 private:
  std::vector<long long> d_;
};

// Pivot index and pivot degree of each row.
struct PivotProfile {
  std::vector<std::size_t> index;
  std::vector<long long> degree;

  friend bool operator==(const PivotProfile&, const PivotProfile&) = default;
};

enum class Form { kReduced, kOrderedWeakPopov, kPopov };

std::string form_name(Form f);

struct BasisResult {
  PolyMat matrix;
  PivotProfile pivots;
  Form form;
};

long long sum(const std::vector<long long>& v);
std::vector<long long> add(const std::vector<long long>& a, const std::vector<long long>& b);
std::string format_tuple(const std::vector<long long>& v);

}  // namespace appbasis
