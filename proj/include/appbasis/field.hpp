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

#include <cstdint>
#include <string>

namespace appbasis {

using Elem = std::uint64_t;

inline constexpr std::uint64_t kDefaultModulus = 998244353;

bool is_prime(std::uint64_t n);

// Prime field F_p for odd primes p < 2^62. Elements are plain integers in
// [0, p); every operation returns a reduced representative.
class Field {
 public:
  explicit Field(std::uint64_t modulus = kDefaultModulus);

  std::uint64_t modulus() const { return p_; }

  Elem add(Elem a, Elem b) const {
    Elem c = a + b;
    return c >= p_ ? c - p_ : c;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    if (small_) return (a * b) % p_;
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem from_int(long long v) const;
  // Centered-free decimal rendering; values are printed in [0, p).
  std::string str(Elem a) const { return std::to_string(a); }

  // Largest k with 2^k | p - 1.
  int two_adicity() const { return two_adicity_; }
  // Primitive 2^log_len-th root of unity; requires log_len <= two_adicity().
  Elem root_of_unity(int log_len) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  bool small_;
  int two_adicity_ = 0;
  Elem max_root_ = 1;
};

// Modulus from the APPBASIS_MODULUS environment variable, else the default.
std::uint64_t default_modulus_from_env();

}  // namespace appbasis
