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

#include "appbasis/field.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace appbasis {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are deterministic for all 64-bit integers.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field::Field(std::uint64_t modulus) : p_(modulus), small_(modulus < (1ULL << 32)) {
  if (p_ < 3 || p_ >= (1ULL << 62) || !is_prime(p_)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^62: " +
                                std::to_string(p_));
  }
  std::uint64_t q = p_ - 1;
  while ((q & 1) == 0) {
    q >>= 1;
    ++two_adicity_;
  }
  // A quadratic non-residue raised to the odd part generates the 2-Sylow subgroup.
  for (Elem a = 2;; ++a) {
    if (pow(a, (p_ - 1) / 2) == p_ - 1) {
      max_root_ = pow(a, q);
      break;
    }
  }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Elem Field::from_int(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  return static_cast<Elem>(r < 0 ? r + m : r);
}

Elem Field::root_of_unity(int log_len) const {
  if (log_len < 0 || log_len > two_adicity_) {
    throw std::invalid_argument("no root of unity of the requested order");
  }
  Elem w = max_root_;
  for (int i = log_len; i < two_adicity_; ++i) w = mul(w, w);
  return w;
}

std::uint64_t default_modulus_from_env() {
  const char* env = std::getenv("APPBASIS_MODULUS");
  if (env == nullptr || *env == '\0') return kDefaultModulus;
  std::string text(env);
  std::size_t used = 0;
  std::uint64_t p = 0;
  try {
    p = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text[0] == '-') throw std::invalid_argument("APPBASIS_MODULUS: not an integer: " + text);
  return p;
}

}  // namespace appbasis
