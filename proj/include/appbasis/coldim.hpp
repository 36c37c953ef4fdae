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

#include "appbasis/polymat.hpp"
#include "appbasis/types.hpp"

namespace appbasis {

// Output of reduce_coldim. With Q any basis of the approximants of
// (d_hat, f_hat) under shift s_hat, the product Q * partial.matrix is a
// basis of the approximants of the original instance.
struct ColDimReduction {
  std::vector<long long> d_hat;  // positive entries; may be empty
  PolyMat f_hat;                 // m x nu with nu < m
  Shift s_hat;                   // rdeg_s(partial)
  BasisResult partial;           // s-owp, degree at most 2 sigma / m
};

// Requires d nonincreasing and n >= m.
ColDimReduction reduce_coldim(const OrderTuple& d, const PolyMat& f, const Shift& s);

}  // namespace appbasis
