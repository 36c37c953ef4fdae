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

#include <vector>

#include "appbasis/polymat.hpp"
#include "appbasis/types.hpp"

namespace appbasis {

// s-ordered weak Popov basis of the approximants of F at uniform order
// sigma, of degree at most sigma. F is m x n with entries read modulo X^sigma.
BasisResult pm_basis(long long sigma, const PolyMat& f, const Shift& s);

// Uniform-order instance equivalent to (d, F): column j is multiplied by
// X^{max(d) - d_j}. Returns max(d) and the padded matrix.
struct PaddedInstance {
  long long sigma;
  PolyMat f;
};
PaddedInstance pad_orders(const OrderTuple& d, const PolyMat& f);

// s-Popov basis via two uniform-order computations: the first reveals the
// pivot degrees delta, the second uses the shift -delta, then normalize.
BasisResult popov_pm_basis(const OrderTuple& d, const PolyMat& f, const Shift& s);

}  // namespace appbasis
