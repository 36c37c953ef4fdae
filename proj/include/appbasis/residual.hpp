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

#include "appbasis/multiply.hpp"
#include "appbasis/polymat.hpp"

namespace appbasis {

enum class ResidualStrategy {
  kAuto,
  // Full product P * F, then truncate and shift.
  kNaive,
  // Split the columns of F into slices of degree at most deg P.
  kSplitInput,
  // Split the columns of P into slices of degree below ceil(sigma / m).
  kSplitBasis,
};

// Column j of the result is X^{-offset_j} (P F_j mod X^{d_j}), that is the
// coefficients of P F_j in [offset_j, d_j). Requires 0 <= offset_j <= d_j.
PolyMat residual(const PolyMat& p, const PolyMat& f, const std::vector<long long>& d,
                 const std::vector<long long>& offsets,
                 ResidualStrategy strategy = ResidualStrategy::kAuto);

// Same, with F's column j implicitly multiplied by X^{e_j} first.
PolyMat residual_scaled(const PolyMat& p, const PolyMat& f, const std::vector<long long>& e,
                        const std::vector<long long>& d, const std::vector<long long>& offsets);

}  // namespace appbasis
