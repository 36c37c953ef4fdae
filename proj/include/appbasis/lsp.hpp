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
#include <vector>

#include "appbasis/const_matrix.hpp"

namespace appbasis {

// Row rank profile of a constant matrix together with the row dependencies.
//
// profile: the lexicographically smallest set of row indices whose rows form
// a basis of the row space (greedy top to bottom), in increasing order.
// L: unit lower triangular m x m. Rows in the profile are identity rows.
// Row i outside the profile holds the coefficients expressing row i of C as
// a combination of earlier profile rows, so that row i of L with its
// off-diagonal entries negated is a left kernel vector of C.
struct RowProfile {
  std::vector<std::size_t> profile;
  ConstMat L;
};

RowProfile row_rank_profile(const ConstMat& c);

}  // namespace appbasis
