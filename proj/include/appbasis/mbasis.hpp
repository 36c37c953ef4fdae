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

#include "appbasis/const_matrix.hpp"
#include "appbasis/types.hpp"

namespace appbasis {

// s-Popov basis of the approximants of order (1, ..., 1) for a constant
// m x n matrix. Pivot degrees are 0 or 1 and sum to rank(C).
BasisResult mbasis1(const ConstMat& c, const Shift& s);

}  // namespace appbasis
