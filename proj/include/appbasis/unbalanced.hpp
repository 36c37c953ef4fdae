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

#include "appbasis/polymat.hpp"
#include "appbasis/types.hpp"

namespace appbasis {

// s-ordered weak Popov basis for shifts concentrated around their minimum
// (|s - min(s)| small compared to sigma).
BasisResult shift_around_min(const OrderTuple& d, const PolyMat& f, const Shift& s);

// s-ordered weak Popov basis for shifts concentrated around their maximum.
// When trace is given it receives |I| at the start of every loop iteration
// and once more at loop exit.
BasisResult shift_around_max(const OrderTuple& d, const PolyMat& f, const Shift& s,
                             std::vector<std::size_t>* trace = nullptr);

}  // namespace appbasis
