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

#ifdef NDEBUG
inline constexpr bool kVerifyByDefault = false;
#else
inline constexpr bool kVerifyByDefault = true;
#endif

// s-Popov basis of the approximants of (d, F) given its s-pivot degrees
// delta (sum(delta) <= sigma). With verify set, the output is checked to be
// an approximant basis in Popov form and std::logic_error is thrown when it
// is not, which is how a wrong delta shows up.
BasisResult known_deg_appbasis(const OrderTuple& d, const PolyMat& f, const Shift& s,
                               const std::vector<long long>& delta,
                               bool verify = kVerifyByDefault);

}  // namespace appbasis
