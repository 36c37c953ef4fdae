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

// s-Popov approximant basis of (d, F). Columns with zero order are ignored.
BasisResult popov_appbasis(const std::vector<long long>& d, const PolyMat& f, const Shift& s);

}  // namespace appbasis
