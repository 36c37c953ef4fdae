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

#include "appbasis/forms.hpp"
#include "appbasis/oracle.hpp"

namespace appbasis::testing {

// Canonical s-Popov basis from the iterative reference alone: its pivot
// degrees delta, then a second run with shift -delta, then normalization.
inline BasisResult canonical_basis(const OrderTuple& d, const PolyMat& f, const Shift& s) {
  auto delta = iterative_appbasis(d, f, s).pivots.degree;
  auto r = iterative_appbasis(d, f, Shift(delta).negated());
  return normalize_to_popov(r.matrix, delta);
}

}  // namespace appbasis::testing
