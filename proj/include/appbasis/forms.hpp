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
#include "appbasis/polymat.hpp"
#include "appbasis/types.hpp"

namespace appbasis {

// Entry (i, j) is the coefficient of degree rdeg_s(row i) - s_j of P(i, j).
// Zero rows give zero rows.
ConstMat leading_matrix(const PolyMat& p, const Shift& s);

bool check_form(const PolyMat& p, const Shift& s, Form form);

// Pivot of a row: the rightmost entry reaching the shifted row degree.
// Throws std::domain_error on a zero row or on repeated pivot indices, i.e.
// when P is not in s-weak Popov form.
PivotProfile pivot_profile(const PolyMat& p, const Shift& s);

// Diagonal degrees of a square matrix (the pivot degrees of an ordered weak
// Popov matrix).
std::vector<long long> diagonal_degrees(const PolyMat& p);

// Popov basis from any basis R of the same module that is reduced for the
// shift -delta: LM_{-delta}(R)^{-1} R. Throws std::domain_error when that
// leading matrix is singular.
BasisResult normalize_to_popov(const PolyMat& r, const std::vector<long long>& delta);

// Remainder of the row vector v (1 x m) after reduction by the s-weak Popov
// matrix P. The remainder is zero iff v lies in the row space of P.
PolyMat membership_reduce(const PolyMat& v, const PolyMat& p, const Shift& s);

// Rows and columns idx of P, in the given order: the leading block of
// pi P pi^{-1} for the permutation that moves idx to the front.
PolyMat principal_submatrix(const PolyMat& p, const std::vector<std::size_t>& idx);

// Inverse operation: an r x r matrix placed at rows and columns idx of an
// n x n matrix whose other entries are those of `rest`.
PolyMat embed_principal(const PolyMat& block, const std::vector<std::size_t>& idx,
                        const PolyMat& rest);

}  // namespace appbasis
