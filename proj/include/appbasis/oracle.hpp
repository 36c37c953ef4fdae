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

#include <string>
#include <vector>

#include "appbasis/polymat.hpp"
#include "appbasis/types.hpp"

namespace appbasis {

// Reference s-ordered weak Popov basis: one order-1 base case per unit of
// order, column by column, each applied to the current residual.
BasisResult iterative_appbasis(const OrderTuple& d, const PolyMat& f, const Shift& s);

struct VerifyReport {
  bool approximant = false;
  bool form = false;
  bool degrees = false;
  bool generation = false;

  bool all() const { return approximant && form && degrees && generation; }
  std::string line() const;
};

// Independent checks of a claimed basis P:
//   approximant: P F = 0 mod X^d;
//   form: P is in the claimed s-form;
//   degrees: pivot degrees are those of the reference basis and sum(delta) <= sigma;
//   generation: each reference row reduces to zero against P, and P has the
//   same determinantal degree as the reference.
VerifyReport verify_basis(const PolyMat& p, const OrderTuple& d, const PolyMat& f, const Shift& s,
                          Form form);

// Product A B of two n x n matrices of degree <= deg, read off the Popov
// approximant basis of a 4n x 2n embedding.
PolyMat matmul_embed(const PolyMat& a, const PolyMat& b, long long deg);

}  // namespace appbasis
