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

#include "appbasis/polymat.hpp"

namespace appbasis {

enum class MatMulAlgo {
  kAuto,
  // Entrywise products, each with the schoolbook method.
  kSchoolbook,
  // Entrywise products, each with Karatsuba.
  kKaratsuba,
  // Evaluate every entry with a number-theoretic transform, multiply the
  // value matrices pointwise, interpolate. Needs p - 1 divisible by a large
  // enough power of two; otherwise falls back to kKaratsuba.
  kTransform,
};

struct MulThresholds {
  // kAuto uses the transform when the product degree and the inner
  // dimension reach these values.
  std::size_t transform_min_degree = 32;
  std::size_t transform_min_inner = 2;
};

PolyMat multiply(const PolyMat& a, const PolyMat& b, MatMulAlgo algo = MatMulAlgo::kAuto,
                 const MulThresholds& th = {});

// True when a transform of the given length exists over f.
bool transform_available(const Field& f, std::size_t length);

}  // namespace appbasis
