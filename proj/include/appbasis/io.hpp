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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "appbasis/polymat.hpp"

namespace appbasis {

// Text format, one item per line:
//
//   POLYMAT 1
//   modulus <p>
//   dims <m> <n>
//   orders <d_1> ... <d_n>        (optional)
//   <i> <j> : <c_0> <c_1> ...     (one line per entry, row-major)
//
// Indices are 0-based and coefficients go from low to high degree. A zero
// entry is written "<i> <j> :". Writing then reading gives back the same
// matrix, and writing is deterministic.
struct PolyMatFile {
  PolyMat matrix;
  std::optional<std::vector<long long>> orders;
};

void write_polymat(std::ostream& os, const PolyMat& p,
                   const std::optional<std::vector<long long>>& orders = std::nullopt);
std::string to_text(const PolyMat& p, const std::optional<std::vector<long long>>& orders = std::nullopt);

// Throws std::runtime_error with the offending line number on malformed input.
PolyMatFile read_polymat(std::istream& is);
PolyMatFile read_polymat_file(const std::string& path);
void write_polymat_file(const std::string& path, const PolyMat& p,
                        const std::optional<std::vector<long long>>& orders = std::nullopt);

}  // namespace appbasis
