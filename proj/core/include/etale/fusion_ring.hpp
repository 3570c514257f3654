// Copyright 2026 The etale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "etale/cyclotomic.hpp"

namespace etale {

/// Based ring with a distinguished unit (index 0), duality involution and
/// non-negative structure constants N[i][j][k] = N_{ij}^k.
struct FusionRing {
  std::string id;
  std::vector<std::string> labels;
  std::vector<int> dual;
  std::vector<std::vector<std::vector<int>>> n;
  /// Conductor in which all dimension characters are expected to live.
  int conductor = 1;

  int rank() const { return static_cast<int>(labels.size()); }
  int operator()(int i, int j, int k) const { return n[i][j][k]; }
  bool is_commutative() const;
  bool is_multiplicity_free() const;
  /// Left multiplication matrix (N_i)_{jk} = N_{ij}^k.
  std::vector<std::vector<int>> left_matrix(int i) const;
};

/// Builds a ring from a fusion table; dual is derived from N_{ij}^0.
FusionRing make_ring(std::string id, std::vector<std::string> labels,
                     std::vector<std::vector<std::vector<int>>> n, int conductor = 1);

/// Human-readable axiom violations; empty means valid.
std::vector<std::string> validate_ring(const FusionRing& ring);

struct FPData {
  std::vector<CycNumber> dims;
  CycNumber total;
};

/// Real character: dims[0] = 1 and d_i d_j = sum_k N_ij^k d_k.
struct DimensionCharacter {
  std::vector<CycNumber> dims;
};

/// Frobenius-Perron dimensions, exact over ring.conductor.
FPData fp_dims(const FusionRing& ring);

/// All real characters, ordered lexicographically by numeric value.
std::vector<DimensionCharacter> dimension_characters(const FusionRing& ring);

/// True iff dims is a character of ring.
bool is_character(const FusionRing& ring, const std::vector<CycNumber>& dims);

/// Sum of squares of the character values.
CycNumber categorical_dimension(const DimensionCharacter& ch);

/// A bijection p with N_{p(i) p(j)}^{p(k)} = N'_{ij}^k fixing the unit, if any.
bool rings_isomorphic(const FusionRing& a, const FusionRing& b);

std::string to_string(const FusionRing& ring);

}  // namespace etale
