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

#include "etale/fusion_ring.hpp"

namespace etale {

using IntMatrix = std::vector<std::vector<int>>;

/// Non-negative integer matrices M_i with M_i M_j = sum_k N_ij^k M_k and
/// M_{i*} = M_i^T, stored in canonical form.
struct NimRep {
  int dim = 0;
  std::vector<IntMatrix> m;
  bool indecomposable = true;

  friend bool operator==(const NimRep&, const NimRep&) = default;
};

/// Entry bound used by the search: floor(FPdim_i) for each object.
std::vector<int> nimrep_entry_bounds(const FusionRing& ring);

/// All r-dimensional NIM-reps up to simultaneous permutation of the basis,
/// sorted by canonical serialization.
std::vector<NimRep> enumerate_nimreps(const FusionRing& ring, int r);

/// Lexicographically minimal relabelling of the basis.
NimRep canonicalize(const NimRep& rep);

/// Exact check of the representation equations.
bool verify_nimrep(const FusionRing& ring, const NimRep& rep);

/// Support graph of sum_i M_i is connected.
bool is_indecomposable(const NimRep& rep);

/// For each basis element m the vector n_i = (M_i)_{mm}, deduplicated.
std::vector<std::vector<int>> internal_hom_candidates(const NimRep& rep);

std::string to_string(const FusionRing& ring, const NimRep& rep);

}  // namespace etale
