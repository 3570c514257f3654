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

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "etale/fusion_ring.hpp"

namespace etale {

using CycMatrix = std::vector<std::vector<CycNumber>>;

/// Fusion ring with quantum dimensions, twists e^{2 pi i h} and the sign
/// of the total dimension D.
struct PreModularCategory {
  std::string id;
  std::string family;
  std::string branch;
  FusionRing ring;
  DimensionCharacter dims;
  std::vector<PhaseExponent> h;
  int d_sign = 1;
  /// Frobenius-Schur indicators supplied by the catalog for degenerate data.
  std::map<int, CycNumber> nu2;
  /// Parameter labels used to select the dataset, e.g. {"dX", "1"}.
  std::vector<std::pair<std::string, std::string>> params;

  int rank() const { return ring.rank(); }
  /// Conductor large enough for dims and twists.
  int conductor() const;
};

/// Structural checks (h[0] = 0, dual-invariant twists, character). Empty
/// means valid.
std::vector<std::string> validate_category(const PreModularCategory& cat);

/// Unnormalized S: S_ij = sum_k N_ij^k e^{2 pi i (h_k - h_i - h_j)} d_k.
CycMatrix s_matrix(const PreModularCategory& cat);
CycMatrix s_matrix(const FusionRing& ring, const std::vector<CycNumber>& dims,
                   const std::vector<PhaseExponent>& h);

/// D^2 = sum d_i^2.
CycNumber global_dimension_squared(const PreModularCategory& cat);

bool is_modular(const PreModularCategory& cat);
/// S_ij = d_i d_j for all i, j.
bool is_symmetric(const PreModularCategory& cat);

/// c/8 mod 1, from (S T)^3 = e^{2 pi i c/8} S^2 with S = S~/D.
PhaseExponent central_charge(const PreModularCategory& cat);

/// Second Frobenius-Schur indicator of a self-dual object (modular only).
CycNumber fs_indicator(const PreModularCategory& cat, int k);

/// Catalog value when present, otherwise fs_indicator.
CycNumber nu2_of(const PreModularCategory& cat, int k);

/// Scalar of c_{X,X} on X (x) X = 1 for invertible self-dual X:
/// e^{-2 pi i h_X} nu2(X).
CycNumber self_braiding_invertible(const PreModularCategory& cat, int x, const CycNumber& nu2);

using MonodromyTable = std::map<std::tuple<int, int, int>, PhaseExponent>;

/// theta(i,j,k) = h_k - h_i - h_j for every admissible channel.
MonodromyTable monodromy_table(const PreModularCategory& cat);

enum class ConformalMode { kSymmetric, kGeneral };

/// Fixed value required for one S~ entry.
struct PinnedEntry {
  int i = 0;
  int j = 0;
  CycNumber value;
};

struct ConformalOptions {
  int bound = 60;
  ConformalMode mode = ConformalMode::kGeneral;
  std::vector<PinnedEntry> pins;
  /// Drop every degenerate solution.
  bool require_nondegenerate = false;
};

/// All twist vectors with denominators <= bound compatible with the ring and
/// character, in lexicographic order.
std::vector<std::vector<PhaseExponent>> solve_conformal_dimensions(const FusionRing& ring,
                                                                   const DimensionCharacter& dims,
                                                                   const ConformalOptions& options);

}  // namespace etale
