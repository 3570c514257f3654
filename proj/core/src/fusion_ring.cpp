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

#include "etale/fusion_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "etale/errors.hpp"

namespace etale {

bool FusionRing::is_commutative() const {
  const int r = rank();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (n[i][j] != n[j][i]) return false;
  return true;
}

bool FusionRing::is_multiplicity_free() const {
  for (const auto& a : n)
    for (const auto& b : a)
      for (int c : b)
        if (c > 1) return false;
  return true;
}

std::vector<std::vector<int>> FusionRing::left_matrix(int i) const { return n[i]; }

FusionRing make_ring(std::string id, std::vector<std::string> labels,
                     std::vector<std::vector<std::vector<int>>> n, int conductor) {
  FusionRing ring;
  ring.id = std::move(id);
  ring.labels = std::move(labels);
  ring.n = std::move(n);
  ring.conductor = conductor;
  const int r = ring.rank();
  ring.dual.assign(r, -1);
  for (int i = 0; i < r && i < static_cast<int>(ring.n.size()); ++i)
    for (int j = 0; j < r && j < static_cast<int>(ring.n[i].size()); ++j)
      if (!ring.n[i][j].empty() && ring.n[i][j][0] > 0) ring.dual[i] = j;
  return ring;
}

std::vector<std::string> validate_ring(const FusionRing& ring) {
  std::vector<std::string> out;
  const int r = ring.rank();
  if (r == 0) return {"rank must be positive"};
  if (static_cast<int>(ring.n.size()) != r) return {"fusion tensor has wrong shape"};
  for (const auto& a : ring.n) {
    if (static_cast<int>(a.size()) != r) return {"fusion tensor has wrong shape"};
    for (const auto& b : a)
      if (static_cast<int>(b.size()) != r) return {"fusion tensor has wrong shape"};
  }
  if (static_cast<int>(ring.dual.size()) != r) return {"dual has wrong length"};
  auto name = [&](int i) { return ring.labels[i]; };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.n[i][j][k] < 0)
          out.push_back("negative coefficient N[" + name(i) + "][" + name(j) + "][" + name(k) + "]");
  if (ring.dual[0] != 0) out.push_back("dual of unit is not unit");
  for (int i = 0; i < r; ++i) {
    const int d = ring.dual[i];
    if (d < 0 || d >= r || ring.dual[d] != i) {
      out.push_back("dual is not an involution at " + name(i));
      continue;
    }
  }
  if (!out.empty()) return out;
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      const int delta = j == k ? 1 : 0;
      if (ring.n[0][j][k] != delta || ring.n[j][0][k] != delta) {
        out.push_back("unit law fails at " + name(j) + "," + name(k));
      }
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const int expect = j == ring.dual[i] ? 1 : 0;
      if (ring.n[i][j][0] != expect) out.push_back("duality fails at " + name(i) + "," + name(j));
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.n[i][j][k] != ring.n[ring.dual[i]][k][j])
          out.push_back("Frobenius reciprocity fails at " + name(i) + "," + name(j) + "," + name(k));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          long lhs = 0, rhs = 0;
          for (int m = 0; m < r; ++m) {
            lhs += static_cast<long>(ring.n[i][j][m]) * ring.n[m][k][l];
            rhs += static_cast<long>(ring.n[j][k][m]) * ring.n[i][m][l];
          }
          if (lhs != rhs)
            out.push_back("associativity fails at " + name(i) + "," + name(j) + "," + name(k) + "," + name(l));
        }
  return out;
}

bool is_character(const FusionRing& ring, const std::vector<CycNumber>& dims) {
  const int r = ring.rank();
  if (static_cast<int>(dims.size()) != r || !(dims[0] == CycNumber(1))) return false;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      CycNumber rhs;
      for (int k = 0; k < r; ++k)
        if (ring.n[i][j][k]) rhs += CycNumber(ring.n[i][j][k]) * dims[k];
      if (!(dims[i] * dims[j] == rhs)) return false;
    }
  return true;
}

CycNumber categorical_dimension(const DimensionCharacter& ch) {
  CycNumber total;
  for (const auto& d : ch.dims) total += d * d;
  return total;
}

bool rings_isomorphic(const FusionRing& a, const FusionRing& b) {
  const int r = a.rank();
  if (r != b.rank()) return false;
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j)
        for (int k = 0; k < r && ok; ++k) ok = a.n[p[i]][p[j]][p[k]] == b.n[i][j][k];
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

std::string to_string(const FusionRing& ring) {
  std::ostringstream os;
  const int r = ring.rank();
  os << ring.id << " (rank " << r << ")\n";
  for (int i = 1; i < r; ++i)
    for (int j = i; j < r; ++j) {
      os << "  " << ring.labels[i] << " x " << ring.labels[j] << " = ";
      bool first = true;
      for (int k = 0; k < r; ++k) {
        const int c = ring.n[i][j][k];
        if (!c) continue;
        if (!first) os << " + ";
        first = false;
        if (c > 1) os << c;
        os << ring.labels[k];
      }
      os << "\n";
    }
  return os.str();
}

}  // namespace etale
