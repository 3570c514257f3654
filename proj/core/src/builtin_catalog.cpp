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

#include <functional>

#include "etale/catalog.hpp"

namespace etale {
namespace {

using Tensor = std::vector<std::vector<std::vector<int>>>;

Tensor from_table(int rank, const std::function<std::vector<int>(int, int)>& product) {
  Tensor n(rank, std::vector<std::vector<int>>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) n[i][j] = product(i, j);
  return n;
}

Tensor group_ring(int order, const std::function<int(int, int)>& mul) {
  return from_table(order, [&](int i, int j) {
    std::vector<int> v(order, 0);
    v[mul(i, j)] = 1;
    return v;
  });
}

// Symmetric rank-3 ring from the three nontrivial products.
Tensor rank3(std::vector<int> xx, std::vector<int> xy, std::vector<int> yy) {
  Tensor n(3, std::vector<std::vector<int>>(3));
  n[0] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  n[1] = {{0, 1, 0}, xx, xy};
  n[2] = {{0, 0, 1}, xy, yy};
  return n;
}

CatalogEntry ring_entry(std::string id, std::vector<std::string> aliases, std::vector<std::string> labels, Tensor n,
                        int conductor, std::string provenance, bool module_ring = true) {
  CatalogEntry e;
  e.id = id;
  e.kind = EntryKind::kFusionRing;
  e.aliases = std::move(aliases);
  e.provenance = std::move(provenance);
  e.conductor = conductor;
  e.libraries = {module_ring ? "module-rings" : "mfc-only"};
  e.payload = make_ring(std::move(id), std::move(labels), std::move(n), conductor);
  return e;
}

std::vector<PhaseExponent> hv(std::initializer_list<std::pair<long, long>> v) {
  std::vector<PhaseExponent> out;
  for (auto [p, q] : v) out.emplace_back(p, q);
  return out;
}

CycNumber sqrt_int(long m) { return sqrt_of_integer(m); }

CatalogEntry family_entry(std::string id, std::vector<std::string> aliases, PremodularFamily f, int conductor,
                          std::string provenance) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = EntryKind::kPremodularFamily;
  e.aliases = std::move(aliases);
  e.provenance = std::move(provenance);
  e.conductor = conductor;
  e.payload = std::move(f);
  return e;
}

std::vector<CatalogEntry> rings() {
  std::vector<CatalogEntry> out;
  const std::string table = "multiplicity-free fusion ring table";
  out.push_back(ring_entry("FR1,0_1", {"Vect", "trivial"}, {"1"}, {{{1}}}, 1, table));
  out.push_back(ring_entry("FR2,0_1", {"Vec_Z2", "Z2"}, {"1", "X"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, 1, table));
  out.push_back(ring_entry("FR2,0_2", {"Fib"}, {"1", "X"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, 5, table));
  out.push_back(ring_entry("FR3,2_1", {"Vec_Z3", "Z3"}, {"1", "X", "Y"},
                           group_ring(3, [](int a, int b) { return (a + b) % 3; }), 1, table));
  out.push_back(ring_entry("FR3,0_1", {"Ising"}, {"1", "X", "Y"}, rank3({1, 0, 0}, {0, 0, 1}, {1, 1, 0}), 8, table));
  out.push_back(
      ring_entry("FR3,0_2", {"Rep(S3)", "RepS3"}, {"1", "X", "Y"}, rank3({1, 0, 0}, {0, 0, 1}, {1, 1, 1}), 1, table));
  out.push_back(ring_entry("FR3,0_3", {"psu(2)_5", "psu25"}, {"1", "X", "Y"},
                           rank3({1, 0, 1}, {0, 1, 1}, {1, 1, 1}), 7, table));
  out.push_back(ring_entry("K(1,0,2,0)", {"K1020"}, {"1", "X", "Y"}, rank3({1, 2, 1}, {0, 1, 0}, {1, 0, 0}), 12,
                           "rank-3 fusion ring with multiplicity"));
  out.push_back(ring_entry("FR4,0_1", {"Vec_Z2xZ2", "Z2xZ2"}, {"1", "a", "b", "ab"},
                           group_ring(4, [](int a, int b) { return a ^ b; }), 1, table));
  out.push_back(ring_entry("FR4,2_1", {"Vec_Z4", "Z4"}, {"1", "g", "g2", "g3"},
                           group_ring(4, [](int a, int b) { return (a + b) % 4; }), 1, table));
  // Z3 Tambara-Yamagami ring: a rho = rho, rho^2 = 1 + a + a^2.
  out.push_back(ring_entry("FR4,2_2", {"TY(Z3)", "Z3-TY"}, {"1", "a", "a2", "rho"},
                           from_table(4,
                                      [](int i, int j) {
                                        std::vector<int> v(4, 0);
                                        if (i < 3 && j < 3) v[(i + j) % 3] = 1;
                                        else if (i == 3 && j == 3) v[0] = v[1] = v[2] = 1;
                                        else v[3] = 1;
                                        return v;
                                      }),
                           12, table));
  // S3 as pairs (k, f) meaning r^k s^f.
  auto s3 = [](int a, int b) {
    const int ka = a % 3, fa = a / 3, kb = b % 3, fb = b / 3;
    const int k = (ka + (fa ? 3 - kb : kb)) % 3;
    return k + 3 * ((fa + fb) % 2);
  };
  out.push_back(
      ring_entry("FR6,2_1", {"Vec_S3", "S3"}, {"1", "r", "r2", "s", "rs", "r2s"}, group_ring(6, s3), 1, table));
  out.push_back(ring_entry("FR6,4_1", {"Vec_Z6", "Z6"}, {"1", "g", "g2", "g3", "g4", "g5"},
                           group_ring(6, [](int a, int b) { return (a + b) % 6; }), 1, table));
  // Fib x Z2, only needed by the modular reference data.
  out.push_back(ring_entry("Fib*Z2", {"FibxZ2"}, {"1", "X", "Z", "XZ"},
                           from_table(4,
                                      [](int i, int j) {
                                        // index = fib + 2 * z
                                        const int fi = i % 2, zi = i / 2, fj = j % 2, zj = j / 2;
                                        const int z = (zi + zj) % 2;
                                        std::vector<int> v(4, 0);
                                        v[0 + 2 * z] += fi == fj ? 1 : 0;
                                        v[1 + 2 * z] += (fi || fj) ? 1 : 0;
                                        return v;
                                      }),
                           5, "product ring", false));
  return out;
}

FamilyCharacter character(std::vector<CycNumber> dims, std::vector<std::vector<PhaseExponent>> h) {
  FamilyCharacter c;
  c.dims = std::move(dims);
  c.h = std::move(h);
  return c;
}

FamilyBranch branch(std::string name, std::vector<FamilyCharacter> chars, ConformalMode mode = ConformalMode::kGeneral) {
  FamilyBranch b;
  b.name = std::move(name);
  b.mode = mode;
  b.characters = std::move(chars);
  return b;
}

PremodularFamily family(std::string ring, std::vector<FamilyBranch> branches, int count) {
  PremodularFamily f;
  f.ring = std::move(ring);
  f.branches = std::move(branches);
  f.expected_count = count;
  return f;
}

std::vector<CatalogEntry> families() {
  std::vector<CatalogEntry> out;
  const std::string twists = "twists solved from the balancing and S-matrix conditions";

  out.push_back(family_entry("vect", {"Vect"}, family("FR1,0_1", {branch("", {character({1}, {hv({{0, 1}})})})}, 2),
                             1, twists));

  std::vector<FamilyCharacter> z2;
  for (int d : {1, -1}) {
    FamilyCharacter c = character({1, d}, {hv({{0, 1}, {0, 1}}), hv({{0, 1}, {1, 4}}), hv({{0, 1}, {1, 2}}),
                                           hv({{0, 1}, {3, 4}})});
    // Degenerate members: the FS indicator of X is its dimension.
    c.nu2["0,0"] = {{1, CycNumber(d)}};
    c.nu2["0,1/2"] = {{1, CycNumber(d)}};
    z2.push_back(std::move(c));
  }
  out.push_back(family_entry("vec-z2", {"Z2", "Vec_Z2"}, family("FR2,0_1", {branch("", z2)}, 16), 4, twists));

  const CycNumber s5 = sqrt_int(5);
  const CycNumber half = CycNumber(make_rational(1, 2));
  out.push_back(family_entry(
      "fib", {"Fib", "Fibonacci"},
      family("FR2,0_2",
             {branch("", {character({1, half * (1 + s5)}, {hv({{0, 1}, {2, 5}}), hv({{0, 1}, {3, 5}})}),
                          character({1, half * (1 - s5)}, {hv({{0, 1}, {1, 5}}), hv({{0, 1}, {4, 5}})})})},
             8),
      5, twists));

  out.push_back(family_entry(
      "vec-z3", {"Z3", "Vec_Z3"},
      family("FR3,2_1",
             {branch("", {character({1, 1, 1}, {hv({{0, 1}, {0, 1}, {0, 1}}), hv({{0, 1}, {1, 3}, {1, 3}}),
                                                 hv({{0, 1}, {2, 3}, {2, 3}})})})},
             6),
      3, twists));

  std::vector<FamilyCharacter> ising;
  for (int s : {1, -1}) {
    std::vector<std::vector<PhaseExponent>> hs;
    for (int k = 1; k < 16; k += 2) hs.push_back(hv({{0, 1}, {1, 2}, {k, 16}}));
    ising.push_back(character({1, 1, sqrt_int(2) * s}, hs));
  }
  FamilyBranch ib = branch("", ising);
  ib.require_nondegenerate = true;
  out.push_back(family_entry("ising", {"Ising"}, family("FR3,0_1", {ib}, 32), 16, twists));

  // Rep(S3): nonsymmetric branch with S~ pinned by the braided structure of
  // the Z/2 subcategory; symmetric branch solved in symmetric mode.
  std::vector<FamilyCharacter> nonsym, sym;
  for (int d : {2, -1}) {
    FamilyCharacter c = character({1, 1, d}, {});
    if (d == 2) c.h = {hv({{0, 1}, {0, 1}, {1, 3}}), hv({{0, 1}, {0, 1}, {2, 3}})};
    c.pins = {{1, 1, CycNumber(1)}, {1, 2, CycNumber(d)}, {2, 2, CycNumber(-2)}};
    c.nu2[""] = {{1, CycNumber(1)}};
    nonsym.push_back(std::move(c));
    FamilyCharacter t = character({1, 1, d}, {hv({{0, 1}, {0, 1}, {0, 1}})});
    t.nu2[""] = {{1, CycNumber(1)}};
    sym.push_back(std::move(t));
  }
  out.push_back(family_entry(
      "rep-s3", {"Rep(S3)", "RepS3"},
      family("FR3,0_2", {branch("nonsym", nonsym), branch("sym", sym, ConformalMode::kSymmetric)}, 8), 3, twists));

  // psu(2)_5: quantum dimensions written with c_k = 2cos(2 pi k / 7).
  out.push_back(family_entry(
      "psu25", {"psu(2)_5", "psu(2)5"},
      family("FR3,0_3",
             {branch("", {character({1, two_cos(7, 2) * -1, 1 + two_cos(7, 3)},
                                    {hv({{0, 1}, {3, 7}, {1, 7}}), hv({{0, 1}, {4, 7}, {6, 7}})}),
                          character({1, two_cos(7, 1) * -1, 1 + two_cos(7, 2)},
                                    {hv({{0, 1}, {2, 7}, {3, 7}}), hv({{0, 1}, {5, 7}, {4, 7}})}),
                          character({1, two_cos(7, 3) * -1, 1 + two_cos(7, 1)},
                                    {hv({{0, 1}, {1, 7}, {5, 7}}), hv({{0, 1}, {6, 7}, {2, 7}})})})},
             12),
      7, twists));
  return out;
}

CatalogEntry mfc_entry(std::string id, std::string ring, std::vector<CycNumber> dims, std::vector<PhaseExponent> h,
                       int d_sign, int conductor, std::string provenance) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = EntryKind::kMfcReference;
  e.provenance = std::move(provenance);
  e.conductor = conductor;
  e.libraries = {"mfc"};
  e.payload = MfcReference{std::move(ring), std::move(dims), std::move(h), d_sign};
  return e;
}

// Keeps only entries whose data is nondegenerate.
void push_if_modular(std::vector<CatalogEntry>& out, const std::vector<CatalogEntry>& ring_entries, CatalogEntry e) {
  const auto& ref = std::get<MfcReference>(e.payload);
  PreModularCategory cat;
  for (const auto& r : ring_entries)
    if (r.id == ref.ring) cat.ring = std::get<FusionRing>(r.payload);
  cat.dims.dims = ref.dims;
  cat.h = ref.h;
  cat.d_sign = ref.d_sign;
  if (validate_category(cat).empty() && is_modular(cat)) out.push_back(std::move(e));
}

std::string sign_tag(int s) { return s > 0 ? "+" : "-"; }

std::vector<CatalogEntry> mfc_references(const std::vector<CatalogEntry>& ring_entries) {
  std::vector<CatalogEntry> out;
  const std::string pointed = "pointed modular data from a nondegenerate quadratic form";
  for (int s : {1, -1}) {
    for (int a = 0; a < 8; ++a) {
      std::vector<PhaseExponent> h;
      for (int x = 0; x < 4; ++x) h.emplace_back(a * x * x, 8);
      push_if_modular(out, ring_entries,
                      mfc_entry("mfc:Z4,q=" + std::to_string(a) + "/8,D=" + sign_tag(s), "FR4,2_1", {1, 1, 1, 1}, h, s,
                                8, pointed));
    }
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b)
        for (int c = 0; c < 2; ++c) {
          const std::vector<PhaseExponent> h{{0, 1}, {a, 4}, {b, 4}, PhaseExponent(a + b + 2 * c, 4)};
          push_if_modular(out, ring_entries,
                          mfc_entry("mfc:Z2xZ2,q=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + "),D=" + sign_tag(s),
                                    "FR4,0_1", {1, 1, 1, 1}, h, s, 4, pointed));
        }
  }

  const std::string product = "Deligne product of Fibonacci and rank-2 pointed modular data";
  const CycNumber s5 = sqrt_int(5);
  const CycNumber half = CycNumber(make_rational(1, 2));
  const std::vector<std::pair<CycNumber, std::vector<int>>> fib{{half * (1 + s5), {2, 3}}, {half * (1 - s5), {1, 4}}};
  for (int s : {1, -1})
    for (const auto& [phi, hxs] : fib)
      for (int hx : hxs)
        for (int dz : {1, -1})
          for (int hz : {1, 3}) {
            const std::vector<PhaseExponent> h{{0, 1}, {hx, 5}, {hz, 4}, PhaseExponent(hx, 5) + PhaseExponent(hz, 4)};
            push_if_modular(out, ring_entries,
                            mfc_entry("mfc:FibxZ2,dX=" + to_pretty_string(phi) + ",hX=" + std::to_string(hx) +
                                          "/5,dZ=" + std::to_string(dz) + ",hZ=" + std::to_string(hz) +
                                          "/4,D=" + sign_tag(s),
                                      "Fib*Z2", {1, phi, dz, phi * dz}, h, s, 20, product));
          }
  return out;
}

CatalogEntry certificate(std::string id, std::string fam, std::string br, std::vector<int> n,
                         std::vector<std::tuple<int, int, int>> channels, std::optional<std::vector<CycNumber>> dims,
                         std::optional<std::vector<PhaseExponent>> h, std::string provenance) {
  Certificate c;
  c.id = id;
  c.family = std::move(fam);
  c.branch = std::move(br);
  c.n = std::move(n);
  c.dims = std::move(dims);
  c.h = std::move(h);
  for (const auto& ch : channels) c.r[ch] = CycNumber(1);
  c.provenance = provenance;
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = EntryKind::kCertificate;
  e.provenance = std::move(provenance);
  e.libraries = {"certificates"};
  e.payload = std::move(c);
  return e;
}

std::vector<CatalogEntry> certificates() {
  std::vector<CatalogEntry> out;
  out.push_back(certificate("cert:vec-z3-regular", "vec-z3", "", {1, 1, 1},
                            {{1, 1, 2}, {1, 2, 0}, {2, 1, 0}, {2, 2, 1}}, std::nullopt,
                            hv({{0, 1}, {0, 1}, {0, 1}}), "function algebra of Z/3 in the trivially braided Vec_Z3"));
  out.push_back(certificate("cert:rep-s3-1+Y", "rep-s3", "sym", {1, 0, 1}, {{2, 2, 0}, {2, 2, 1}, {2, 2, 2}},
                            std::nullopt, std::nullopt, "function algebra on S3/Z2 with trivial symmetric braiding"));
  out.push_back(certificate("cert:rep-s3-regular", "rep-s3", "sym", {1, 1, 2},
                            {{1, 1, 0}, {1, 2, 2}, {2, 1, 2}, {2, 2, 0}, {2, 2, 1}, {2, 2, 2}},
                            std::vector<CycNumber>{1, 1, 2}, std::nullopt,
                            "regular algebra of Rep(S3) with trivial symmetric braiding"));
  return out;
}

}  // namespace

std::vector<CatalogEntry> builtin_entries() {
  std::vector<CatalogEntry> out = rings();
  const std::vector<CatalogEntry> ring_entries = out;
  for (auto& e : families()) out.push_back(std::move(e));
  for (auto& e : mfc_references(ring_entries)) out.push_back(std::move(e));
  for (auto& e : certificates()) out.push_back(std::move(e));
  return out;
}

const Catalog& builtin_catalog() {
  static const Catalog catalog(builtin_entries());
  return catalog;
}

}  // namespace etale
