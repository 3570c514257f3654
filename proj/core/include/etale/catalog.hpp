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
#include <variant>
#include <vector>

#include "etale/etale.hpp"

namespace etale {

/// One character of a family together with its admissible twists.
struct FamilyCharacter {
  std::vector<CycNumber> dims;
  /// Declared twist vectors; expand_family checks them against the solver.
  std::vector<std::vector<PhaseExponent>> h;
  std::vector<PinnedEntry> pins;
  /// Frobenius-Schur indicators for degenerate datasets, keyed by
  /// twist vector string ("" applies to all).
  std::map<std::string, std::map<int, CycNumber>> nu2;
};

struct FamilyBranch {
  std::string name;
  ConformalMode mode = ConformalMode::kGeneral;
  bool require_nondegenerate = false;
  std::vector<FamilyCharacter> characters;
};

struct PremodularFamily {
  std::string ring;
  std::vector<FamilyBranch> branches;
  std::vector<int> d_signs{1, -1};
  int expected_count = 0;
};

/// Reference modular data used for central-charge matching.
struct MfcReference {
  std::string ring;
  std::vector<CycNumber> dims;
  std::vector<PhaseExponent> h;
  int d_sign = 1;
};

enum class EntryKind { kFusionRing, kPremodularFamily, kMfcReference, kCertificate };

std::string to_string(EntryKind kind);

struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::kFusionRing;
  std::vector<std::string> aliases;
  std::string provenance;
  int conductor = 1;
  /// Tags such as "module-rings" (candidate K(B_A) library).
  std::vector<std::string> libraries;
  std::variant<FusionRing, PremodularFamily, MfcReference, Certificate> payload;
};

class Catalog {
 public:
  Catalog() = default;
  /// Validates every entry; throws ValidationError naming the first bad id.
  explicit Catalog(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;
  const FusionRing* find_ring(const std::string& name) const;
  const CatalogEntry* find_family(const std::string& name) const;
  std::vector<const CatalogEntry*> families() const;

  /// Rings tagged "module-rings", reference MFCs and modular family members,
  /// and certificates.
  Library library() const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Built-in data shipped with the library.
const Catalog& builtin_catalog();
std::vector<CatalogEntry> builtin_entries();

/// Parses the JSON catalog format; ParseError on malformed JSON.
Catalog parse_catalog(const std::string& json);
Catalog load_catalog(const std::string& path);
std::string serialize_catalog(const Catalog& catalog);

/// Every dataset of a family: branch x character x twist vector x sign of D.
/// Throws ExpansionMismatch when the declared twists differ from
/// solve_conformal_dimensions at the given bound.
std::vector<PreModularCategory> expand_family(const Catalog& catalog, const CatalogEntry& family, int bound = 60);

/// Datasets of a reference MFC entry.
PreModularCategory mfc_dataset(const Catalog& catalog, const CatalogEntry& entry);

}  // namespace etale
