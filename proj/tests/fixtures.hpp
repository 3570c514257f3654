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

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "etale/catalog.hpp"

namespace fixtures {

inline const std::vector<etale::PreModularCategory>& family(const std::string& id) {
  static std::map<std::string, std::vector<etale::PreModularCategory>> cache;
  auto it = cache.find(id);
  if (it == cache.end()) {
    const auto& catalog = etale::builtin_catalog();
    it = cache.emplace(id, etale::expand_family(catalog, *catalog.find_family(id))).first;
  }
  return it->second;
}

inline std::vector<etale::PreModularCategory> all_datasets() {
  std::vector<etale::PreModularCategory> out;
  for (const auto* f : etale::builtin_catalog().families())
    for (const auto& c : family(f->id)) out.push_back(c);
  return out;
}

// First dataset of the family whose id contains every fragment.
inline const etale::PreModularCategory& dataset(const std::string& fam, const std::vector<std::string>& fragments) {
  for (const auto& c : family(fam)) {
    std::string key = "," + c.id + ",";
    std::replace(key.begin(), key.end(), ':', ',');
    bool ok = true;
    for (const auto& f : fragments) ok &= key.find("," + f + ",") != std::string::npos;
    if (ok) return c;
  }
  throw std::runtime_error("no dataset in " + fam);
}

inline const etale::FusionRing& ring(const std::string& name) { return *etale::builtin_catalog().find_ring(name); }

}  // namespace fixtures
