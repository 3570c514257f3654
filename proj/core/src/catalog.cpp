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

#include "etale/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "etale/errors.hpp"
#include <nlohmann/json.hpp>

namespace etale {
namespace {

using nlohmann::ordered_json;
using json = ordered_json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string h_key(const std::vector<PhaseExponent>& h) {
  std::string out;
  for (const auto& x : h) out += (out.empty() ? "" : ",") + to_string(x);
  return out;
}

// ---- JSON encoding -------------------------------------------------------

json cyc_to_json(const CycNumber& x) {
  json coeffs = json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(to_string(c));
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycNumber cyc_from_json(const json& j) {
  const int n = j.at("conductor").get<int>();
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(parse_rational(v.get<std::string>()));
  return CycNumber(n, std::move(c));
}

json cyc_list(const std::vector<CycNumber>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(cyc_to_json(x));
  return out;
}

std::vector<CycNumber> cyc_list_from(const json& j) {
  std::vector<CycNumber> out;
  for (const auto& x : j) out.push_back(cyc_from_json(x));
  return out;
}

json phases(const std::vector<PhaseExponent>& h) {
  json out = json::array();
  for (const auto& x : h) out.push_back(to_string(x));
  return out;
}

std::vector<PhaseExponent> phases_from(const json& j) {
  std::vector<PhaseExponent> out;
  for (const auto& x : j) out.push_back(parse_phase(x.get<std::string>()));
  return out;
}

json nu2_to_json(const std::map<int, CycNumber>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = cyc_to_json(v);
  return out;
}

std::map<int, CycNumber> nu2_from(const json& j) {
  std::map<int, CycNumber> out;
  for (const auto& [k, v] : j.items()) out[std::stoi(k)] = cyc_from_json(v);
  return out;
}

json ring_to_json(const FusionRing& r) {
  return {{"labels", r.labels}, {"fusion", r.n}};
}

FusionRing ring_from_json(const std::string& id, int conductor, const json& j) {
  return make_ring(id, j.at("labels").get<std::vector<std::string>>(),
                   j.at("fusion").get<std::vector<std::vector<std::vector<int>>>>(), conductor);
}

std::string mode_name(ConformalMode m) { return m == ConformalMode::kSymmetric ? "symmetric" : "general"; }

ConformalMode mode_from(const std::string& s) {
  if (s == "symmetric") return ConformalMode::kSymmetric;
  if (s == "general") return ConformalMode::kGeneral;
  throw ParseError("unknown conformal mode " + s);
}

json family_to_json(const PremodularFamily& f) {
  json branches = json::array();
  for (const auto& b : f.branches) {
    json chars = json::array();
    for (const auto& c : b.characters) {
      json hs = json::array();
      for (const auto& h : c.h) hs.push_back(phases(h));
      json pins = json::array();
      for (const auto& p : c.pins) pins.push_back({{"i", p.i}, {"j", p.j}, {"value", cyc_to_json(p.value)}});
      json nu = json::object();
      for (const auto& [key, m] : c.nu2) nu[key] = nu2_to_json(m);
      chars.push_back({{"dims", cyc_list(c.dims)}, {"h", hs}, {"pins", pins}, {"nu2", nu}});
    }
    branches.push_back({{"name", b.name},
                        {"mode", mode_name(b.mode)},
                        {"require_nondegenerate", b.require_nondegenerate},
                        {"characters", chars}});
  }
  return {{"ring", f.ring}, {"d_signs", f.d_signs}, {"expected_count", f.expected_count}, {"branches", branches}};
}

PremodularFamily family_from_json(const json& j) {
  PremodularFamily f;
  f.ring = j.at("ring").get<std::string>();
  f.d_signs = j.at("d_signs").get<std::vector<int>>();
  f.expected_count = j.at("expected_count").get<int>();
  for (const auto& jb : j.at("branches")) {
    FamilyBranch b;
    b.name = jb.at("name").get<std::string>();
    b.mode = mode_from(jb.at("mode").get<std::string>());
    b.require_nondegenerate = jb.at("require_nondegenerate").get<bool>();
    for (const auto& jc : jb.at("characters")) {
      FamilyCharacter c;
      c.dims = cyc_list_from(jc.at("dims"));
      for (const auto& h : jc.at("h")) c.h.push_back(phases_from(h));
      for (const auto& p : jc.at("pins"))
        c.pins.push_back({p.at("i").get<int>(), p.at("j").get<int>(), cyc_from_json(p.at("value"))});
      for (const auto& [key, m] : jc.at("nu2").items()) c.nu2[key] = nu2_from(m);
      b.characters.push_back(std::move(c));
    }
    f.branches.push_back(std::move(b));
  }
  return f;
}

json mfc_to_json(const MfcReference& m) {
  return {{"ring", m.ring}, {"dims", cyc_list(m.dims)}, {"h", phases(m.h)}, {"d_sign", m.d_sign}};
}

MfcReference mfc_from_json(const json& j) {
  return {j.at("ring").get<std::string>(), cyc_list_from(j.at("dims")), phases_from(j.at("h")),
          j.at("d_sign").get<int>()};
}

json cert_to_json(const Certificate& c) {
  json r = json::array();
  for (const auto& [key, v] : c.r) {
    auto [i, j, k] = key;
    r.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", cyc_to_json(v)}});
  }
  json out = {{"family", c.family}, {"branch", c.branch}};
  if (c.h) out["h"] = phases(*c.h);
  if (c.dims) out["dims"] = cyc_list(*c.dims);
  out["n"] = c.n;
  out["r"] = r;
  return out;
}

Certificate cert_from_json(const std::string& id, const std::string& provenance, const json& j) {
  Certificate c;
  c.id = id;
  c.provenance = provenance;
  c.family = j.at("family").get<std::string>();
  c.branch = j.at("branch").get<std::string>();
  if (j.contains("h")) c.h = phases_from(j.at("h"));
  if (j.contains("dims")) c.dims = cyc_list_from(j.at("dims"));
  c.n = j.at("n").get<std::vector<int>>();
  for (const auto& e : j.at("r"))
    c.r[{e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>()}] = cyc_from_json(e.at("value"));
  return c;
}

EntryKind kind_from(const std::string& s) {
  if (s == "fusion_ring") return EntryKind::kFusionRing;
  if (s == "premodular_family") return EntryKind::kPremodularFamily;
  if (s == "mfc_reference") return EntryKind::kMfcReference;
  if (s == "certificate") return EntryKind::kCertificate;
  throw ParseError("unknown entry kind " + s);
}

}  // namespace

std::string to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::kFusionRing: return "fusion_ring";
    case EntryKind::kPremodularFamily: return "premodular_family";
    case EntryKind::kMfcReference: return "mfc_reference";
    case EntryKind::kCertificate: return "certificate";
  }
  return "?";
}

std::string serialize_catalog(const Catalog& catalog) {
  json entries = json::array();
  for (const auto& e : catalog.entries()) {
    json payload;
    switch (e.kind) {
      case EntryKind::kFusionRing: payload = ring_to_json(std::get<FusionRing>(e.payload)); break;
      case EntryKind::kPremodularFamily: payload = family_to_json(std::get<PremodularFamily>(e.payload)); break;
      case EntryKind::kMfcReference: payload = mfc_to_json(std::get<MfcReference>(e.payload)); break;
      case EntryKind::kCertificate: payload = cert_to_json(std::get<Certificate>(e.payload)); break;
    }
    entries.push_back({{"id", e.id},
                       {"kind", to_string(e.kind)},
                       {"aliases", e.aliases},
                       {"provenance", e.provenance},
                       {"conductor", e.conductor},
                       {"libraries", e.libraries},
                       {"payload", payload}});
  }
  json doc = {{"schema", "etale-catalog"}, {"version", 1}, {"entries", entries}};
  return doc.dump(1) + "\n";
}

Catalog parse_catalog(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  std::vector<CatalogEntry> entries;
  try {
    if (!doc.is_object() || doc.value("schema", "") != "etale-catalog") throw ParseError("not an etale catalog");
    if (doc.at("version").get<int>() != 1) throw ParseError("unsupported catalog version");
    for (const auto& je : doc.at("entries")) {
      CatalogEntry e;
      e.id = je.at("id").get<std::string>();
      e.kind = kind_from(je.at("kind").get<std::string>());
      e.aliases = je.at("aliases").get<std::vector<std::string>>();
      e.provenance = je.at("provenance").get<std::string>();
      e.conductor = je.at("conductor").get<int>();
      e.libraries = je.at("libraries").get<std::vector<std::string>>();
      const json& p = je.at("payload");
      try {
        switch (e.kind) {
          case EntryKind::kFusionRing: e.payload = ring_from_json(e.id, e.conductor, p); break;
          case EntryKind::kPremodularFamily: e.payload = family_from_json(p); break;
          case EntryKind::kMfcReference: e.payload = mfc_from_json(p); break;
          case EntryKind::kCertificate: e.payload = cert_from_json(e.id, e.provenance, p); break;
        }
      } catch (const std::invalid_argument& ex) {
        throw ValidationError(e.id, ex.what());
      }
      entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed catalog: ") + e.what());
  }
  return Catalog(std::move(entries));
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

namespace {

std::vector<std::pair<std::string, std::string>> dataset_params(const FusionRing& ring, const std::string& branch,
                                                                const std::vector<CycNumber>& dims,
                                                                const std::vector<PhaseExponent>& h, int sign) {
  std::vector<std::pair<std::string, std::string>> p;
  if (!branch.empty()) p.push_back({"branch", branch});
  for (int i = 1; i < ring.rank(); ++i) p.push_back({"d" + ring.labels[i], to_pretty_string(dims[i])});
  for (int i = 1; i < ring.rank(); ++i) p.push_back({"h" + ring.labels[i], to_string(h[i])});
  p.push_back({"D", sign > 0 ? "+" : "-"});
  return p;
}

std::string dataset_id(const std::string& family, const std::vector<std::pair<std::string, std::string>>& params) {
  std::string id = family + ":";
  bool first = true;
  for (const auto& [k, v] : params) {
    id += (first ? "" : ",") + (k == "branch" ? v : k + "=" + v);
    first = false;
  }
  return id;
}

void check(bool ok, const std::string& id, const std::string& what) {
  if (!ok) throw ValidationError(id, what);
}

}  // namespace

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> ids;
  for (const auto& e : entries_) check(ids.insert(e.id).second, e.id, "duplicate id");
  for (const auto& e : entries_) {
    check(e.conductor >= 1, e.id, "conductor must be positive");
    if (e.kind != EntryKind::kFusionRing) continue;
    const auto& ring = std::get<FusionRing>(e.payload);
    const auto problems = validate_ring(ring);
    check(problems.empty(), e.id, problems.empty() ? "" : problems.front());
    fp_dims(ring);  // throws ValidationError when the conductor is wrong
  }
  for (const auto& e : entries_) {
    switch (e.kind) {
      case EntryKind::kFusionRing: break;
      case EntryKind::kPremodularFamily: {
        const auto& f = std::get<PremodularFamily>(e.payload);
        const FusionRing* ring = find_ring(f.ring);
        check(ring != nullptr, e.id, "unknown ring " + f.ring);
        int count = 0;
        for (const auto& b : f.branches)
          for (const auto& c : b.characters) {
            check(static_cast<int>(c.dims.size()) == ring->rank() && is_character(*ring, c.dims), e.id,
                  "dimensions are not a character of " + f.ring);
            for (const auto& h : c.h) {
              PreModularCategory cat;
              cat.ring = *ring;
              cat.dims.dims = c.dims;
              cat.h = h;
              const auto problems = validate_category(cat);
              check(problems.empty(), e.id, problems.empty() ? "" : problems.front());
            }
            count += static_cast<int>(c.h.size() * f.d_signs.size());
          }
        for (int s : f.d_signs) check(s == 1 || s == -1, e.id, "sign of D must be +1 or -1");
        check(count == f.expected_count, e.id,
              "family expands to " + std::to_string(count) + " datasets, expected " + std::to_string(f.expected_count));
        break;
      }
      case EntryKind::kMfcReference: {
        const PreModularCategory cat = mfc_dataset(*this, e);
        const auto problems = validate_category(cat);
        check(problems.empty(), e.id, problems.empty() ? "" : problems.front());
        check(is_modular(cat), e.id, "reference data is not modular");
        break;
      }
      case EntryKind::kCertificate: {
        const auto& c = std::get<Certificate>(e.payload);
        const CatalogEntry* fam = find_family(c.family);
        check(fam != nullptr, e.id, "unknown family " + c.family);
        const FusionRing* ring = find_ring(std::get<PremodularFamily>(fam->payload).ring);
        check(static_cast<int>(c.n.size()) == ring->rank(), e.id, "multiplicity vector has wrong length");
        for (const auto& [key, v] : c.r) {
          auto [i, j, k] = key;
          check(std::max({i, j, k}) < ring->rank() && std::min({i, j, k}) >= 0, e.id, "channel out of range");
        }
        break;
      }
    }
  }
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  const std::string key = lower(name);
  for (const auto& e : entries_)
    if (lower(e.id) == key) return &e;
  for (const auto& e : entries_)
    for (const auto& a : e.aliases)
      if (lower(a) == key) return &e;
  return nullptr;
}

const FusionRing* Catalog::find_ring(const std::string& name) const {
  const std::string key = lower(name);
  for (const auto& e : entries_)
    if (e.kind == EntryKind::kFusionRing && lower(e.id) == key) return &std::get<FusionRing>(e.payload);
  for (const auto& e : entries_)
    if (e.kind == EntryKind::kFusionRing)
      for (const auto& a : e.aliases)
        if (lower(a) == key) return &std::get<FusionRing>(e.payload);
  return nullptr;
}

const CatalogEntry* Catalog::find_family(const std::string& name) const {
  const std::string key = lower(name);
  for (const auto& e : entries_) {
    if (e.kind != EntryKind::kPremodularFamily) continue;
    if (lower(e.id) == key) return &e;
    for (const auto& a : e.aliases)
      if (lower(a) == key) return &e;
  }
  return nullptr;
}

std::vector<const CatalogEntry*> Catalog::families() const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.kind == EntryKind::kPremodularFamily) out.push_back(&e);
  return out;
}

PreModularCategory mfc_dataset(const Catalog& catalog, const CatalogEntry& entry) {
  const auto& m = std::get<MfcReference>(entry.payload);
  const FusionRing* ring = catalog.find_ring(m.ring);
  if (!ring) throw ValidationError(entry.id, "unknown ring " + m.ring);
  PreModularCategory cat;
  cat.id = entry.id;
  cat.family = entry.id;
  cat.ring = *ring;
  cat.dims.dims = m.dims;
  cat.h = m.h;
  cat.d_sign = m.d_sign;
  return cat;
}

namespace {

std::vector<PreModularCategory> expand(const Catalog& catalog, const CatalogEntry& entry, int bound, bool cross_check) {
  const auto& f = std::get<PremodularFamily>(entry.payload);
  const FusionRing& ring = *catalog.find_ring(f.ring);
  std::vector<PreModularCategory> out;
  for (const auto& b : f.branches)
    for (const auto& c : b.characters) {
      if (cross_check) {
        ConformalOptions opt;
        opt.bound = bound;
        opt.mode = b.mode;
        opt.pins = c.pins;
        opt.require_nondegenerate = b.require_nondegenerate;
        const auto solved = solve_conformal_dimensions(ring, {c.dims}, opt);
        if (solved != c.h) {
          std::string got;
          for (const auto& h : solved) got += " (" + h_key(h) + ")";
          throw ExpansionMismatch(entry.id + ": declared twists differ from the solver at bound " +
                                  std::to_string(bound) + "; solver gives" + (got.empty() ? " nothing" : got));
        }
      }
      for (const auto& h : c.h)
        for (int sign : f.d_signs) {
          PreModularCategory cat;
          cat.family = entry.id;
          cat.branch = b.name;
          cat.ring = ring;
          cat.dims.dims = c.dims;
          cat.h = h;
          cat.d_sign = sign;
          for (const std::string& key : {std::string(), h_key(h)}) {
            auto it = c.nu2.find(key);
            if (it != c.nu2.end()) cat.nu2.insert(it->second.begin(), it->second.end());
          }
          cat.params = dataset_params(ring, b.name, c.dims, h, sign);
          cat.id = dataset_id(entry.id, cat.params);
          out.push_back(std::move(cat));
        }
    }
  return out;
}

}  // namespace

std::vector<PreModularCategory> expand_family(const Catalog& catalog, const CatalogEntry& family, int bound) {
  if (family.kind != EntryKind::kPremodularFamily) throw std::invalid_argument(family.id + " is not a family");
  return expand(catalog, family, bound, true);
}

Library Catalog::library() const {
  Library lib;
  for (const auto& e : entries_) {
    switch (e.kind) {
      case EntryKind::kFusionRing:
        if (std::find(e.libraries.begin(), e.libraries.end(), "module-rings") != e.libraries.end())
          lib.rings.push_back(std::get<FusionRing>(e.payload));
        break;
      case EntryKind::kMfcReference: lib.mfcs.push_back(mfc_dataset(*this, e)); break;
      case EntryKind::kCertificate: lib.certificates.push_back(std::get<Certificate>(e.payload)); break;
      case EntryKind::kPremodularFamily:
        for (auto& cat : expand(*this, e, 0, false))
          if (is_modular(cat)) lib.mfcs.push_back(std::move(cat));
        break;
    }
  }
  return lib;
}

}  // namespace etale
