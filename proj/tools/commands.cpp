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

#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "etale/catalog.hpp"
#include "etale/errors.hpp"
#include "etale/nimrep.hpp"
#include "etale/report.hpp"

namespace etale::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Catalog& catalog_for(const RunConfig& config) {
  static std::map<std::string, Catalog> loaded;
  std::string path = config.catalog_path;
  if (path.empty())
    if (const char* env = std::getenv("ETALE_CATALOG")) path = env;
  if (path.empty()) return builtin_catalog();
  auto it = loaded.find(path);
  if (it == loaded.end()) it = loaded.emplace(path, load_catalog(path)).first;
  return it->second;
}

std::vector<std::pair<std::string, std::string>> split_params(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + item + "' is not of the form key=value");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

// "h" matches when every nontrivial twist equals the value.
bool matches(const PreModularCategory& cat, const std::vector<std::pair<std::string, std::string>>& wanted) {
  for (const auto& [key, value] : wanted) {
    if (key == "h") {
      for (int i = 1; i < cat.rank(); ++i)
        if (to_string(cat.h[i]) != value) return false;
      continue;
    }
    bool found = false;
    for (const auto& [k, v] : cat.params) found |= k == key && v == value;
    if (!found) return false;
  }
  return true;
}

std::vector<PreModularCategory> select(const Catalog& catalog, const RunConfig& config) {
  std::vector<PreModularCategory> out;
  if (!config.category.empty()) {
    const CatalogEntry* e = catalog.find(config.category);
    if (e && e->kind == EntryKind::kMfcReference) return {mfc_dataset(catalog, *e)};
    for (const CatalogEntry* f : catalog.families())
      for (auto& cat : expand_family(catalog, *f, config.bound))
        if (cat.id == config.category) out.push_back(std::move(cat));
    if (out.empty()) throw UsageError("unknown category '" + config.category + "'");
    return out;
  }
  std::vector<const CatalogEntry*> fams;
  if (config.family.empty() || config.family == "all") {
    fams = catalog.families();
  } else {
    const CatalogEntry* f = catalog.find_family(config.family);
    if (!f) throw UsageError("unknown family '" + config.family + "'");
    fams.push_back(f);
  }
  const auto wanted = split_params(config.params);
  for (const CatalogEntry* f : fams)
    for (auto& cat : expand_family(catalog, *f, config.bound)) {
      if (!config.branch.empty() && cat.branch != config.branch) continue;
      if (matches(cat, wanted)) out.push_back(std::move(cat));
    }
  if (out.empty()) throw UsageError("selector matches no dataset");
  return out;
}

const FusionRing& ring_for(const Catalog& catalog, const std::string& name) {
  const FusionRing* ring = catalog.find_ring(name);
  if (!ring) throw UsageError("unknown ring '" + name + "'");
  return *ring;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.bound <= 0) throw UsageError("--bound must be positive");
    const Catalog& catalog = catalog_for(config);
    const std::vector<PreModularCategory> datasets = select(catalog, config);
    const Library library = catalog.library();
    ClassifyOptions options;
    options.strict_monodromy = config.strict_monodromy;
    options.bound = config.bound;

    // One task per dataset, collected in catalog order.
    const unsigned jobs = config.jobs > 0 ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<ClassificationReport> reports(datasets.size());
    for (size_t start = 0; start < datasets.size(); start += jobs) {
      std::vector<std::future<ClassificationReport>> tasks;
      for (size_t i = start; i < std::min(datasets.size(), start + jobs); ++i)
        tasks.push_back(std::async(std::launch::async, [&, i] { return classify(datasets[i], library, options); }));
      for (size_t i = 0; i < tasks.size(); ++i) reports[start + i] = tasks[i].get();
    }

    ReportStyle style;
    style.float_digits = config.float_digits;
    if (config.summary) {
      out << summary_markdown(catalog, reports);
    } else if (config.format == "json") {
      out << report_json(catalog, reports, style);
    } else if (config.format == "csv") {
      out << report_csv(catalog, reports);
    } else {
      for (const auto& r : reports) out << report_markdown(catalog, r, style);
    }

    bool inconclusive = false;
    for (const auto& r : reports)
      for (const auto& [c, v] : r.candidates) inconclusive |= v.status == Status::kInconclusive;
    if (inconclusive) err << "warning: some candidates are inconclusive\n";
    return inconclusive && config.strict ? kExitInconclusive : kExitOk;
  });
}

int cmd_nimrep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.dimension <= 0) throw UsageError("--dim must be positive");
    const Catalog& catalog = catalog_for(config);
    const FusionRing& ring = ring_for(catalog, config.ring);
    const auto reps = enumerate_nimreps(ring, config.dimension);
    const auto bounds = nimrep_entry_bounds(ring);
    if (config.format == "json") {
      json arr = json::array();
      for (const auto& rep : reps) {
        json ms = json::object();
        for (int i = 0; i < ring.rank(); ++i) ms[ring.labels[i]] = rep.m[i];
        arr.push_back({{"dimension", rep.dim},
                       {"matrices", ms},
                       {"canonical", rep == canonicalize(rep)},
                       {"indecomposable", rep.indecomposable},
                       {"internal_hom", internal_hom_candidates(rep)}});
      }
      out << json({{"ring", ring.id}, {"dimension", config.dimension}, {"entry_bounds", bounds}, {"nimreps", arr}}).dump(2) << "\n";
      return kExitOk;
    }
    out << "ring " << ring.id << ", dimension " << config.dimension << "\nentry bounds:";
    for (int i = 1; i < ring.rank(); ++i) out << " " << ring.labels[i] << "<=" << bounds[i];
    out << "\n";
    if (reps.empty()) {
      out << "no NIM-reps\n";
      return kExitOk;
    }
    for (size_t k = 0; k < reps.size(); ++k) {
      out << "\nNIM-rep " << k + 1 << (reps[k].indecomposable ? "" : " (decomposable)") << "\n";
      out << to_string(ring, reps[k]);
      out << "internal Hom candidates:";
      FusionRing labels = ring;
      for (const auto& n : internal_hom_candidates(reps[k])) out << " " << algebra_label(labels, n);
      out << "\n";
    }
    return kExitOk;
  });
}

int cmd_confdims(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.bound <= 0) throw UsageError("--bound must be positive");
    const Catalog& catalog = catalog_for(config);
    const FusionRing& ring = ring_for(catalog, config.ring);
    const auto chars = dimension_characters(ring);
    if (config.character < 0 || config.character >= static_cast<int>(chars.size()))
      throw UsageError("character index out of range (ring has " + std::to_string(chars.size()) + ")");
    ConformalOptions opt;
    opt.bound = config.bound;
    if (config.mode == "symmetric") opt.mode = ConformalMode::kSymmetric;
    else if (config.mode != "general") throw UsageError("--mode must be general or symmetric");
    opt.require_nondegenerate = config.nondegenerate;
    for (const auto& p : config.pins) {
      int i = 0, j = 0;
      long v = 0;
      char c1 = 0, c2 = 0;
      std::istringstream is(p);
      if (!(is >> i >> c1 >> j >> c2 >> v) || c1 != ',' || c2 != ',')
        throw UsageError("pin '" + p + "' is not of the form i,j,value");
      opt.pins.push_back({i, j, CycNumber(v)});
    }
    const DimensionCharacter& dims = chars[config.character];
    out << "ring " << ring.id << ", character " << config.character << ":";
    for (int i = 0; i < ring.rank(); ++i) out << " d" << ring.labels[i] << "=" << to_pretty_string(dims.dims[i]);
    out << "\nscan bound: " << config.bound << "\n";
    const auto sols = solve_conformal_dimensions(ring, dims, opt);
    if (sols.empty()) out << "no admissible twists\n";
    for (const auto& h : sols) {
      out << "(";
      for (int i = 1; i < ring.rank(); ++i) out << (i > 1 ? "," : "") << to_string(h[i]);
      out << ")\n";
    }
    return kExitOk;
  });
}

int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Catalog& catalog = catalog_for(config);
    if (config.output.empty() || config.output == "dump") {
      out << serialize_catalog(catalog);
      return kExitOk;
    }
    if (config.output == "list") {
      for (const auto& e : catalog.entries()) {
        out << to_string(e.kind) << "\t" << e.id;
        for (const auto& a : e.aliases) out << "\t" << a;
        out << "\n";
      }
      return kExitOk;
    }
    const CatalogEntry* e = catalog.find(config.output);
    if (!e) throw UsageError("unknown catalog entry '" + config.output + "'");
    if (e->kind == EntryKind::kPremodularFamily) {
      for (const auto& cat : expand_family(catalog, *e, config.bound)) out << cat.id << "\n";
    } else if (e->kind == EntryKind::kFusionRing) {
      const FusionRing& ring = std::get<FusionRing>(e->payload);
      out << to_string(ring);
      const auto chars = dimension_characters(ring);
      for (size_t c = 0; c < chars.size(); ++c) {
        out << "  character " << c << ":";
        for (int i = 0; i < ring.rank(); ++i) out << " d" << ring.labels[i] << "=" << to_pretty_string(chars[c].dims[i]);
        out << "\n";
      }
    } else {
      out << e->id << ": " << e->provenance << "\n";
    }
    return kExitOk;
  });
}

}  // namespace etale::cli
