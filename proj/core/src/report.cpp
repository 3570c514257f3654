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

#include "etale/report.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "etale/interval.hpp"

namespace etale {

using json = nlohmann::ordered_json;

std::string format_number(const CycNumber& x, const ReportStyle& style) {
  std::string out = to_pretty_string(x);
  if (style.float_digits > 0 && !x.is_rational() && cyc_real_part_check(x)) {
    const CertifiedInterval iv = cyc_to_float(x, style.float_digits + 2);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", style.float_digits, iv.midpoint());
    out += " ≈ " + std::string(buf);
  }
  return out;
}

std::string target_name(const Catalog& catalog, const AlgebraCandidate& cand, const Verdict& v) {
  if (v.reason == Reason::kTrivialAlgebra) return "B";
  const std::string& id = v.target_ring.empty() ? cand.target_ring : v.target_ring;
  if (id.empty()) return "?";
  const CatalogEntry* e = catalog.find(id);
  if (e && !e->aliases.empty()) return e->aliases.front();
  return id;
}

std::string dataset_label(const ClassificationReport& report) {
  std::string out;
  for (const auto& [k, v] : report.params) {
    if (k == "D" || k == "branch") continue;
    out += (out.empty() ? "" : ",") + k + "=" + v;
  }
  return out;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string algebra(const ClassificationReport& r, const std::vector<int>& n) {
  FusionRing ring;
  ring.labels = r.labels;
  return algebra_label(ring, n);
}

std::string gsd_text(const ClassificationReport& r) {
  std::string out = "{";
  for (size_t i = 0; i < r.gsd.size(); ++i) out += (i ? "," : "") + std::to_string(r.gsd[i]);
  if (r.gsd_open_ended) out += r.gsd.empty() ? "..." : ",...";
  return out + "}";
}

}  // namespace

std::string report_markdown(const Catalog& catalog, const ClassificationReport& r, const ReportStyle& style) {
  std::ostringstream os;
  os << "### " << r.category_id << "\n\n";
  os << "- FPdim: " << format_number(r.fpdim, style) << "\n";
  os << "- modular: " << yes_no(r.modular) << ", symmetric: " << yes_no(r.symmetric) << "\n";
  if (r.modular) os << "- c/8: " << to_string(r.central_charge) << " (mod 1)\n";
  os << "- rank bound r_max: " << r.r_max << "\n";
  os << "- scan bound: " << r.bound << "\n\n";
  os << "| Connected étale algebra A | B_A | rank(B_A) | Lagrangian? |\n";
  os << "|---|---|---|---|\n";
  for (const auto& [c, v] : r.candidates) {
    if (v.status != Status::kEtale) continue;
    os << "| " << algebra(r, c.n) << " | " << target_name(catalog, c, v) << " | "
       << (v.target_rank ? std::to_string(*v.target_rank) : "?") << " | " << (v.lagrangian ? "Yes" : "No") << " |\n";
  }
  os << "\n";
  bool any_inconclusive = false;
  for (const auto& [c, v] : r.candidates) any_inconclusive |= v.status == Status::kInconclusive;
  if (any_inconclusive) {
    os << "Inconclusive:";
    for (const auto& [c, v] : r.candidates)
      if (v.status == Status::kInconclusive) os << " " << algebra(r, c.n);
    os << "\n\n";
  }
  os << "completely anisotropic: " << yes_no(r.completely_anisotropic) << "\n";
  os << "ground state degeneracies: " << gsd_text(r) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "\n";
  return os.str();
}

namespace {

json witnesses_json(const std::vector<Witness>& ws, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& w : ws)
    out.push_back({{"i", labels[w.i]}, {"j", labels[w.j]}, {"k", labels[w.k]}, {"theta", to_string(w.phase)}});
  return out;
}

json report_to_json(const Catalog& catalog, const ClassificationReport& r, const ReportStyle& style) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json rings = json::array();
  for (const auto& m : r.rings) {
    json vecs = json::array();
    for (const auto& v : m.vectors) vecs.push_back(v);
    rings.push_back({{"ring", m.ring_id},
                     {"rank", m.rank},
                     {"ring_fpdim", format_number(m.ring_fpdim, style)},
                     {"required_fpdim", format_number(m.required_fpdim, style)},
                     {"vectors", vecs}});
  }
  json cands = json::array();
  for (const auto& [c, v] : r.candidates) {
    json checks = json::array();
    for (const auto& ch : v.checks)
      checks.push_back(
          {{"test", ch.test}, {"passed", ch.passed}, {"reason", to_string(ch.reason)}, {"detail", ch.detail}});
    json target = nullptr;
    if (v.status == Status::kEtale) target = target_name(catalog, c, v);
    cands.push_back({{"algebra", algebra(r, c.n)},
                     {"n", c.n},
                     {"status", to_string(v.status)},
                     {"reason", to_string(v.reason)},
                     {"target_ring", v.target_ring.empty() ? c.target_ring : v.target_ring},
                     {"identified_by", "fpdim-match"},
                     {"B_A", target},
                     {"rank", v.target_rank ? json(*v.target_rank) : json(nullptr)},
                     {"lagrangian", v.lagrangian},
                     {"checks", checks},
                     {"witnesses", witnesses_json(v.witnesses, r.labels)},
                     {"strict_witnesses", witnesses_json(v.strict_witnesses, r.labels)}});
  }
  json out = {{"id", r.category_id},
              {"family", r.family},
              {"branch", r.branch},
              {"params", params},
              {"labels", r.labels},
              {"fpdim", format_number(r.fpdim, style)},
              {"modular", r.modular},
              {"symmetric", r.symmetric},
              {"central_charge_over_8", r.modular ? json(to_string(r.central_charge)) : json(nullptr)},
              {"r_max", r.r_max},
              {"bound", r.bound},
              {"module_rings", rings},
              {"candidates", cands},
              {"completely_anisotropic", r.completely_anisotropic},
              {"gsd", r.gsd},
              {"gsd_open_ended", r.gsd_open_ended},
              {"notes", r.notes}};
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string report_json(const Catalog& catalog, const std::vector<ClassificationReport>& reports,
                        const ReportStyle& style) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(catalog, r, style));
  json doc = {{"schema", "etale-report"}, {"version", 1}, {"datasets", arr}};
  return doc.dump(2) + "\n";
}

std::string report_csv(const Catalog& catalog, const std::vector<ClassificationReport>& reports) {
  std::ostringstream os;
  os << "dataset,algebra,status,reason,B_A,rank,lagrangian\n";
  for (const auto& r : reports)
    for (const auto& [c, v] : r.candidates) {
      os << csv_field(r.category_id) << "," << csv_field(algebra(r, c.n)) << "," << to_string(v.status) << ","
         << to_string(v.reason) << ","
         << (v.status == Status::kEtale ? csv_field(target_name(catalog, c, v)) : std::string()) << ","
         << (v.target_rank ? std::to_string(*v.target_rank) : std::string()) << "," << (v.lagrangian ? "yes" : "no")
         << "\n";
    }
  return os.str();
}

std::string summary_markdown(const Catalog& catalog, const std::vector<ClassificationReport>& reports) {
  struct Row {
    std::string family;
    int rank = 0;
    int datasets = 0;
    std::vector<std::string> order;
    std::map<std::string, bool> anisotropic;  // by dataset label, D sign folded
  };
  std::vector<Row> rows;
  for (const auto& r : reports) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& row) { return row.family == r.family; });
    if (it == rows.end()) {
      rows.push_back({r.family, static_cast<int>(r.labels.size()), 0, {}, {}});
      it = rows.end() - 1;
    }
    ++it->datasets;
    std::string label = dataset_label(r);
    if (!r.branch.empty()) label = r.branch + (label.empty() ? "" : ":" + label);
    if (!it->anisotropic.count(label)) {
      it->order.push_back(label);
      it->anisotropic[label] = r.completely_anisotropic;
    } else {
      it->anisotropic[label] = it->anisotropic[label] && r.completely_anisotropic;
    }
  }
  std::ostringstream os;
  os << "| rank | B | datasets | results | completely anisotropic? |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    std::vector<std::string> yes, no;
    for (const auto& l : row.order) (row.anisotropic.at(l) ? yes : no).push_back(l);
    std::string verdict;
    if (no.empty()) {
      verdict = "Yes";
    } else if (yes.empty()) {
      verdict = "No";
    } else {
      verdict = "No (";
      for (size_t i = 0; i < no.size(); ++i) verdict += (i ? "; " : "") + no[i];
      verdict += ") / Yes (the others)";
    }
    const CatalogEntry* e = catalog.find_family(row.family);
    const std::string name = e && !e->aliases.empty() ? e->aliases.front() : row.family;
    os << "| " << row.rank << " | " << name << " | " << row.datasets << " | `classify --family " << row.family
       << "` | " << verdict << " |\n";
  }
  return os.str();
}

}  // namespace etale
