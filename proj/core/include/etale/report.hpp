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

#include "etale/catalog.hpp"
#include "etale/etale.hpp"

namespace etale {

/// Number formatting for reports; float_digits > 0 adds a decimal rendering.
struct ReportStyle {
  int float_digits = 0;
};

std::string format_number(const CycNumber& x, const ReportStyle& style = {});

/// Display name of B_A for a verdict: "B" for the trivial algebra, otherwise
/// the first alias of the matched ring.
std::string target_name(const Catalog& catalog, const AlgebraCandidate& cand, const Verdict& v);

std::string report_markdown(const Catalog& catalog, const ClassificationReport& report, const ReportStyle& style = {});
std::string report_json(const Catalog& catalog, const std::vector<ClassificationReport>& reports,
                        const ReportStyle& style = {});
std::string report_csv(const Catalog& catalog, const std::vector<ClassificationReport>& reports);

/// One row per family: completely anisotropic verdict with exceptions listed.
std::string summary_markdown(const Catalog& catalog, const std::vector<ClassificationReport>& reports);

/// Parameters of a dataset rendered "dX=1,hX=0" (the D sign omitted).
std::string dataset_label(const ClassificationReport& report);

}  // namespace etale
