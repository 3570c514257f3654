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

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "etale/report.hpp"
#include "fixtures.hpp"

using namespace etale;
using fixtures::dataset;

namespace {

const Library& library() {
  static const Library lib = builtin_catalog().library();
  return lib;
}

}  // namespace

TEST_CASE("markdown table layout") {
  const auto r = classify(dataset("vec-z2", {"dX=1", "hX=0", "D=+"}), library());
  const std::string md = report_markdown(builtin_catalog(), r);
  CHECK(md.find("| Connected étale algebra A | B_A | rank(B_A) | Lagrangian? |") != std::string::npos);
  CHECK(md.find("| 1 | B | 2 | No |") != std::string::npos);
  CHECK(md.find("| 1+X | Vect | 1 | No |") != std::string::npos);
  CHECK(md.find("scan bound: 60") != std::string::npos);
  CHECK(md.find("completely anisotropic: no") != std::string::npos);
}

TEST_CASE("markdown is byte-stable") {
  for (const auto& cat : fixtures::family("rep-s3")) {
    const std::string a = report_markdown(builtin_catalog(), classify(cat, library()));
    const std::string b = report_markdown(builtin_catalog(), classify(cat, library()));
    CHECK(a == b);
  }
}

TEST_CASE("Lagrangian flag in the trivial category") {
  const auto r = classify(dataset("vect", {"D=+"}), library());
  CHECK(report_markdown(builtin_catalog(), r).find("| 1 | B | 1 | Yes |") != std::string::npos);
}

TEST_CASE("JSON report traces every cell") {
  std::vector<ClassificationReport> reports;
  for (const auto& cat : fixtures::family("vec-z3")) reports.push_back(classify(cat, library()));
  const auto doc = nlohmann::json::parse(report_json(builtin_catalog(), reports));
  CHECK(doc.at("schema") == "etale-report");
  REQUIRE(doc.at("datasets").size() == reports.size());
  for (size_t d = 0; d < reports.size(); ++d) {
    const auto& jd = doc.at("datasets")[d];
    CHECK(jd.at("id") == reports[d].category_id);
    CHECK(jd.at("bound") == 60);
    REQUIRE(jd.at("candidates").size() == reports[d].candidates.size());
    for (size_t k = 0; k < reports[d].candidates.size(); ++k) {
      const auto& [c, v] = reports[d].candidates[k];
      const auto& jc = jd.at("candidates")[k];
      CHECK(jc.at("n").get<std::vector<int>>() == c.n);
      CHECK(jc.at("status") == to_string(v.status));
      CHECK(jc.at("lagrangian") == v.lagrangian);
      CHECK(jc.at("checks").size() == v.checks.size());
    }
  }
}

TEST_CASE("CSV report") {
  const auto r = classify(dataset("fib", {"hX=2/5", "D=+"}), library());
  const std::string csv = report_csv(builtin_catalog(), {r});
  CHECK(csv.rfind("dataset,algebra,status,reason,B_A,rank,lagrangian\n", 0) == 0);
  CHECK(csv.find("\"fib:dX=(1+√5)/2,hX=2/5,D=+\",1,etale,") != std::string::npos);
}

TEST_CASE("summary rollup") {
  std::vector<ClassificationReport> reports;
  for (const char* fam : {"vec-z2", "fib"})
    for (const auto& cat : fixtures::family(fam)) reports.push_back(classify(cat, library()));
  const std::string s = summary_markdown(builtin_catalog(), reports);
  CHECK(s.find("| 2 | Z2 | 16 | `classify --family vec-z2` | No (dX=1,hX=0; dX=-1,hX=1/2) / Yes (the others) |") !=
        std::string::npos);
  CHECK(s.find("| 2 | Fib | 8 | `classify --family fib` | Yes |") != std::string::npos);
}

TEST_CASE("number formatting") {
  const CycNumber phi = (1 + sqrt_of_integer(5)) * CycNumber(make_rational(1, 2));
  CHECK(format_number(phi) == "(1+√5)/2");
  ReportStyle style;
  style.float_digits = 4;
  CHECK(format_number(phi, style) == "(1+√5)/2 ≈ 1.6180");
  CHECK(format_number(CycNumber(3), style) == "3");
}
