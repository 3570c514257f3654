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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "doctest.h"
#include "etale/catalog.hpp"

using namespace etale::cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(int (*cmd)(const RunConfig&, std::ostream&, std::ostream&), const RunConfig& cfg) {
  std::ostringstream out, err;
  Run r;
  r.code = cmd(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("classify --family ising --summary") {
  RunConfig cfg;
  cfg.family = "ising";
  cfg.summary = true;
  const Run r = run(cmd_classify, cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("| 3 | Ising | 32 |") != std::string::npos);
  CHECK(r.out.find("| Yes |") != std::string::npos);
  cfg.summary = false;
  CHECK(count(run(cmd_classify, cfg).out, "completely anisotropic: yes") == 32);
}

TEST_CASE("classify --family vec-z2 --params dX=1,h=0") {
  RunConfig cfg;
  cfg.family = "vec-z2";
  cfg.params = "dX=1,h=0,D=+";
  const Run r = run(cmd_classify, cfg);
  CHECK(r.code == kExitOk);
  CHECK(count(r.out, "### ") == 1);
  CHECK(r.out.find("| 1 | B | 2 | No |\n| 1+X | Vect | 1 | No |\n\n") != std::string::npos);
}

TEST_CASE("classify --family rep-s3 --symmetric --params dY=2") {
  RunConfig cfg;
  cfg.family = "rep-s3";
  cfg.branch = "sym";
  cfg.params = "dY=2";
  const Run r = run(cmd_classify, cfg);
  CHECK(r.code == kExitOk);
  CHECK(count(r.out, "### ") == 2);
  CHECK(r.out.find("| 1 | B | 3 | No |\n| 1+X | Vec_Z3 | 3 | No |\n| 1+Y | Vec_Z2 | 2 | No |\n"
                   "| 1+X+2Y | Vect | 1 | No |\n") != std::string::npos);
}

TEST_CASE("classify output formats") {
  RunConfig cfg;
  cfg.family = "fib";
  cfg.format = "json";
  const Run j = run(cmd_classify, cfg);
  CHECK(nlohmann::json::parse(j.out).at("datasets").size() == 8);
  cfg.format = "csv";
  CHECK(count(run(cmd_classify, cfg).out, "\n") == 1 + 8);  // header plus A = 1 per dataset
  cfg.format = "markdown";
  cfg.float_digits = 3;
  CHECK(run(cmd_classify, cfg).out.find("≈ 3.618") != std::string::npos);
}

TEST_CASE("unknown selectors exit with 1") {
  RunConfig cfg;
  cfg.family = "nope";
  const Run r = run(cmd_classify, cfg);
  CHECK(r.code == kExitError);
  CHECK(r.err.find("unknown family") != std::string::npos);
  cfg.family = "fib";
  cfg.params = "dX=7";
  CHECK(run(cmd_classify, cfg).code == kExitError);
  RunConfig nim;
  nim.ring = "nope";
  CHECK(run(cmd_nimrep, nim).code == kExitError);
}

TEST_CASE("strict mode reports inconclusive verdicts") {
  // Without the certificate for 1+Y the symmetric Rep(S3) verdict stays open.
  std::vector<etale::CatalogEntry> entries;
  for (const auto& e : etale::builtin_entries())
    if (e.id != "cert:rep-s3-1+Y") entries.push_back(e);
  const std::string path = "etale_cli_test_catalog.json";
  {
    std::ofstream out(path);
    out << etale::serialize_catalog(etale::Catalog(entries));
  }
  RunConfig cfg;
  cfg.catalog_path = path;
  cfg.family = "rep-s3";
  cfg.branch = "sym";
  CHECK(run(cmd_classify, cfg).code == kExitOk);
  cfg.strict = true;
  const Run r = run(cmd_classify, cfg);
  CHECK(r.code == kExitInconclusive);
  CHECK(r.out.find("Inconclusive: 1+Y") != std::string::npos);

  cfg.catalog_path.clear();
  setenv("ETALE_CATALOG", path.c_str(), 1);
  CHECK(run(cmd_classify, cfg).code == kExitInconclusive);
  unsetenv("ETALE_CATALOG");
  CHECK(run(cmd_classify, cfg).code == kExitOk);
  std::remove(path.c_str());
}

TEST_CASE("nimrep listings") {
  RunConfig cfg;
  cfg.ring = "fib";
  cfg.dimension = 2;
  Run r = run(cmd_nimrep, cfg);
  CHECK(r.out.find("M_X = [[0,1], [1,1]]") != std::string::npos);
  CHECK(count(r.out, "NIM-rep ") == 1);
  cfg.ring = "ising";
  cfg.dimension = 1;
  CHECK(run(cmd_nimrep, cfg).out.find("no NIM-reps") != std::string::npos);
  cfg.ring = "z2";
  r = run(cmd_nimrep, cfg);
  CHECK(r.out.find("M_X = [[1]]") != std::string::npos);
  CHECK(r.out.find("internal Hom candidates: 1+X") != std::string::npos);
  cfg.format = "json";
  const auto doc = nlohmann::json::parse(run(cmd_nimrep, cfg).out);
  CHECK(doc.at("nimreps")[0].at("canonical") == true);
  CHECK(doc.at("nimreps")[0].at("matrices").at("X") == nlohmann::json::parse("[[1]]"));
}

TEST_CASE("confdims listings") {
  RunConfig cfg;
  cfg.ring = "psu25";
  cfg.character = 1;
  Run r = run(cmd_confdims, cfg);
  CHECK(r.out.find("scan bound: 60\n(3/7,1/7)\n(4/7,6/7)\n") != std::string::npos);
  cfg.ring = "RepS3";
  cfg.character = 1;
  cfg.mode = "symmetric";
  r = run(cmd_confdims, cfg);
  CHECK(r.out.find("(0,0)\n") != std::string::npos);
  CHECK(count(r.out, "(") == 1);
  cfg.ring = "Z3";
  cfg.character = 0;
  cfg.mode = "general";
  r = run(cmd_confdims, cfg);
  CHECK(r.out.find("(0,0)\n(1/3,1/3)\n(2/3,2/3)\n") != std::string::npos);
  cfg.character = 5;
  CHECK(run(cmd_confdims, cfg).code == kExitError);
}

TEST_CASE("catalog dump and listing") {
  RunConfig cfg;
  const Run dump = run(cmd_catalog, cfg);
  CHECK(dump.out == etale::serialize_catalog(etale::builtin_catalog()));
  cfg.output = "list";
  CHECK(run(cmd_catalog, cfg).out.find("fusion_ring\tFR2,0_2\tFib") != std::string::npos);
  cfg.output = "ising";
  CHECK(count(run(cmd_catalog, cfg).out, "\n") == 32);
}
