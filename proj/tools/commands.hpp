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

#include <iosfwd>
#include <string>
#include <vector>

namespace etale::cli {

struct RunConfig {
  std::string command;
  std::string catalog_path;  // empty: ETALE_CATALOG, then the builtin catalog
  std::string family;
  std::string category;
  std::string params;  // "dX=1,h=0"
  std::string branch;
  std::string ring;
  int dimension = 1;
  int character = 0;
  std::string mode = "general";
  bool nondegenerate = false;
  std::vector<std::string> pins;  // "i,j,value"
  int bound = 60;
  std::string format = "markdown";
  bool strict_monodromy = false;
  bool summary = false;
  bool strict = false;
  int float_digits = 0;
  int jobs = 0;
  std::string output;
};

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_nimrep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_confdims(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace etale::cli
