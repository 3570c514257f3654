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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "etale/nimrep.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace etale;
using fixtures::ring;

TEST_CASE("Fibonacci, dimension 2") {
  const auto reps = enumerate_nimreps(ring("Fib"), 2);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].m[1] == IntMatrix{{0, 1}, {1, 1}});
  CHECK(reps[0].indecomposable);
  const auto n = internal_hom_candidates(reps[0]);
  REQUIRE(n.size() == 2);
  CHECK(n[0] == std::vector<int>{1, 0});
}

TEST_CASE("Ising and psu(2)_5 have no one-dimensional NIM-rep") {
  CHECK(enumerate_nimreps(ring("Ising"), 1).empty());
  CHECK(enumerate_nimreps(ring("psu25"), 1).empty());
}

TEST_CASE("Z/2 NIM-reps") {
  const auto one = enumerate_nimreps(ring("Z2"), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].m[1] == IntMatrix{{1}});
  CHECK(internal_hom_candidates(one[0]) == std::vector<std::vector<int>>{{1, 1}});

  const auto two = enumerate_nimreps(ring("Z2"), 2);
  REQUIRE(two.size() == 2);
  std::set<IntMatrix> mx;
  for (const auto& r : two) mx.insert(r.m[1]);
  CHECK(mx == std::set<IntMatrix>{{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
  for (const auto& r : two)
    if (r.m[1] == IntMatrix{{0, 1}, {1, 0}}) {
      CHECK(r.indecomposable);
      CHECK(internal_hom_candidates(r) == std::vector<std::vector<int>>{{1, 0}});  // same for both m
    } else {
      CHECK_FALSE(r.indecomposable);
    }
}

TEST_CASE("entry bounds follow the Frobenius-Perron dimensions") {
  CHECK(nimrep_entry_bounds(ring("Fib")) == std::vector<int>{1, 1});
  CHECK(nimrep_entry_bounds(ring("psu25")) == std::vector<int>{1, 1, 2});
  CHECK(nimrep_entry_bounds(ring("K1020")) == std::vector<int>{1, 2, 1});
}

TEST_CASE("verification rejects a non-representation") {
  NimRep bad;
  bad.dim = 2;
  bad.m = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
  CHECK_FALSE(verify_nimrep(ring("Fib"), bad));
  bad.m[1] = {{1, 1}, {1, 0}};
  CHECK(verify_nimrep(ring("Fib"), bad));  // a relabeling of the canonical one
  CHECK(canonicalize(bad).m[1] == IntMatrix{{0, 1}, {1, 1}});
}

TEST_CASE("search agrees with the brute-force oracle") {
  for (const auto& e : builtin_catalog().entries()) {
    if (e.kind != EntryKind::kFusionRing) continue;
    const FusionRing& r = std::get<FusionRing>(e.payload);
    for (int dim = 1; dim <= 4; ++dim) {
      std::set<std::vector<int>> engine, brute;
      for (const auto& rep : enumerate_nimreps(r, dim)) {
        CHECK(verify_nimrep(r, rep));
        engine.insert(oracle::canonical_key(rep));
      }
      for (const auto& rep : oracle::nimreps(r, dim)) brute.insert(oracle::canonical_key(rep));
      CHECK_MESSAGE(engine == brute, r.id << " dim " << dim);
    }
  }
}
