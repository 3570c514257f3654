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

#include <cmath>

#include "doctest.h"
#include "etale/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace etale;
using fixtures::dataset;

namespace {

using CMatrix = std::vector<std::vector<oracle::Complex>>;

CMatrix mul(const CMatrix& a, const CMatrix& b) {
  const size_t n = a.size();
  CMatrix c(n, std::vector<oracle::Complex>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// e^{2 pi i c/8} from (S T)^3 = lambda S^2 in floating point.
oracle::Complex modular_phase(const PreModularCategory& cat) {
  const int r = cat.rank();
  CMatrix s = oracle::s_tilde(cat), t(r, std::vector<oracle::Complex>(r, 0));
  double d2 = 0;
  for (const auto& d : cat.dims.dims) d2 += std::norm(oracle::evaluate(d));
  const double big_d = cat.d_sign * std::sqrt(d2);
  // Rows in the standard convention: S_ij = S~_{i* j}.
  CMatrix std_s(r);
  for (int i = 0; i < r; ++i) {
    std_s[i] = s[cat.ring.dual[i]];
    for (auto& x : std_s[i]) x /= big_d;
    t[i][i] = oracle::phase(cat.h[i]);
  }
  const CMatrix st = mul(std_s, t);
  const CMatrix lhs = mul(st, mul(st, st));
  const CMatrix s2 = mul(std_s, std_s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (std::abs(s2[i][j]) > 1e-6) return lhs[i][j] / s2[i][j];
  return 0;
}

}  // namespace

TEST_CASE("S~ for Fibonacci") {
  const auto& fib = dataset("fib", {"dX=(1+√5)/2", "hX=2/5", "D=+"});
  const CycMatrix s = s_matrix(fib);
  const CycNumber zeta = fib.dims.dims[1];
  CHECK(s[0][0] == CycNumber(1));
  CHECK(s[0][1] == zeta);
  CHECK(s[1][0] == zeta);
  CHECK(s[1][1] == CycNumber(-1));
}

TEST_CASE("S~ for symmetric Rep(S3)") {
  for (const auto& cat : fixtures::family("rep-s3")) {
    if (cat.branch != "sym") continue;
    const CycNumber dy = cat.dims.dims[2];
    const CycMatrix expected{{1, 1, dy}, {1, 1, dy}, {dy, dy, dy * dy}};
    CHECK(s_matrix(cat) == expected);
    CHECK(is_symmetric(cat));
    CHECK_FALSE(is_modular(cat));
  }
}

TEST_CASE("S~ for the trivial category") {
  const auto& vect = dataset("vect", {"D=+"});
  CHECK(s_matrix(vect) == CycMatrix{{CycNumber(1)}});
  CHECK(central_charge(vect) == PhaseExponent(0, 1));
}

TEST_CASE("S~ agrees with floating evaluation on every dataset") {
  for (const auto& cat : fixtures::all_datasets()) {
    const CycMatrix s = s_matrix(cat);
    const auto f = oracle::s_tilde(cat);
    for (int i = 0; i < cat.rank(); ++i)
      for (int j = 0; j < cat.rank(); ++j) CHECK_MESSAGE(std::abs(oracle::evaluate(s[i][j]) - f[i][j]) < 1e-9, cat.id);
  }
}

TEST_CASE("modularity") {
  CHECK(is_modular(dataset("vec-z2", {"dX=1", "hX=1/4"})));
  CHECK_FALSE(is_modular(dataset("vec-z2", {"dX=1", "hX=1/2"})));
  int psu = 0;
  for (const auto& cat : fixtures::family("psu25")) psu += is_modular(cat);
  CHECK(psu == 12);
  CHECK(global_dimension_squared(dataset("vec-z2", {"dX=-1", "hX=0"})) == CycNumber(2));
}

TEST_CASE("central charge") {
  const auto& ising = dataset("ising", {"dY=√2", "hY=1/16", "D=+"});
  CHECK(global_dimension_squared(ising) == CycNumber(4));
  CHECK(central_charge(ising) == PhaseExponent(1, 16));  // c = 1/2
  CHECK(central_charge(dataset("vec-z3", {"hX=1/3", "D=+"})) == PhaseExponent(1, 4));   // c = 2
  CHECK(central_charge(dataset("vec-z3", {"hX=2/3", "D=+"})) == PhaseExponent(3, 4));   // c = -2
  CHECK(central_charge(dataset("vec-z3", {"hX=1/3", "D=-"})) == PhaseExponent(3, 4));   // D -> -D flips the sign
  CHECK_THROWS_AS(central_charge(dataset("vec-z3", {"hX=0", "D=+"})), DegenerateError);
  for (const auto& cat : fixtures::all_datasets()) {
    if (!is_modular(cat)) continue;
    const oracle::Complex lambda = oracle::phase(central_charge(cat));
    CHECK_MESSAGE(std::abs(lambda - modular_phase(cat)) < 1e-9, cat.id);
    CHECK_MESSAGE(std::abs(lambda - oracle::gauss_sum_phase(cat)) < 1e-9, cat.id);
  }
}

TEST_CASE("Frobenius-Schur indicators") {
  for (const char* h : {"hX=1/4", "hX=3/4"}) {
    const auto& semion = dataset("vec-z2", {"dX=1", h});
    const CycNumber nu = fs_indicator(semion, 1);
    CHECK(std::abs(oracle::evaluate(nu) - oracle::fs_indicator(semion, 1)) < 1e-12);
    CHECK((nu == CycNumber(1) || nu == CycNumber(-1)));
    // alpha = nu2 / d_X is the anomaly sign of the Z/2 data.
    CHECK((nu / semion.dims.dims[1]) * (nu / semion.dims.dims[1]) == CycNumber(1));
  }
  for (const auto& cat : fixtures::all_datasets()) {
    if (!is_modular(cat)) continue;
    CHECK(fs_indicator(cat, 0) == CycNumber(1));
    for (int k = 0; k < cat.rank(); ++k)
      if (cat.ring.dual[k] == k)
        CHECK_MESSAGE(std::abs(oracle::evaluate(fs_indicator(cat, k)) - oracle::fs_indicator(cat, k)) < 1e-9, cat.id);
  }
}

TEST_CASE("self-braiding of an invertible object") {
  auto scalar = [](const PreModularCategory& cat) { return self_braiding_invertible(cat, 1, nu2_of(cat, 1)); };
  CHECK(scalar(dataset("vec-z2", {"dX=1", "hX=0"})) == CycNumber(1));
  CHECK(scalar(dataset("vec-z2", {"dX=1", "hX=1/2"})) == CycNumber(-1));
  CHECK(scalar(dataset("vec-z2", {"dX=-1", "hX=0"})) == CycNumber(-1));
  CHECK(scalar(dataset("vec-z2", {"dX=-1", "hX=1/2"})) == CycNumber(1));
  const CycNumber i = CycNumber::zeta(4);
  const CycNumber c = scalar(dataset("vec-z2", {"dX=1", "hX=1/4"}));
  CHECK((c == i || c == -i));
  for (const auto& ising : fixtures::family("ising")) CHECK(scalar(ising) == CycNumber(-1));  // X is a fermion
}

TEST_CASE("monodromy table") {
  const auto table = monodromy_table(dataset("vec-z3", {"hX=1/3"}));
  CHECK(table.at({1, 1, 2}) == PhaseExponent(2, 3));  // h_Y - 2 h_X
  CHECK(table.at({1, 2, 0}) == PhaseExponent(1, 3));
  CHECK(table.size() == 9);
}

TEST_CASE("invalid twists are reported") {
  PreModularCategory cat = dataset("vec-z3", {"hX=1/3"});
  cat.h[2] = PhaseExponent(1, 2);
  CHECK_FALSE(validate_category(cat).empty());
  cat = dataset("fib", {"hX=2/5"});
  cat.dims.dims[1] = CycNumber(2);
  CHECK_FALSE(validate_category(cat).empty());
}

namespace {

using HList = std::vector<std::vector<PhaseExponent>>;

HList solve(const std::string& ring, const std::vector<CycNumber>& dims, ConformalOptions opt = {}) {
  return solve_conformal_dimensions(fixtures::ring(ring), {dims}, opt);
}

std::vector<PhaseExponent> hv(std::initializer_list<std::pair<long, long>> v) {
  std::vector<PhaseExponent> out;
  for (auto [p, q] : v) out.emplace_back(p, q);
  return out;
}

}  // namespace

TEST_CASE("conformal dimensions: Z/2") {
  for (int d : {1, -1}) {
    const HList h = solve("Z2", {1, d});
    CHECK(h == HList{hv({{0, 1}, {0, 1}}), hv({{0, 1}, {1, 4}}), hv({{0, 1}, {1, 2}}), hv({{0, 1}, {3, 4}})});
  }
}

TEST_CASE("conformal dimensions: Fibonacci") {
  const CycNumber s5 = sqrt_of_integer(5), half = CycNumber(make_rational(1, 2));
  CHECK(solve("Fib", {1, half * (1 + s5)}) == HList{hv({{0, 1}, {2, 5}}), hv({{0, 1}, {3, 5}})});
  CHECK(solve("Fib", {1, half * (1 - s5)}) == HList{hv({{0, 1}, {1, 5}}), hv({{0, 1}, {4, 5}})});
}

TEST_CASE("conformal dimensions: Vec_Z3") {
  CHECK(solve("Z3", {1, 1, 1}) ==
        HList{hv({{0, 1}, {0, 1}, {0, 1}}), hv({{0, 1}, {1, 3}, {1, 3}}), hv({{0, 1}, {2, 3}, {2, 3}})});
}

TEST_CASE("conformal dimensions: Ising") {
  ConformalOptions opt;
  opt.require_nondegenerate = true;
  for (int s : {1, -1}) {
    const HList h = solve("Ising", {1, 1, sqrt_of_integer(2) * s}, opt);
    REQUIRE(h.size() == 8);
    for (size_t k = 0; k < 8; ++k) CHECK(h[k] == hv({{0, 1}, {1, 2}, {2 * static_cast<long>(k) + 1, 16}}));
  }
}

TEST_CASE("conformal dimensions: Rep(S3)") {
  ConformalOptions sym;
  sym.mode = ConformalMode::kSymmetric;
  for (int d : {2, -1}) CHECK(solve("RepS3", {1, 1, d}, sym) == HList{hv({{0, 1}, {0, 1}, {0, 1}})});
  for (int d : {2, -1}) {
    ConformalOptions opt;
    opt.pins = {{1, 1, CycNumber(1)}, {1, 2, CycNumber(d)}, {2, 2, CycNumber(-2)}};
    const HList h = solve("RepS3", {1, 1, d}, opt);
    if (d == 2)
      CHECK(h == HList{hv({{0, 1}, {0, 1}, {1, 3}}), hv({{0, 1}, {0, 1}, {2, 3}})});
    else
      CHECK(h.empty());
  }
}

TEST_CASE("conformal dimensions: psu(2)_5") {
  const auto chars = dimension_characters(fixtures::ring("psu25"));
  REQUIRE(chars.size() == 3);
  CHECK(solve("psu25", chars[2].dims) == HList{hv({{0, 1}, {1, 7}, {5, 7}}), hv({{0, 1}, {6, 7}, {2, 7}})});
  CHECK(solve("psu25", chars[1].dims) == HList{hv({{0, 1}, {3, 7}, {1, 7}}), hv({{0, 1}, {4, 7}, {6, 7}})});
  ConformalOptions sym;
  sym.mode = ConformalMode::kSymmetric;
  for (const auto& ch : chars) CHECK(solve("psu25", ch.dims, sym).empty());
}

TEST_CASE("conformal dimensions respect the bound") {
  ConformalOptions small;
  small.bound = 4;
  CHECK(solve("Fib", {1, (1 + sqrt_of_integer(5)) * CycNumber(make_rational(1, 2))}, small).empty());
  small.bound = 5;
  CHECK(solve("Fib", {1, (1 + sqrt_of_integer(5)) * CycNumber(make_rational(1, 2))}, small).size() == 2);
}
