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

#include "etale/premodular.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "etale/errors.hpp"
#include "etale/interval.hpp"
#include "linalg_exact.hpp"

namespace etale {
namespace {

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t n = a.size();
  CycMatrix out(n, std::vector<CycNumber>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

CycMatrix times_twist(CycMatrix s, const std::vector<PhaseExponent>& h) {
  for (auto& row : s)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] *= CycNumber::root_of_unity(h[j]);
  return s;
}

void require_modular(const PreModularCategory& cat) {
  if (!is_modular(cat)) throw DegenerateError(cat.id + ": braiding is degenerate");
}

}  // namespace

int PreModularCategory::conductor() const {
  long n = ring.conductor;
  for (const auto& d : dims.dims) n = lcm_conductor(n, d.conductor());
  for (const auto& x : h) n = lcm_conductor(n, x.denominator());
  return static_cast<int>(n);
}

std::vector<std::string> validate_category(const PreModularCategory& cat) {
  std::vector<std::string> out = validate_ring(cat.ring);
  if (!out.empty()) return out;
  const int r = cat.rank();
  if (static_cast<int>(cat.h.size()) != r) return {"twist vector has wrong length"};
  if (!cat.h[0].is_zero()) out.push_back("unit twist is not trivial");
  for (int i = 0; i < r; ++i)
    if (!(cat.h[i] == cat.h[cat.ring.dual[i]])) out.push_back("twist not dual-invariant at " + cat.ring.labels[i]);
  if (!is_character(cat.ring, cat.dims.dims)) out.push_back("dimensions are not a character");
  for (const auto& d : cat.dims.dims)
    if (d.is_zero() || !d.is_real()) out.push_back("dimension is zero or not real");
  if (cat.d_sign != 1 && cat.d_sign != -1) out.push_back("sign of D must be +1 or -1");
  return out;
}

CycMatrix s_matrix(const FusionRing& ring, const std::vector<CycNumber>& dims,
                   const std::vector<PhaseExponent>& h) {
  const int r = ring.rank();
  CycMatrix s(r, std::vector<CycNumber>(r));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      CycNumber v;
      for (int k = 0; k < r; ++k)
        if (ring.n[i][j][k]) v += CycNumber(ring.n[i][j][k]) * CycNumber::root_of_unity(h[k] - h[i] - h[j]) * dims[k];
      s[i][j] = v;
      s[j][i] = v;
    }
  return s;
}

CycMatrix s_matrix(const PreModularCategory& cat) { return s_matrix(cat.ring, cat.dims.dims, cat.h); }

CycNumber global_dimension_squared(const PreModularCategory& cat) { return categorical_dimension(cat.dims); }

bool is_modular(const PreModularCategory& cat) {
  return !detail::determinant(s_matrix(cat)).is_zero();
}

bool is_symmetric(const PreModularCategory& cat) {
  const CycMatrix s = s_matrix(cat);
  const auto& d = cat.dims.dims;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!(s[i][j] == d[i] * d[j])) return false;
  return true;
}

PhaseExponent central_charge(const PreModularCategory& cat) {
  require_modular(cat);
  // S~ traces the monodromy on i (x) j; the modular S pairs i* with j.
  const CycMatrix st_raw = s_matrix(cat);
  CycMatrix s(st_raw.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = st_raw[cat.ring.dual[i]];
  const CycMatrix st = times_twist(s, cat.h);
  const CycMatrix lhs = multiply(multiply(st, st), st);
  const CycMatrix s2 = multiply(s, s);
  // (S~T)^3 = mu S~^2 with mu = lambda D.
  const CycNumber mu = lhs[0][0] / s2[0][0];
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!(lhs[i][j] == mu * s2[i][j]))
        throw InconsistentData(cat.id + ": (ST)^3 is not a scalar multiple of S^2");
  const CycNumber d2 = global_dimension_squared(cat);
  const CycNumber lambda2 = mu * mu / d2;
  const long l = lcm_conductor(2, lambda2.conductor());
  std::optional<long> exponent;
  for (long j = 0; j < l; ++j)
    if (lambda2 == CycNumber::zeta(static_cast<int>(l), j)) {
      exponent = j;
      break;
    }
  if (!exponent) throw InconsistentData(cat.id + ": S/T normalization is not a root of unity");
  // lambda = +- e^{2 pi i j / 2l}; fix the sign numerically from D.
  const double dnum = cat.d_sign * std::sqrt(d2.approx().real());
  const std::complex<double> lambda = mu.approx() / dnum;
  const double angle = 2 * std::numbers::pi * static_cast<double>(*exponent) / static_cast<double>(2 * l);
  Rational half = std::abs(lambda - std::polar(1.0, angle)) < 1e-6 ? Rational(0) : make_rational(1, 2);
  return PhaseExponent(make_rational(*exponent, 2 * l) + half);
}

CycNumber fs_indicator(const PreModularCategory& cat, int k) {
  require_modular(cat);
  const FusionRing& ring = cat.ring;
  if (ring.dual[k] != k) throw std::invalid_argument("Frobenius-Schur indicator needs a self-dual object");
  const auto& d = cat.dims.dims;
  CycNumber sum;
  for (int i = 0; i < ring.rank(); ++i)
    for (int j = 0; j < ring.rank(); ++j)
      if (ring.n[i][j][k])
        sum += CycNumber(ring.n[i][j][k]) * d[i] * d[j] * CycNumber::root_of_unity((cat.h[i] - cat.h[j]) * 2);
  return sum / global_dimension_squared(cat);
}

CycNumber nu2_of(const PreModularCategory& cat, int k) {
  auto it = cat.nu2.find(k);
  if (it != cat.nu2.end()) return it->second;
  return fs_indicator(cat, k);
}

CycNumber self_braiding_invertible(const PreModularCategory& cat, int x, const CycNumber& nu2) {
  const FusionRing& ring = cat.ring;
  if (ring.dual[x] != x || ring.n[x][x][0] != 1) throw NotInvertible(ring.labels[x] + " is not an invertible self-dual object");
  for (int k = 1; k < ring.rank(); ++k)
    if (ring.n[x][x][k]) throw NotInvertible(ring.labels[x] + " is not invertible");
  return CycNumber::root_of_unity(-cat.h[x]) * nu2;
}

MonodromyTable monodromy_table(const PreModularCategory& cat) {
  MonodromyTable out;
  const int r = cat.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (cat.ring.n[i][j][k]) out[{i, j, k}] = cat.h[k] - cat.h[i] - cat.h[j];
  return out;
}

}  // namespace etale
