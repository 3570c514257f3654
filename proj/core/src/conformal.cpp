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

// Bounded-denominator scan for twist vectors.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "etale/errors.hpp"
#include "etale/premodular.hpp"

namespace etale {
namespace {

using Complex = std::complex<double>;
constexpr double kTol = 1e-9;

enum class Kind { kConjugate, kPinned, kSymmetric };

struct Constraint {
  Kind kind;
  int i, j;
  Complex target;      // pinned / symmetric value
  CycNumber exact;     // same, exact
  std::size_t level;   // index of the last variable it depends on
};

std::vector<Rational> scan_values(int bound) {
  std::vector<Rational> out;
  for (long q = 1; q <= bound; ++q)
    for (long p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(make_rational(p, q));
  std::sort(out.begin(), out.end());
  return out;
}

struct Scanner {
  const FusionRing& ring;
  std::vector<CycNumber> dims;
  std::vector<double> dnum;
  std::vector<int> vars;      // representative object of each variable
  std::vector<std::size_t> var_of;
  std::vector<Constraint> constraints;
  std::vector<std::vector<const Constraint*>> by_level;
  std::vector<Rational> values;
  std::vector<Complex> phase;  // e^{2 pi i v}
  std::vector<std::size_t> choice;
  std::vector<std::vector<std::size_t>> solutions;

  std::size_t level_of(int i, int j) const {
    std::size_t lv = 0;
    auto bump = [&](int x) {
      if (x != 0) lv = std::max(lv, var_of[x]);
    };
    bump(i);
    bump(j);
    for (int k = 0; k < ring.rank(); ++k)
      if (ring.n[i][j][k]) bump(k);
    return lv;
  }

  Complex twist(int obj) const { return obj == 0 ? Complex(1) : phase[choice[var_of[obj] - 1]]; }

  Complex s_numeric(int i, int j) const {
    Complex sum = 0;
    const Complex base = std::conj(twist(i) * twist(j));
    for (int k = 0; k < ring.rank(); ++k)
      if (ring.n[i][j][k]) sum += static_cast<double>(ring.n[i][j][k]) * twist(k) * base * dnum[k];
    return sum;
  }

  bool holds(const Constraint& c) const {
    switch (c.kind) {
      case Kind::kConjugate:
        return std::abs(s_numeric(ring.dual[c.i], c.j) - std::conj(s_numeric(c.i, c.j))) < kTol;
      default:
        return std::abs(s_numeric(c.i, c.j) - c.target) < kTol;
    }
  }

  void search(std::size_t depth) {
    // depth variables are assigned; constraints at level == depth are now decidable.
    for (const Constraint* c : by_level[depth])
      if (!holds(*c)) return;
    if (depth == vars.size()) {
      solutions.push_back(choice);
      return;
    }
    for (std::size_t v = 0; v < values.size(); ++v) {
      choice[depth] = v;
      search(depth + 1);
    }
  }
};

bool all_integer(const std::vector<CycNumber>& v) {
  return std::all_of(v.begin(), v.end(), [](const CycNumber& x) { return x.is_rational() && x.rational_value().get_den() == 1; });
}

bool passes_exact(const FusionRing& ring, const std::vector<CycNumber>& dims,
                  const std::vector<PhaseExponent>& h, const std::vector<Constraint>& cons,
                  const ConformalOptions& options, bool integral_fp) {
  const CycMatrix s = s_matrix(ring, dims, h);
  const int r = ring.rank();
  for (const auto& c : cons) {
    if (c.kind == Kind::kConjugate) {
      if (!(s[ring.dual[c.i]][c.j] == s[c.i][c.j].conj())) return false;
    } else if (!(s[c.i][c.j] == c.exact)) {
      return false;
    }
  }
  PreModularCategory cat;
  cat.id = ring.id;
  cat.ring = ring;
  cat.dims.dims = dims;
  cat.h = h;
  if (is_modular(cat)) {
    if (options.mode == ConformalMode::kSymmetric) return false;
    const CycNumber d2 = global_dimension_squared(cat);
    for (int k = 0; k < r; ++k) {
      CycNumber sum;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (ring.n[i][j][k])
            sum += CycNumber(ring.n[i][j][k]) * dims[i] * dims[j] * CycNumber::root_of_unity((h[i] - h[j]) * 2);
      const CycNumber nu = sum / d2;
      const bool ok = ring.dual[k] == k ? (nu == CycNumber(1) || nu == CycNumber(-1)) : nu.is_zero();
      if (!ok) return false;
    }
    try {
      central_charge(cat);
    } catch (const InconsistentData&) {
      return false;
    }
    return true;
  }
  if (options.require_nondegenerate) return false;
  // A symmetric category has integer Frobenius-Perron dimensions.
  if (is_symmetric(cat) && !integral_fp) return false;
  return true;
}

}  // namespace

std::vector<std::vector<PhaseExponent>> solve_conformal_dimensions(const FusionRing& ring,
                                                                   const DimensionCharacter& dims,
                                                                   const ConformalOptions& options) {
  if (options.bound < 1) throw std::invalid_argument("denominator bound must be positive");
  const int r = ring.rank();
  Scanner sc{ring, dims.dims, {}, {}, std::vector<std::size_t>(r, 0), {}, {}, scan_values(options.bound), {}, {}, {}};
  for (const auto& d : dims.dims) sc.dnum.push_back(d.approx().real());
  for (int i = 1; i < r; ++i)
    if (ring.dual[i] >= i) {
      sc.vars.push_back(i);
      sc.var_of[i] = sc.vars.size();
      sc.var_of[ring.dual[i]] = sc.vars.size();
    }
  for (const auto& v : sc.values) sc.phase.push_back(std::polar(1.0, 2 * std::numbers::pi * v.get_d()));
  sc.choice.assign(sc.vars.size(), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const std::size_t lv = std::max(sc.level_of(i, j), sc.level_of(ring.dual[i], j));
      sc.constraints.push_back({Kind::kConjugate, i, j, {}, {}, lv});
      if (options.mode == ConformalMode::kSymmetric) {
        CycNumber t = dims.dims[i] * dims.dims[j];
        sc.constraints.push_back({Kind::kSymmetric, i, j, t.approx(), t, sc.level_of(i, j)});
      }
    }
  for (const auto& p : options.pins)
    sc.constraints.push_back({Kind::kPinned, p.i, p.j, p.value.approx(), p.value, sc.level_of(p.i, p.j)});
  sc.by_level.resize(sc.vars.size() + 1);
  for (const auto& c : sc.constraints) sc.by_level[c.level].push_back(&c);
  sc.search(0);

  const bool integral_fp = all_integer(fp_dims(ring).dims);
  std::vector<std::vector<PhaseExponent>> out;
  for (const auto& sol : sc.solutions) {
    std::vector<PhaseExponent> h(r);
    for (int i = 1; i < r; ++i) h[i] = PhaseExponent(sc.values[sol[sc.var_of[i] - 1]]);
    if (passes_exact(ring, dims.dims, h, sc.constraints, options, integral_fp)) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace etale
