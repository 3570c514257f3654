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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

namespace oracle {

using etale::IntMatrix;

Complex evaluate(const etale::CycNumber& x) {
  const int n = x.conductor();
  Complex sum = 0;
  for (size_t k = 0; k < x.coefficients().size(); ++k)
    sum += x.coefficients()[k].get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(k) / n);
  return sum;
}

Complex phase(const etale::PhaseExponent& h) { return std::polar(1.0, 2 * M_PI * h.value().get_d()); }

std::vector<std::vector<Complex>> s_tilde(const etale::PreModularCategory& cat) {
  const int r = cat.rank();
  std::vector<std::vector<Complex>> s(r, std::vector<Complex>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        s[i][j] += static_cast<double>(cat.ring.n[i][j][k]) * evaluate(cat.dims.dims[k]) *
                   phase(cat.h[k] - cat.h[i] - cat.h[j]);
  return s;
}

namespace {

double dim_squared(const etale::PreModularCategory& cat) {
  double sum = 0;
  for (const auto& d : cat.dims.dims) sum += std::norm(evaluate(d));
  return sum;
}

}  // namespace

Complex gauss_sum_phase(const etale::PreModularCategory& cat) {
  Complex sum = 0;
  for (int i = 0; i < cat.rank(); ++i) sum += std::pow(evaluate(cat.dims.dims[i]), 2) * phase(cat.h[i]);
  return sum / (cat.d_sign * std::sqrt(dim_squared(cat)));
}

Complex fs_indicator(const etale::PreModularCategory& cat, int k) {
  Complex sum = 0;
  for (int i = 0; i < cat.rank(); ++i)
    for (int j = 0; j < cat.rank(); ++j)
      sum += static_cast<double>(cat.ring.n[i][j][k]) * evaluate(cat.dims.dims[i]) * evaluate(cat.dims.dims[j]) *
             std::pow(phase(cat.h[i] - cat.h[j]), 2);
  return sum / dim_squared(cat);
}

namespace {

IntMatrix identity(int r) {
  IntMatrix m(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  const int r = static_cast<int>(m.size());
  IntMatrix t(r, std::vector<int>(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) t[a][b] = m[b][a];
  return t;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const int r = static_cast<int>(x.size());
  IntMatrix z(r, std::vector<int>(r, 0));
  for (int a = 0; a < r; ++a)
    for (int c = 0; c < r; ++c)
      for (int b = 0; b < r; ++b) z[a][b] += x[a][c] * y[c][b];
  return z;
}

std::vector<double> perron_frobenius(const etale::FusionRing& ring) {
  const int n = ring.rank();
  std::vector<double> v(n, 1.0);
  for (int it = 0; it < 2000; ++it) {
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) w[b] += ring.n[i][a][b] * v[a];
    const double scale = w[0];
    for (auto& x : w) x /= scale;
    v = w;
  }
  return v;
}

// Objects reachable from the generators by repeatedly solving a product
// i*j with exactly one unknown constituent.
std::vector<bool> closure(const etale::FusionRing& ring, const std::vector<int>& gens) {
  const int n = ring.rank();
  std::vector<bool> known(n, false);
  known[0] = true;
  for (int g : gens) known[g] = known[ring.dual[g]] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!known[i] || !known[j]) continue;
        int unknown = -1, count = 0;
        for (int k = 0; k < n; ++k)
          if (ring.n[i][j][k] && !known[k]) unknown = k, ++count;
        if (count == 1) known[unknown] = known[ring.dual[unknown]] = changed = true;
      }
  }
  return known;
}

struct Oracle {
  const etale::FusionRing& ring;
  int r;
  std::vector<int> bounds;
  std::set<std::vector<int>> found;
  std::vector<etale::NimRep> reps;

  // g * g^* = 1, so M_g is a permutation matrix.
  bool invertible(int g) const {
    int total = 0;
    for (int k = 0; k < ring.rank(); ++k) total += ring.n[g][ring.dual[g]][k];
    return total == 1 && ring.n[g][ring.dual[g]][0] == 1;
  }

  // Every matrix with entries in [0, bound], symmetric when asked.
  std::vector<IntMatrix> all_matrices(int bound, bool symmetric) const {
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < r; ++a)
      for (int b = symmetric ? a : 0; b < r; ++b) cells.emplace_back(a, b);
    std::vector<IntMatrix> out;
    IntMatrix m(r, std::vector<int>(r, 0));
    std::function<void(size_t)> rec = [&](size_t c) {
      if (c == cells.size()) {
        out.push_back(m);
        return;
      }
      for (int v = 0; v <= bound; ++v) {
        m[cells[c].first][cells[c].second] = m[cells[c].second][cells[c].first] = v;
        rec(c + 1);
      }
    };
    rec(0);
    return out;
  }

  std::vector<IntMatrix> permutations(bool symmetric) const {
    std::vector<int> p(r);
    std::iota(p.begin(), p.end(), 0);
    std::vector<IntMatrix> out;
    do {
      IntMatrix m(r, std::vector<int>(r, 0));
      for (int a = 0; a < r; ++a) m[a][p[a]] = 1;
      if (!symmetric || m == transpose(m)) out.push_back(m);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  std::vector<IntMatrix> candidates(int g) const {
    const bool self_dual = ring.dual[g] == g;
    return invertible(g) ? permutations(self_dual) : all_matrices(bounds[g], self_dual);
  }

  // Fills in the remaining matrices; false on a non-integral or negative entry.
  bool derive(std::vector<std::optional<IntMatrix>>& m) const {
    const int n = ring.rank();
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (!m[i] || !m[j]) continue;
          int unknown = -1, count = 0;
          for (int k = 0; k < n; ++k)
            if (ring.n[i][j][k] && !m[k]) unknown = k, ++count;
          if (count != 1) continue;
          IntMatrix rest = multiply(*m[i], *m[j]);
          for (int k = 0; k < n; ++k)
            if (ring.n[i][j][k] && m[k])
              for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) rest[a][b] -= ring.n[i][j][k] * (*m[k])[a][b];
          const int mult = ring.n[i][j][unknown];
          for (auto& row : rest)
            for (auto& x : row) {
              if (x < 0 || x % mult) return false;
              x /= mult;
            }
          m[unknown] = rest;
          if (!m[ring.dual[unknown]]) m[ring.dual[unknown]] = transpose(rest);
          changed = true;
        }
    }
    return true;
  }

  bool verify(const std::vector<IntMatrix>& m) const {
    const int n = ring.rank();
    if (m[0] != identity(r)) return false;
    for (int i = 0; i < n; ++i)
      if (m[ring.dual[i]] != transpose(m[i])) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        IntMatrix rhs(r, std::vector<int>(r, 0));
        for (int k = 0; k < n; ++k)
          for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) rhs[a][b] += ring.n[i][j][k] * m[k][a][b];
        if (multiply(m[i], m[j]) != rhs) return false;
      }
    return true;
  }

  std::vector<int> generators() const {
    const int n = ring.rank();
    std::vector<int> reps;
    for (int i = 1; i < n; ++i)
      if (ring.dual[i] >= i) reps.push_back(i);
    std::vector<int> best;
    double best_cost = 0;
    for (size_t size = 0; size <= reps.size() && best.empty() && n > 1; ++size) {
      std::vector<bool> pick(reps.size(), false);
      std::fill(pick.begin(), pick.begin() + size, true);
      do {
        std::vector<int> gens;
        double cost = 1;
        for (size_t t = 0; t < reps.size(); ++t)
          if (pick[t]) {
            gens.push_back(reps[t]);
            const int g = reps[t];
            const double cells = ring.dual[g] == g ? r * (r + 1) / 2.0 : double(r) * r;
            cost *= invertible(g) ? std::tgamma(r + 1.0) : std::pow(bounds[g] + 1.0, cells);
          }
        const auto known = closure(ring, gens);
        if (std::all_of(known.begin(), known.end(), [](bool b) { return b; }) && (best.empty() || cost < best_cost))
          best = gens, best_cost = cost;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return best;
  }

  void run() {
    const int n = ring.rank();
    const auto gens = generators();
    std::vector<std::vector<IntMatrix>> options;
    for (int g : gens) options.push_back(candidates(g));
    std::vector<size_t> choice(gens.size(), 0);
    std::function<void(size_t)> rec = [&](size_t t) {
      if (t < gens.size()) {
        for (choice[t] = 0; choice[t] < options[t].size(); ++choice[t]) rec(t + 1);
        return;
      }
      std::vector<std::optional<IntMatrix>> m(n);
      m[0] = identity(r);
      for (size_t u = 0; u < gens.size(); ++u) {
        m[gens[u]] = options[u][choice[u]];
        m[ring.dual[gens[u]]] = transpose(options[u][choice[u]]);
      }
      if (!derive(m)) return;
      std::vector<IntMatrix> full;
      for (auto& x : m) {
        if (!x) return;
        full.push_back(*x);
      }
      if (!verify(full)) return;
      etale::NimRep rep;
      rep.dim = r;
      rep.m = full;
      const auto key = canonical_key(rep);
      if (found.insert(key).second) reps.push_back(rep);
    };
    rec(0);
  }
};

}  // namespace

std::vector<int> canonical_key(const etale::NimRep& rep) {
  const int r = rep.dim;
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> key;
    for (const auto& m : rep.m)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) key.push_back(m[p[a]][p[b]]);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<etale::NimRep> nimreps(const etale::FusionRing& ring, int r) {
  Oracle o{ring, r, {}, {}, {}};
  for (double d : perron_frobenius(ring)) o.bounds.push_back(static_cast<int>(std::floor(d + 1e-9)));
  o.run();
  return o.reps;
}

}  // namespace oracle
