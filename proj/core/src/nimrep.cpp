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

#include "etale/nimrep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "etale/interval.hpp"

namespace etale {
namespace {

struct Step {
  bool generator = false;
  int k = 0;  // object searched or derived
  int i = 0, j = 0;  // product used for derivation
};

// Greedy plan: search the object whose matrix determines the most others
// through products with a single unknown term.
class Planner {
 public:
  Planner(const FusionRing& ring, const std::vector<int>& bounds, int r) : ring_(ring), bounds_(bounds), r_(r) {}

  std::vector<Step> plan() {
    std::vector<bool> known(ring_.rank(), false);
    known[0] = true;
    std::vector<Step> steps;
    close(known, &steps);
    while (std::find(known.begin(), known.end(), false) != known.end()) {
      int best = -1;
      std::pair<int, double> best_score{-1, 0};
      for (int g = 1; g < ring_.rank(); ++g) {
        if (known[g] || ring_.dual[g] < g) continue;
        auto trial = known;
        mark(trial, g);
        close(trial, nullptr);
        const int gained = static_cast<int>(std::count(trial.begin(), trial.end(), true));
        const double box = search_box_log(g);
        if (gained > best_score.first || (gained == best_score.first && box < best_score.second)) {
          best = g;
          best_score = {gained, box};
        }
      }
      steps.push_back({true, best, 0, 0});
      mark(known, best);
      close(known, &steps);
    }
    return steps;
  }

 private:
  void mark(std::vector<bool>& known, int k) const {
    known[k] = true;
    known[ring_.dual[k]] = true;
  }

  double search_box_log(int g) const {
    const double entries = ring_.dual[g] == g ? r_ * (r_ + 1) / 2.0 : static_cast<double>(r_) * r_;
    return entries * std::log(bounds_[g] + 1.0);
  }

  void close(std::vector<bool>& known, std::vector<Step>* steps) const {
    const int n = ring_.rank();
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (!known[i] || !known[j]) continue;
          int unknown = -1, count = 0;
          for (int k = 0; k < n; ++k)
            if (ring_.n[i][j][k] && !known[k]) {
              unknown = k;
              ++count;
            }
          if (count != 1) continue;
          if (steps) steps->push_back({false, unknown, i, j});
          mark(known, unknown);
          changed = true;
        }
    }
  }

  const FusionRing& ring_;
  const std::vector<int>& bounds_;
  int r_;
};

class Search {
 public:
  Search(const FusionRing& ring, int r, std::vector<int> bounds)
      : ring_(ring), n_(ring.rank()), r_(r), bounds_(std::move(bounds)),
        m_(n_, IntMatrix(r, std::vector<int>(r, -1))) {
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b) m_[0][a][b] = a == b ? 1 : 0;
    steps_ = Planner(ring_, bounds_, r_).plan();
    involving_.resize(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::set<int> objs{i, j};
        for (int k = 0; k < n_; ++k)
          if (ring_.n[i][j][k]) objs.insert(k);
        for (int o : objs) involving_[o].push_back({i, j});
      }
  }

  std::vector<NimRep> run() {
    step(0);
    return std::move(found_);
  }

 private:
  std::pair<long, long> range(int i, int a, int b) const {
    const int v = m_[i][a][b];
    return v < 0 ? std::pair<long, long>{0, bounds_[i]} : std::pair<long, long>{v, v};
  }

  // Can (M_i M_j - sum_k N_ij^k M_k)[a][b] still vanish?
  bool feasible(int i, int j, int a, int b) const {
    long lo = 0, hi = 0;
    for (int c = 0; c < r_; ++c) {
      auto [l1, h1] = range(i, a, c);
      auto [l2, h2] = range(j, c, b);
      lo += l1 * l2;
      hi += h1 * h2;
    }
    for (int k = 0; k < n_; ++k) {
      if (!ring_.n[i][j][k]) continue;
      auto [l, h] = range(k, a, b);
      lo -= ring_.n[i][j][k] * h;
      hi -= ring_.n[i][j][k] * l;
    }
    return lo <= 0 && 0 <= hi;
  }

  bool feasible_after(int g, int a, int b) const {
    for (int obj : {g, ring_.dual[g]})
      for (auto [i, j] : involving_[obj])
        for (int x = 0; x < r_; ++x)
          for (int y : {a, b}) {
            if (!feasible(i, j, x, y) || !feasible(i, j, y, x)) return false;
          }
    return true;
  }

  void set(int g, int a, int b, int v) {
    m_[g][a][b] = v;
    m_[ring_.dual[g]][b][a] = v;
  }

  void step(std::size_t s) {
    if (s == steps_.size()) {
      record();
      return;
    }
    const Step& st = steps_[s];
    if (!st.generator) {
      if (derive(st)) step(s + 1);
      clear(st.k);
      return;
    }
    fill(s, st.k, 0);
    clear(st.k);
  }

  void fill(std::size_t s, int g, int pos) {
    const bool self_dual = ring_.dual[g] == g;
    // Entries in row-major order; self-dual matrices only need a <= b.
    int a = pos / r_, b = pos % r_;
    if (self_dual) {
      while (a < r_ && b < a) {
        ++pos;
        a = pos / r_;
        b = pos % r_;
      }
    }
    if (a == r_) {
      step(s + 1);
      return;
    }
    for (int v = 0; v <= bounds_[g]; ++v) {
      set(g, a, b, v);
      if (self_dual) set(g, b, a, v);
      if (feasible_after(g, a, b)) fill(s, g, pos + 1);
    }
    set(g, a, b, -1);
    if (self_dual) set(g, b, a, -1);
  }

  bool derive(const Step& st) {
    const int c = ring_.n[st.i][st.j][st.k];
    IntMatrix out(r_, std::vector<int>(r_, 0));
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b) {
        long v = 0;
        for (int x = 0; x < r_; ++x) v += static_cast<long>(m_[st.i][a][x]) * m_[st.j][x][b];
        for (int k = 0; k < n_; ++k)
          if (k != st.k && ring_.n[st.i][st.j][k]) v -= static_cast<long>(ring_.n[st.i][st.j][k]) * m_[k][a][b];
        if (v < 0 || v % c != 0 || v / c > bounds_[st.k]) return false;
        out[a][b] = static_cast<int>(v / c);
      }
    const int d = ring_.dual[st.k];
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b)
        if (d == st.k && out[a][b] != out[b][a]) return false;
    m_[st.k] = out;
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b) m_[d][b][a] = out[a][b];
    return true;
  }

  void clear(int k) {
    if (k == 0) return;
    for (int obj : {k, ring_.dual[k]})
      for (auto& row : m_[obj]) std::fill(row.begin(), row.end(), -1);
  }

  void record() {
    NimRep rep{r_, m_, true};
    if (!verify_nimrep(ring_, rep)) return;
    rep = canonicalize(rep);
    if (std::find(found_.begin(), found_.end(), rep) == found_.end()) found_.push_back(std::move(rep));
  }

  const FusionRing& ring_;
  int n_, r_;
  std::vector<int> bounds_;
  std::vector<IntMatrix> m_;
  std::vector<Step> steps_;
  std::vector<std::vector<std::pair<int, int>>> involving_;
  std::vector<NimRep> found_;
};

// Serialization block of basis element c placed after `prefix`.
std::vector<int> block(const NimRep& rep, const std::vector<int>& prefix, int c) {
  std::vector<int> out;
  for (std::size_t i = 1; i < rep.m.size(); ++i) {
    out.push_back(rep.m[i][c][c]);
    for (int p : prefix) {
      out.push_back(rep.m[i][p][c]);
      out.push_back(rep.m[i][c][p]);
    }
  }
  return out;
}

void canonical_search(const NimRep& rep, std::vector<int>& prefix, std::vector<std::vector<int>>& blocks,
                      std::vector<int>& best_perm, std::vector<std::vector<int>>& best_blocks) {
  const int r = rep.dim;
  const std::size_t t = prefix.size();
  if (static_cast<int>(t) == r) {
    if (best_perm.empty() || blocks < best_blocks) {
      best_perm = prefix;
      best_blocks = blocks;
    }
    return;
  }
  std::vector<std::pair<std::vector<int>, int>> options;
  for (int c = 0; c < r; ++c)
    if (std::find(prefix.begin(), prefix.end(), c) == prefix.end()) options.push_back({block(rep, prefix, c), c});
  const auto min_block = std::min_element(options.begin(), options.end())->first;
  if (!best_perm.empty()) {
    // Prefix equal to the best so far: a larger block can never win.
    std::vector<std::vector<int>> cand(blocks);
    cand.push_back(min_block);
    std::vector<std::vector<int>> best_prefix(best_blocks.begin(), best_blocks.begin() + static_cast<long>(t) + 1);
    if (cand > best_prefix) return;
  }
  for (auto& [b, c] : options) {
    if (b != min_block) continue;
    prefix.push_back(c);
    blocks.push_back(b);
    canonical_search(rep, prefix, blocks, best_perm, best_blocks);
    prefix.pop_back();
    blocks.pop_back();
  }
}

}  // namespace

std::vector<int> nimrep_entry_bounds(const FusionRing& ring) {
  // ||M_i||_2 = FPdim_i bounds every entry of M_i.
  std::vector<int> out;
  for (const auto& d : fp_dims(ring).dims) out.push_back(static_cast<int>(real_floor(d)));
  return out;
}

bool verify_nimrep(const FusionRing& ring, const NimRep& rep) {
  const int n = ring.rank(), r = rep.dim;
  if (static_cast<int>(rep.m.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        if (rep.m[i][a][b] < 0) return false;
        if (rep.m[ring.dual[i]][b][a] != rep.m[i][a][b]) return false;
        if (i == 0 && rep.m[0][a][b] != (a == b ? 1 : 0)) return false;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          long v = 0;
          for (int c = 0; c < r; ++c) v += static_cast<long>(rep.m[i][a][c]) * rep.m[j][c][b];
          for (int k = 0; k < n; ++k) v -= static_cast<long>(ring.n[i][j][k]) * rep.m[k][a][b];
          if (v != 0) return false;
        }
  return true;
}

bool is_indecomposable(const NimRep& rep) {
  const int r = rep.dim;
  std::vector<bool> seen(r, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < r; ++b) {
      if (seen[b]) continue;
      for (const auto& m : rep.m)
        if (m[a][b] || m[b][a]) {
          seen[b] = true;
          stack.push_back(b);
          break;
        }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

NimRep canonicalize(const NimRep& rep) {
  std::vector<int> prefix, best;
  std::vector<std::vector<int>> blocks, best_blocks;
  canonical_search(rep, prefix, blocks, best, best_blocks);
  NimRep out{rep.dim, rep.m, true};
  for (std::size_t i = 0; i < rep.m.size(); ++i)
    for (int a = 0; a < rep.dim; ++a)
      for (int b = 0; b < rep.dim; ++b) out.m[i][a][b] = rep.m[i][best[a]][best[b]];
  out.indecomposable = is_indecomposable(out);
  return out;
}

std::vector<NimRep> enumerate_nimreps(const FusionRing& ring, int r) {
  if (r < 1) throw std::invalid_argument("NIM-rep dimension must be positive");
  auto found = Search(ring, r, nimrep_entry_bounds(ring)).run();
  auto key = [](const NimRep& rep) {
    std::vector<int> flat;
    for (std::size_t i = 1; i < rep.m.size(); ++i)
      for (const auto& row : rep.m[i]) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
  };
  std::sort(found.begin(), found.end(), [&](const NimRep& a, const NimRep& b) { return key(a) < key(b); });
  return found;
}

std::vector<std::vector<int>> internal_hom_candidates(const NimRep& rep) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < rep.dim; ++m) {
    std::vector<int> n;
    for (const auto& mat : rep.m) n.push_back(mat[m][m]);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  return out;
}

std::string to_string(const FusionRing& ring, const NimRep& rep) {
  std::ostringstream os;
  os << "dim " << rep.dim << (rep.indecomposable ? "" : " (decomposable)") << "\n";
  for (std::size_t i = 1; i < rep.m.size(); ++i) {
    os << "  M_" << ring.labels[i] << " = [";
    for (int a = 0; a < rep.dim; ++a) {
      os << (a ? ", [" : "[");
      for (int b = 0; b < rep.dim; ++b) os << (b ? "," : "") << rep.m[i][a][b];
      os << "]";
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace etale
