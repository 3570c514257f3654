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

// Numeric character computation followed by exact recognition inside the
// maximal real subfield of Q(zeta_N).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

#include "etale/errors.hpp"
#include "etale/fusion_ring.hpp"
#include "etale/interval.hpp"

namespace etale {
namespace {

constexpr double kTol = 1e-9;

Eigen::MatrixXd to_eigen(const std::vector<std::vector<int>>& m) {
  const auto r = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) out(i, j) = m[i][j];
  return out;
}

std::vector<double> real_eigenvalues(const std::vector<std::vector<int>>& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m), false);
  std::vector<double> out;
  for (const auto& z : es.eigenvalues())
    if (std::abs(z.imag()) < 1e-7) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-7; }),
            out.end());
  return out;
}

// Units a in (Z/N)^* with a <= N/2; these index the real embeddings.
std::vector<int> real_nodes(int n) {
  std::vector<int> out;
  for (int a = 1; 2 * a <= std::max(n, 2); ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  if (out.empty()) out.push_back(1);
  return out;
}

// Finds x in Q(zeta_N)^+ with x ~ value whose real conjugates are all among
// `conjugates`. Returns every exact match.
std::vector<CycNumber> recognize(double value, const std::vector<double>& conjugates, int n) {
  std::vector<CycNumber> out;
  if (auto q = rationalize(value, 10000, kTol)) out.push_back(CycNumber(*q));
  const std::vector<int> nodes = real_nodes(n);
  const std::size_t m = nodes.size();
  if (m == 1) return out;
  std::vector<double> x(m);
  for (std::size_t a = 0; a < m; ++a) x[a] = 2 * std::cos(2 * std::numbers::pi * nodes[a] / n);
  Eigen::MatrixXd vander(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k < m; ++k) vander(a, k) = std::pow(x[a], static_cast<double>(k));
  const auto lu = vander.fullPivLu();
  const CycNumber theta = two_cos(n, 1);
  std::vector<std::size_t> pick(m - 1, 0);
  const std::size_t c = conjugates.size();
  if (c == 0) return out;
  for (;;) {
    Eigen::VectorXd rhs(m);
    rhs(0) = value;
    for (std::size_t a = 1; a < m; ++a) rhs(a) = conjugates[pick[a - 1]];
    Eigen::VectorXd coef = lu.solve(rhs);
    CycNumber cand;
    bool ok = true;
    CycNumber power(1);
    for (std::size_t k = 0; k < m && ok; ++k) {
      auto q = rationalize(coef(k), 10000, 1e-7);
      if (!q) ok = false;
      else cand += CycNumber(*q) * power;
      power *= theta;
    }
    if (ok && std::abs(cand.approx().real() - value) < kTol &&
        std::find(out.begin(), out.end(), cand) == out.end())
      out.push_back(cand);
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == c) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return out;
}

// Exact character matching the numeric vector, or nullopt.
std::optional<std::vector<CycNumber>> recognize_character(const FusionRing& ring,
                                                         const std::vector<double>& v) {
  const int r = ring.rank();
  std::vector<std::vector<CycNumber>> options(r);
  options[0] = {CycNumber(1)};
  for (int i = 1; i < r; ++i) {
    options[i] = recognize(v[i], real_eigenvalues(ring.left_matrix(i)), ring.conductor);
    if (options[i].empty()) return std::nullopt;
  }
  std::vector<std::size_t> pick(r, 0);
  for (;;) {
    std::vector<CycNumber> dims(r);
    for (int i = 0; i < r; ++i) dims[i] = options[i][pick[i]];
    if (is_character(ring, dims)) return dims;
    int pos = 1;
    while (pos < r && ++pick[pos] == options[pos].size()) pick[pos++] = 0;
    if (pos >= r) return std::nullopt;
  }
}

std::vector<double> perron_vector(const FusionRing& ring) {
  const int r = ring.rank();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) sum += to_eigen(ring.left_matrix(i));
  Eigen::VectorXd v = Eigen::VectorXd::Ones(r);
  for (int it = 0; it < 10000; ++it) {
    Eigen::VectorXd w = sum * v;
    w /= w(0);
    const double diff = (w - v).cwiseAbs().maxCoeff();
    v = w;
    if (diff < 1e-14) break;
  }
  return {v.data(), v.data() + r};
}

}  // namespace

FPData fp_dims(const FusionRing& ring) {
  const std::vector<double> v = perron_vector(ring);
  auto dims = recognize_character(ring, v);
  if (!dims) throw ValidationError(ring.id, "Frobenius-Perron dimensions not found over conductor " +
                                                std::to_string(ring.conductor));
  FPData out;
  out.dims = std::move(*dims);
  for (std::size_t i = 0; i < out.dims.size(); ++i) {
    if (std::abs(out.dims[i].approx().real() - v[i]) > kTol || real_sign(out.dims[i] - 1) < 0)
      throw ValidationError(ring.id, "Frobenius-Perron cross-check failed");
    out.total += out.dims[i] * out.dims[i];
  }
  return out;
}

std::vector<DimensionCharacter> dimension_characters(const FusionRing& ring) {
  const int r = ring.rank();
  if (r > 4) throw std::invalid_argument("dimension_characters supports rank <= 4");
  Eigen::MatrixXd generic = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) generic += (1.0 + 0.6180339 * i + 0.1 * i * i) * to_eigen(ring.left_matrix(i));
  Eigen::EigenSolver<Eigen::MatrixXd> es(generic);
  std::vector<std::vector<double>> numeric;
  for (Eigen::Index e = 0; e < r; ++e) {
    Eigen::VectorXcd vec = es.eigenvectors().col(e);
    if (std::abs(vec(0)) < 1e-12) continue;
    vec /= vec(0);
    bool real = true, nonzero = true;
    for (Eigen::Index i = 0; i < r; ++i) {
      real = real && std::abs(vec(i).imag()) < 1e-8;
      nonzero = nonzero && std::abs(vec(i)) > 1e-8;
    }
    // Complex characters of non-self-dual rings and characters with a zero
    // value are not quantum dimensions.
    if (!real || !nonzero) continue;
    std::vector<double> v(r);
    for (Eigen::Index i = 0; i < r; ++i) v[i] = vec(i).real();
    numeric.push_back(std::move(v));
  }
  std::sort(numeric.begin(), numeric.end());
  std::vector<DimensionCharacter> out;
  for (const auto& v : numeric) {
    auto dims = recognize_character(ring, v);
    if (!dims) throw ValidationError(ring.id, "character not recognizable over conductor " +
                                                  std::to_string(ring.conductor));
    bool dup = false;
    for (const auto& c : out) dup = dup || c.dims == *dims;
    if (!dup) out.push_back({std::move(*dims)});
  }
  std::sort(out.begin(), out.end(), [](const DimensionCharacter& a, const DimensionCharacter& b) {
    for (std::size_t i = 0; i < a.dims.size(); ++i) {
      const int c = compare_real(a.dims[i], b.dims[i]);
      if (c) return c < 0;
    }
    return false;
  });
  return out;
}

}  // namespace etale
