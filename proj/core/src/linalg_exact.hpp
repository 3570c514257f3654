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

// Exact Gaussian elimination over any field type with ==, +, -, *, / and
// construction from 0/1 (Rational, CycNumber).

#include <cstddef>
#include <optional>
#include <vector>

namespace etale::detail {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Solves a x = b for a possibly non-square, consistent system. Returns
/// one solution (free variables set to zero) or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == T(0)) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    T inv = T(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == T(0)) continue;
      T f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!(b[i] == T(0))) return std::nullopt;
  std::vector<T> x(cols, T(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

/// Determinant of a square matrix.
template <class T>
T determinant(Matrix<T> a) {
  const std::size_t n = a.size();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == T(0)) ++p;
    if (p == n) return T(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = T(0) - det;
    }
    det = det * a[c][c];
    T inv = T(1) / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == T(0)) continue;
      T f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return det;
}

}  // namespace etale::detail
