#pragma once
// Test-only reference implementations. These deliberately avoid the library's
// elimination code so they can serve as independent checks.

#include <cstdint>
#include <random>
#include <vector>

#include "tumax/matrix.hpp"

namespace oracle {

using tumax::Int;
using tumax::IntMatrix;

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Laplace expansion along the first row.
inline Int cofactor_determinant(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<Int>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      sub.push_back(std::move(row));
    }
    Int term = a[0][j] * cofactor_determinant(sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline Int cofactor_determinant(const IntMatrix& m) {
  std::vector<std::vector<Int>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
  return cofactor_determinant(a);
}

// Every square minor via cofactor expansion over all row/column subsets.
inline bool brute_force_tu(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::uint32_t rs = 1; rs < (1u << r); ++rs) {
    for (std::uint32_t cs = 1; cs < (1u << c); ++cs) {
      if (__builtin_popcount(rs) != __builtin_popcount(cs)) continue;
      std::vector<std::vector<Int>> a;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rs >> i & 1)) continue;
        std::vector<Int> row;
        for (std::size_t j = 0; j < c; ++j)
          if (cs >> j & 1) row.push_back(m(i, j));
        a.push_back(std::move(row));
      }
      Int d = cofactor_determinant(a);
      if (d < -1 || d > 1) return false;
    }
  }
  return true;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Int lo,
                               Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  std::vector<Int> data(rows * cols);
  for (auto& v : data) v = dist(rng);
  return IntMatrix(rows, cols, std::move(data));
}

// Rank by cross-multiplying elimination in 128-bit integers (small inputs only).
inline std::size_t naive_rank(const IntMatrix& m) {
  std::vector<std::vector<__int128>> a(m.rows(), std::vector<__int128>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      __int128 f = a[i][c], g = a[r][c];
      for (std::size_t k = 0; k < m.cols(); ++k) a[i][k] = a[i][k] * g - a[r][k] * f;
      // keep entries small
      __int128 gg = 0;
      for (auto v : a[i]) {
        __int128 x = v < 0 ? -v : v, y = gg;
        while (y) { __int128 t = x % y; x = y; y = t; }
        gg = x;
      }
      if (gg > 1)
        for (auto& v : a[i]) v /= gg;
    }
    ++r;
  }
  return r;
}

// The 5x10 sharpness example and the 4x10 dimension-4 example, keyed in a
// second time independently of the generators in the library.
inline IntMatrix keyed_sporadic_5x10() {
  return IntMatrix{{1, 0, 0, 0, 0, 1, 0, 0, 1, -1},
                   {0, 1, 0, 0, 0, -1, 1, 0, 0, 1},
                   {0, 0, 1, 0, 0, 1, -1, 1, 0, 0},
                   {0, 0, 0, 1, 0, 0, 1, -1, 1, 0},
                   {0, 0, 0, 0, 1, 0, 0, 1, -1, 1}};
}

inline IntMatrix keyed_ex4() {
  return IntMatrix{{0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
                   {0, 1, 1, 1, 0, 0, 0, 1, 1, 1},
                   {1, 0, 1, 1, 0, 1, 1, 0, 0, 1},
                   {1, 1, 0, 1, 1, 0, 1, 0, 1, 0}};
}

inline IntMatrix keyed_sporadic_5x5(int variant) {
  if (variant == 1) {
    return IntMatrix{{-1, 1, 0, 0, 1},
                     {1, -1, 1, 0, 0},
                     {0, 1, -1, 1, 0},
                     {0, 0, 1, -1, 1},
                     {1, 0, 0, 1, -1}};
  }
  return IntMatrix{{1, 1, 0, 0, 1},
                   {0, 1, 1, 0, 1},
                   {0, 0, 1, 1, 1},
                   {1, 0, 0, 1, 1},
                   {1, 1, 1, 1, 1}};
}

}  // namespace oracle

namespace oracle {

// Vertex-arc incidence matrix of a random digraph without loops: +1 at the
// tail, -1 at the head. Such matrices are TU.
inline IntMatrix random_incidence(std::mt19937_64& rng, std::size_t vertices, std::size_t arcs) {
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);

  std::vector<Int> data(vertices * arcs, 0);
  for (std::size_t a = 0; a < arcs; ++a) {
    std::size_t s = pick(rng), t = pick(rng);
    while (t == s) t = pick(rng);
    data[s * arcs + a] = 1;
    data[t * arcs + a] = -1;
  }
  return IntMatrix(vertices, arcs, std::move(data));
}

// Half TU incidence matrices, half perturbed copies that usually are not TU.
inline IntMatrix random_mixed_ternary(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  IntMatrix base = random_incidence(rng, rows, cols);
  if (rng() % 2 == 0) return base;
  std::vector<Int> data = base.entries();
  std::uniform_int_distribution<std::size_t> pos(0, data.size() - 1);
  std::uniform_int_distribution<Int> val(-1, 1);
  std::size_t flips = 1 + rng() % 3;
  for (std::size_t k = 0; k < flips; ++k) data[pos(rng)] = val(rng);
  return IntMatrix(rows, cols, std::move(data));
}

}  // namespace oracle
