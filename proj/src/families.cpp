#include "tumax/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "tumax/error.hpp"

namespace tumax {

Rational g(Int x) {
  if (x < 1) throw DomainError("g is defined for x >= 1, got " + std::to_string(x));
  Int y = checked_add(x, 1);
  return Rational(checked_mul(y, y), 4);
}

Int h(Int x) {
  if (x < 1) throw DomainError("h is defined for x >= 1, got " + std::to_string(x));
  if (x == 5) return 10;
  Int y = checked_add(x, 1);
  return checked_mul(y, y) / 4;
}

std::vector<BoundReport> verify_extralemma(Int max) {
  if (max < 10) throw UsageError("verify_extralemma needs max >= 10");
  struct Part {
    const char* name;
    const char* inequality;
    Int x_min, y_min;
    Int dx, dy;  // h(x + dx) + h(y + dy) <= h(x + y)
    std::vector<std::pair<Int, Int>> expected;
  };
  const std::array<Part, 4> parts{{
      {"part1", "h(x) + h(y) <= h(x + y), x, y >= 1", 1, 1, 0, 0, {}},
      {"part2", "h(x) + h(y + 1) <= h(x + y), x >= 2, y >= 1", 2, 1, 0, 1, {}},
      {"part3", "h(x) + h(y + 2) <= h(x + y), x >= 3, y >= 1", 3, 1, 0, 2, {{3, 1}, {3, 3}, {5, 1}}},
      {"part4", "h(x + 1) + h(y + 1) <= h(x + y), x, y >= 2", 2, 2, 1, 1, {{2, 2}, {2, 4}, {4, 2}}},
  }};
  std::vector<BoundReport> out;
  for (const Part& p : parts) {
    BoundReport r;
    r.name = p.name;
    r.inequality = p.inequality;
    r.max = max;
    r.expected = p.expected;
    for (Int x = p.x_min; x <= max; ++x)
      for (Int y = p.y_min; y <= max; ++y)
        if (h(x + p.dx) + h(y + p.dy) > h(x + y)) r.found.emplace_back(x, y);
    auto found = r.found, expected = r.expected;
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    r.match = found == expected;
    out.push_back(std::move(r));
  }
  return out;
}

IntMatrix heller_family(std::size_t m) {
  if (m < 1) throw UsageError("heller_family needs m >= 1");
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      IntVector c(m, 0);
      c[i] = 1;
      c[j] = -1;
      cols.push_back(c);
    }
  for (Int s : {1, -1})
    for (std::size_t i = 0; i < m; ++i) {
      IntVector c(m, 0);
      c[i] = s;
      cols.push_back(c);
    }
  cols.emplace_back(m, 0);
  return IntMatrix::from_columns(m, cols);
}

IntMatrix symmetric_closure(const IntMatrix& m) {
  return hconcat(hconcat(m, m.negated()), IntMatrix(m.rows(), 1));
}

IntMatrix bipartite_extremal(std::size_t m) {
  if (m < 1) throw UsageError("bipartite_extremal needs m >= 1");
  if (m == 5) throw UsageError("m = 5 is not attained by the bipartite family; use sporadic_5x10");
  const std::size_t a = m % 2 == 1 ? (m + 1) / 2 : m / 2;
  const std::size_t b = m % 2 == 1 ? (m + 1) / 2 : m / 2 + 1;
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      IntVector c(a + b - 1, 0);
      c[i] = 1;
      if (j + 1 < b) c[a + j] = 1;
      cols.push_back(c);
    }
  return IntMatrix::from_columns(m, cols);
}

IntMatrix sporadic_5x10() {
  return IntMatrix{{1, 0, 0, 0, 0, 1, 0, 0, 1, -1},
                   {0, 1, 0, 0, 0, -1, 1, 0, 0, 1},
                   {0, 0, 1, 0, 0, 1, -1, 1, 0, 0},
                   {0, 0, 0, 1, 0, 0, 1, -1, 1, 0},
                   {0, 0, 0, 0, 1, 0, 0, 1, -1, 1}};
}

IntMatrix sporadic_5x5(int variant) {
  switch (variant) {
    case 1:
      return IntMatrix{{-1, 1, 0, 0, 1},
                       {1, -1, 1, 0, 0},
                       {0, 1, -1, 1, 0},
                       {0, 0, 1, -1, 1},
                       {1, 0, 0, 1, -1}};
    case 2:
      return IntMatrix{{1, 1, 0, 0, 1},
                       {0, 1, 1, 0, 1},
                       {0, 0, 1, 1, 1},
                       {1, 0, 0, 1, 1},
                       {1, 1, 1, 1, 1}};
  }
  throw UsageError("sporadic_5x5 variant must be 1 or 2");
}

IntMatrix ex4_matrix() {
  return IntMatrix{{0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
                   {0, 1, 1, 1, 0, 0, 0, 1, 1, 1},
                   {1, 0, 1, 1, 0, 1, 1, 0, 0, 1},
                   {1, 1, 0, 1, 1, 0, 1, 0, 1, 0}};
}

namespace {

// Row signs r and column signs c with m(i,j) = r_i c_j t(i,j) exist iff the
// sign graph on rows + columns is consistent.
bool signs_consistent(const IntMatrix& m, const IntMatrix& t) {
  const std::size_t n = 5;
  std::array<int, 10> sign{};
  std::array<std::vector<std::pair<std::size_t, int>>, 10> adj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t(i, j) == 0) continue;
      int rel = m(i, j) == t(i, j) ? 1 : -1;
      adj[i].emplace_back(n + j, rel);
      adj[n + j].emplace_back(i, rel);
    }
  for (std::size_t start = 0; start < 2 * n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto [w, rel] : adj[v]) {
        int want = sign[v] * rel;
        if (sign[w] == 0) {
          sign[w] = want;
          stack.push_back(w);
        } else if (sign[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool equivalent(const IntMatrix& m, const IntMatrix& t) {
  std::array<std::size_t, 5> rp{0, 1, 2, 3, 4};
  do {
    // rows of m in order rp must match t row by row in support size before
    // trying column permutations
    bool sizes = true;
    for (std::size_t i = 0; i < 5 && sizes; ++i) {
      int a = 0, b = 0;
      for (std::size_t j = 0; j < 5; ++j) {
        a += m(rp[i], j) != 0;
        b += t(i, j) != 0;
      }
      sizes = a == b;
    }
    if (!sizes) continue;
    std::array<std::size_t, 5> cp{0, 1, 2, 3, 4};
    do {
      bool support = true;
      for (std::size_t i = 0; i < 5 && support; ++i)
        for (std::size_t j = 0; j < 5 && support; ++j)
          support = (m(rp[i], cp[j]) != 0) == (t(i, j) != 0);
      if (!support) continue;
      std::vector<Int> data(25);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) data[i * 5 + j] = m(rp[i], cp[j]);
      if (signs_consistent(IntMatrix(5, 5, data), t)) return true;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return false;
}

}  // namespace

bool is_sporadic(const IntMatrix& m) {
  if (m.rows() != 5 || m.cols() != 5) throw UsageError("is_sporadic expects a 5x5 matrix");
  if (!m.is_ternary()) throw UsageError("is_sporadic expects entries in {-1, 0, 1}");
  return equivalent(m, sporadic_5x5(1)) || equivalent(m, sporadic_5x5(2));
}

}  // namespace tumax
