#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tumax/checked.hpp"
#include "tumax/matrix.hpp"

namespace tumax {

// g(x) = (x + 1)^2 / 4; h(x) = floor(g(x)) except h(5) = 10.
Rational g(Int x);
Int h(Int x);

struct BoundReport {
  std::string name;
  std::string inequality;
  Int max = 0;
  std::vector<std::pair<Int, Int>> found;
  std::vector<std::pair<Int, Int>> expected;
  bool match = false;
};

// Parts (1)-(4) of the h-inequality lemma checked for all pairs up to max.
std::vector<BoundReport> verify_extralemma(Int max);

// Arcs (i, j), i != j, lexicographic (+1 at i, -1 at j), then I, -I, 0.
IntMatrix heller_family(std::size_t m);
// (M | -M | 0)
IntMatrix symmetric_closure(const IntMatrix& m);
// Vertex-edge incidence of K_{a,b} (a = b = (m+1)/2 for odd m, a = m/2,
// b = m/2 + 1 for even m), rows A then B, with the last B row removed.
IntMatrix bipartite_extremal(std::size_t m);

IntMatrix sporadic_5x10();
IntMatrix sporadic_5x5(int variant);
IntMatrix ex4_matrix();

// Equivalence to one of the two 5x5 sporadic matrices under row/column
// permutations and sign changes of rows and columns.
bool is_sporadic(const IntMatrix& m);

}  // namespace tumax
