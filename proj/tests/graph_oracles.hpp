#pragma once
// Independent path walk used to check network matrices: breadth-first search
// from s over the undirected tree, then backtrack to recover the path to t.

#include <queue>
#include <vector>

#include "tumax/graphical.hpp"

namespace oracle {

inline std::vector<tumax::Int> network_column(const tumax::ArcGraph& tree, std::size_t s, std::size_t t) {
  const std::size_t n = tree.vertices;
  std::vector<std::size_t> via(n, SIZE_MAX), from(n, SIZE_MAX);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  q.push(s);
  seen[s] = true;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t k = 0; k < tree.arcs.size(); ++k) {
      std::size_t w;
      if (tree.arcs[k].tail == v) {
        w = tree.arcs[k].head;
      } else if (tree.arcs[k].head == v) {
        w = tree.arcs[k].tail;
      } else {
        continue;
      }
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = k;
      from[w] = v;
      q.push(w);
    }
  }
  std::vector<tumax::Int> col(tree.arcs.size(), 0);
  for (std::size_t v = t; v != s; v = from[v]) {
    // the walk enters v through arc via[v] coming from from[v]
    col[via[v]] = tree.arcs[via[v]].tail == from[v] ? 1 : -1;
  }
  return col;
}

inline tumax::IntMatrix network_matrix(const tumax::ArcGraph& tree, const tumax::ArcGraph& d) {
  std::vector<tumax::Int> data(tree.arcs.size() * d.arcs.size());
  for (std::size_t j = 0; j < d.arcs.size(); ++j) {
    auto col = network_column(tree, d.arcs[j].tail, d.arcs[j].head);
    for (std::size_t i = 0; i < col.size(); ++i) data[i * d.arcs.size() + j] = col[i];
  }
  return tumax::IntMatrix(tree.arcs.size(), d.arcs.size(), std::move(data));
}

}  // namespace oracle
