#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tumax/matrix.hpp"

namespace tumax {

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Vertices 0..vertices-1 and an ordered arc list. Arc order fixes the row
// (tree) or column (digraph) order of derived matrices.
struct ArcGraph {
  std::size_t vertices = 0;
  std::vector<Arc> arcs;

  void check_ranges() const;
  friend bool operator==(const ArcGraph&, const ArcGraph&) = default;
};

// Text format: "vertices arcs" header, then one "tail head" line per arc.
ArcGraph parse_graph(std::string_view text);
std::string format_graph(const ArcGraph& g);

using EndpointPair = std::pair<std::size_t, std::size_t>;
// One "endpoint endpoint" pair per line.
std::vector<EndpointPair> parse_paths(std::string_view text);

// Oriented tree arcs on the unique undirected path between two vertices.
struct PathStep {
  std::size_t arc = 0;
  int sign = 1;  // +1 when the arc is passed along its orientation
};

// Rooted view of a tree given as an ArcGraph (orientation ignored for the
// shape). Throws StructureError when the graph is not a spanning tree.
class TreePaths {
 public:
  explicit TreePaths(const ArcGraph& tree);

  std::size_t vertices() const noexcept { return parent_.size(); }
  std::vector<PathStep> path(std::size_t s, std::size_t t) const;

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_arc_;
  std::vector<std::size_t> depth_;
  std::vector<char> arc_points_up_;  // parent arc oriented child -> parent
};

bool is_spanning_tree(const ArcGraph& g);

// |A_0| x |A| network matrix of tree T and digraph D on T's vertex set.
IntMatrix network_matrix(const ArcGraph& tree, const ArcGraph& digraph);

struct TransposeExtension {
  IntMatrix matrix;  // (I | M')
  ArcGraph tree;
  ArcGraph digraph;
};

// Given M' = network_matrix(T', D')^T, builds the realization of (I | M') as
// the transpose of a network matrix: each arc s -> t of D' gets a new vertex v,
// a new tree arc v -> s (listed before the old tree arcs) and the digraph arc
// v -> t.
TransposeExtension transpose_extension(const IntMatrix& m_prime, const ArcGraph& tree,
                                       const ArcGraph& digraph);

// Set of path indices using a tree edge, as a bitset over at most 64 paths.
struct Pattern {
  std::uint64_t bits = 0;

  int size() const noexcept { return __builtin_popcountll(bits); }
  bool contains(std::size_t j) const noexcept { return (bits >> j) & 1u; }
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

// Distinct nonempty patterns over all tree edges, sorted.
std::vector<Pattern> edge_patterns(const ArcGraph& tree, std::span<const EndpointPair> paths);

struct PatternReport {
  std::size_t paths = 0;
  std::size_t count = 0;
  std::size_t odd_count = 0;
  bool bound_ok = true;      // count <= 3m - 3 (checked for m >= 2)
  bool odd_bound_ok = true;  // odd_count <= 3m - 5 (checked for m >= 3)
};

PatternReport verify_pattern_bounds(const ArcGraph& tree, std::span<const EndpointPair> paths);

struct NetworkBoundReport {
  bool applicable = false;  // distinct columns, all column sums positive and odd
  std::size_t arcs = 0;
  std::size_t tree_arcs = 0;
  double bound = 0;  // (|A_0| + 1)^2 / 4
  bool bipartite = false;
  bool equality = false;
  bool equality_structure_ok = true;  // equality => |A_0| odd, K_{k,k}
  bool ok = true;
};

NetworkBoundReport verify_network_column_bound(const ArcGraph& tree, const ArcGraph& digraph);

struct TransposeRowReport {
  std::size_t arcs = 0;
  std::size_t distinct_pos_rows = 0;
  std::size_t distinct_pos_odd_rows = 0;
  bool compared = false;      // |A| >= 2
  bool odd_compared = false;  // |A| >= 3
  bool bounds_ok = true;
  // Distinct rows with positive sum stay distinct after reduction mod 2.
  bool mod2_distinct = true;
};

TransposeRowReport verify_transpose_row_bound(const IntMatrix& network);

// Random spanning tree: vertex i > 0 attaches to a uniformly chosen earlier
// vertex with random orientation, then labels are shuffled.
ArcGraph random_tree(std::size_t vertices, std::mt19937_64& rng);
// Loop-free random arcs on the given vertex set.
ArcGraph random_digraph(std::size_t vertices, std::size_t arcs, std::mt19937_64& rng);

// One representative of each isomorphism class of trees on n vertices
// (arcs oriented from the smaller to the larger label).
std::vector<ArcGraph> nonisomorphic_trees(std::size_t n);

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;  // instances logged but not compared
  std::size_t equality_cases = 0;
};

// Random network instances with |A_0| <= max_tree_arcs, digraphs filtered to
// the distinct-positive-odd-column premise; counts premise instances only.
SweepSummary sweep_network_bound(std::size_t samples, std::uint64_t seed, std::size_t max_tree_arcs = 7);

// Random trees with <= max_tree_arcs edges and |A| <= max_arcs.
SweepSummary sweep_transpose_bound(std::size_t samples, std::uint64_t seed,
                                   std::size_t max_tree_arcs = 12, std::size_t max_arcs = 5);

// Every tree with <= max_edges edges and every set of m distinct nontrivial
// paths, 2 <= m <= max_paths.
SweepSummary sweep_pattern_bounds(std::size_t max_edges = 7, std::size_t max_paths = 4);

}  // namespace tumax
