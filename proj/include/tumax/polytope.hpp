#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tumax/matrix.hpp"

namespace tumax {

// Distinct lattice points in Z^dim, stored as the columns of `points`.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(IntMatrix points);

  std::size_t dim() const noexcept { return points_.rows(); }
  std::size_t size() const noexcept { return points_.cols(); }
  const IntMatrix& points() const noexcept { return points_; }
  IntVector point(std::size_t i) const { return points_.column(i); }
  bool is_01() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  IntMatrix points_;
};

// Exact feasibility of p = sum l_i q_i, sum l_i = 1, l >= 0 over the columns q_i.
bool in_convex_hull(const IntMatrix& points, std::span<const Int> p);

struct HullResult {
  PointSet vertices;
  std::vector<std::size_t> vertex_indices;
  std::vector<std::size_t> non_vertex_indices;
  // For 0/1 input: every point of {0,1}^d lying in the hull.
  std::optional<std::vector<IntVector>> cube_points;
};

HullResult vertex_hull(const PointSet& s);

struct UnimodularPolytopeVerdict {
  bool unimodular = false;
  int dimension = -1;
  std::optional<IndexSet> witness;  // vertex indices of a non-unimodular simplex
  Int witness_volume = 0;           // its determinant in lattice coordinates
};

// Every full-dimensional simplex on the vertex set, measured in the lattice
// aff(V) ∩ Z^d, has determinant +-1. Throws PreconditionError when some point
// is not a vertex and DomainError for an empty set.
UnimodularPolytopeVerdict is_unimodular_polytope(const PointSet& v);

// Points e_i + e_j in Z^vertices for the edges {i, j}; part[v] in {0, 1}.
PointSet edge_polytope(std::size_t vertices, const std::vector<int>& part,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges);
PointSet complete_bipartite_edge_polytope(std::size_t a, std::size_t b);

// Vertices of Delta_a x Delta_b in Z^(a+b), index (i, j) at position i*(b+1)+j.
PointSet simplex_product(std::size_t a, std::size_t b);

struct StandardForm {
  IntMatrix matrix;                       // (I | B) = R^-1 * M[:, permutation]
  IntMatrix b;
  IntMatrix r;                            // leftmost basis columns of M
  std::vector<std::size_t> permutation;   // output column k is input column permutation[k]
};

StandardForm normalize_standard_form(const IntMatrix& m);

struct AffineLatticeMap {
  IntMatrix linear;   // in affine lattice coordinates of P and Q
  IntVector offset;
  std::vector<std::size_t> image;  // point i of P maps to point image[i] of Q
};

std::optional<AffineLatticeMap> find_lattice_isomorphism(const PointSet& p, const PointSet& q);
bool lattice_isomorphic(const PointSet& p, const PointSet& q);

// Affine-lattice invariant: dimension, point count, sorted pairwise lattice
// lengths, sorted per-point simplex counts and dependent-subset counts.
std::vector<Int> fingerprint(const PointSet& p);

struct PolytopeClass {
  int dimension = 0;
  std::size_t vertex_count = 0;
  PointSet vertices;
  std::vector<Int> fingerprint;
};

struct ClassifyOptions {
  bool use_vertex_bound = true;  // cap subsets at h(d + 1) points
  bool stretch = false;          // allow d = 5
};

struct Classification {
  std::vector<PolytopeClass> classes;
  std::uint64_t subsets_visited = 0;
  std::size_t symmetry_classes = 0;  // candidates after cube-symmetry reduction
};

Classification classify_unimodular(int d, const ClassifyOptions& options = {});

struct VertexBoundReport {
  int dimension = 0;
  std::size_t vertices = 0;
  std::size_t bound = 0;
  bool ok = false;
  bool tight = false;
};

// 10 for d = 4, floor((d + 2)^2 / 4) otherwise.
std::size_t vertex_bound(int d);
VertexBoundReport vertex_bound_check(const PointSet& p);

}  // namespace tumax
