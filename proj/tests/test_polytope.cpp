#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tumax/certify.hpp"
#include "tumax/families.hpp"
#include "tumax/polytope.hpp"

using namespace tumax;

namespace {

PointSet points(std::size_t d, std::vector<IntVector> cols) { return PointSet(IntMatrix::from_columns(d, cols)); }

PointSet standard_simplex(std::size_t d) {
  std::vector<IntVector> cols{IntVector(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d, 0);
    e[i] = 1;
    cols.push_back(e);
  }
  return points(d, cols);
}

Int cross(const IntVector& o, const IntVector& a, const IntVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const IntVector& a, const IntVector& b, const IntVector& p) {
  return cross(a, b, p) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool in_triangle(const IntVector& a, const IntVector& b, const IntVector& c, const IntVector& p) {
  Int d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
  bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

// Planar hull membership by Caratheodory over triangles and segments.
bool planar_in_hull(const std::vector<IntVector>& pts, const IntVector& p) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (pts[i] == p) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (on_segment(pts[i], pts[j], p)) return true;
      for (std::size_t k = j + 1; k < n; ++k)
        if (cross(pts[i], pts[j], pts[k]) != 0 && in_triangle(pts[i], pts[j], pts[k], p)) return true;
    }
  }
  return false;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t d) {
  IntMatrix u = IntMatrix::identity(d);
  if (d < 2) return d == 1 && rng() % 2 ? u.negated() : u;
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  for (int step = 0; step < 6; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    Int s = rng() % 2 ? 1 : -1;
    std::vector<Int> e(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1;
    e[a * d + b] = s;
    u = multiply(IntMatrix(d, d, e), u);
  }
  return u;
}

PointSet transformed(std::mt19937_64& rng, const PointSet& p, bool shuffle) {
  const std::size_t d = p.dim();
  IntMatrix u = random_unimodular(rng, d);
  std::uniform_int_distribution<Int> shift(-3, 3);
  IntVector t(d);
  for (auto& x : t) x = shift(rng);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < p.size(); ++j) {
    IntVector y = multiply(u, p.point(j));
    for (std::size_t i = 0; i < d; ++i) y[i] += t[i];
    cols.push_back(y);
  }
  if (shuffle) std::shuffle(cols.begin(), cols.end(), rng);
  return points(d, cols);
}

}  // namespace

TEST_CASE("vertex hull examples") {
  for (std::size_t d = 1; d <= 5; ++d) {
    HullResult r = vertex_hull(standard_simplex(d));
    CHECK(r.non_vertex_indices.empty());
    CHECK(r.vertices.size() == d + 1);
  }
  HullResult line = vertex_hull(points(1, {{0}, {1}, {2}}));
  CHECK(line.non_vertex_indices == std::vector<std::size_t>{1});
  CHECK(line.vertices.size() == 2);

  IntMatrix ex4 = ex4_matrix();
  HullResult r4 = vertex_hull(PointSet(ex4));
  CHECK(r4.vertex_indices.size() == 10);
  REQUIRE(r4.cube_points.has_value());
  CHECK(r4.cube_points->size() == 10);

  CHECK_THROWS_AS(PointSet(IntMatrix{{0, 0}, {1, 1}}), UsageError);
}

TEST_CASE("convex hull agrees with a planar oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> coord(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::set<IntVector> uniq;
    std::size_t n = 2 + rng() % 6;
    while (uniq.size() < n) uniq.insert({coord(rng), coord(rng)});
    std::vector<IntVector> pts(uniq.begin(), uniq.end());
    IntMatrix m = IntMatrix::from_columns(2, pts);
    IntVector probe{coord(rng), coord(rng)};
    REQUIRE(in_convex_hull(m, probe) == planar_in_hull(pts, probe));
    HullResult r = vertex_hull(PointSet(m));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      std::vector<IntVector> others = pts;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(j));
      bool vertex = !planar_in_hull(others, pts[j]);
      bool listed = std::find(r.vertex_indices.begin(), r.vertex_indices.end(), j) != r.vertex_indices.end();
      REQUIRE(vertex == listed);
    }
  }
}

TEST_CASE("unimodular polytope examples") {
  auto seg = is_unimodular_polytope(points(1, {{1}, {2}}));
  CHECK(seg.unimodular);
  CHECK(seg.dimension == 1);
  auto wide = is_unimodular_polytope(points(1, {{-1}, {1}}));
  CHECK_FALSE(wide.unimodular);
  CHECK(wide.witness_volume * wide.witness_volume == 4);
  CHECK_FALSE(is_unimodular_polytope(points(1, {{0}, {2}})).unimodular);
  CHECK_THROWS_AS(is_unimodular_polytope(points(1, {{0}, {1}, {2}})), PreconditionError);
  CHECK_THROWS_AS(is_unimodular_polytope(PointSet(IntMatrix(3, 0))), DomainError);

  // a lower-dimensional segment measured in its own lattice
  CHECK(is_unimodular_polytope(points(3, {{1, 0, 0}, {0, 1, 0}})).unimodular);
  CHECK_FALSE(is_unimodular_polytope(points(2, {{0, 0}, {2, 2}})).unimodular);
  CHECK(is_unimodular_polytope(points(2, {{0, 0}, {1, 1}})).dimension == 1);

  auto ex4 = is_unimodular_polytope(PointSet(ex4_matrix()));
  CHECK(ex4.unimodular);
  CHECK(ex4.dimension == 4);

  // unit square is unimodular, the triangle with vertex (2,1) is not
  CHECK(is_unimodular_polytope(points(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})).unimodular);
  CHECK_FALSE(is_unimodular_polytope(points(2, {{0, 0}, {1, 0}, {1, 2}})).unimodular);
}

TEST_CASE("edge polytopes and simplex products") {
  PointSet k22 = complete_bipartite_edge_polytope(2, 2);
  CHECK(k22.size() == 4);
  CHECK(lattice_isomorphic(k22, simplex_product(1, 1)));
  PointSet k33 = complete_bipartite_edge_polytope(3, 3);
  CHECK(k33.size() == 9);
  auto v33 = is_unimodular_polytope(k33);
  CHECK(v33.unimodular);
  CHECK(v33.dimension == 4);
  CHECK(lattice_isomorphic(k33, simplex_product(2, 2)));

  PointSet single = edge_polytope(2, {0, 1}, {{0, 1}});
  CHECK(single.size() == 1);
  CHECK(is_unimodular_polytope(single).dimension == 0);
  CHECK_THROWS_AS(edge_polytope(3, {0, 0, 1}, {{0, 1}}), StructureError);
  CHECK_THROWS_AS(edge_polytope(3, {0, 1, 1}, {{0, 1}, {0, 1}}), UsageError);

  struct Case {
    std::size_t a, b, n;
  };
  for (Case c : {Case{2, 2, 9}, Case{3, 3, 16}, Case{4, 3, 20}}) {
    PointSet p = simplex_product(c.a, c.b);
    CHECK(p.size() == c.n);
    CHECK(vertex_hull(p).non_vertex_indices.empty());
    auto v = is_unimodular_polytope(p);
    CHECK(v.unimodular);
    CHECK(v.dimension == static_cast<int>(c.a + c.b));
  }
  CHECK_FALSE(lattice_isomorphic(simplex_product(1, 2), simplex_product(3, 0)));
}

TEST_CASE("standard form") {
  // the unit square lifted to height one
  IntMatrix sq{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  StandardForm f = normalize_standard_form(sq);
  CHECK(f.b == IntMatrix{{-1}, {1}, {1}});
  CHECK(f.permutation == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(multiply(f.r, f.matrix) == sq);

  IntMatrix sp = sporadic_5x10();
  StandardForm fs = normalize_standard_form(sp);
  CHECK(fs.matrix == sp);

  for (std::size_t m = 1; m <= 4; ++m) {
    StandardForm fi = normalize_standard_form(IntMatrix::identity(m));
    CHECK(fi.matrix == IntMatrix::identity(m));
    CHECK(fi.b.cols() == 0);
  }
  CHECK_THROWS_AS(normalize_standard_form(IntMatrix{{1, 1}, {1, -1}}), PreconditionError);
  CHECK_THROWS_AS(normalize_standard_form(IntMatrix{{1, 1}, {1, 1}}), PreconditionError);

  // columns of a polytopal TU matrix after normalization sum to one
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    PointSet s = simplex_product(1 + rng() % 2, 1 + rng() % 2);
    IntMatrix lifted = s.points().with_row(IntVector(s.size(), 1));
    StandardForm sf = normalize_standard_form(lifted);
    CHECK(left_multiply(IntVector(lifted.rows(), 1), sf.matrix) == IntVector(lifted.cols(), 1));
    CHECK(oracle::brute_force_tu(sf.matrix));
  }
}

TEST_CASE("lattice isomorphism is an equivalence on small classes") {
  std::mt19937_64 rng(7);
  for (int d = 1; d <= 3; ++d) {
    Classification c = classify_unimodular(d);
    for (const auto& cls : c.classes) {
      PointSet p = cls.vertices;
      PointSet q = transformed(rng, p, true);
      PointSet r = transformed(rng, q, true);
      CHECK(lattice_isomorphic(p, p));
      CHECK(lattice_isomorphic(p, q));
      CHECK(lattice_isomorphic(q, p));
      CHECK(lattice_isomorphic(q, r));
      CHECK(lattice_isomorphic(p, r));
      CHECK(fingerprint(p) == fingerprint(q));
      auto map = find_lattice_isomorphism(p, q);
      REQUIRE(map.has_value());
      std::set<std::size_t> image(map->image.begin(), map->image.end());
      CHECK(image.size() == p.size());
      CHECK(std::abs(determinant(map->linear)) == 1);
    }
    for (std::size_t i = 0; i < c.classes.size(); ++i)
      for (std::size_t j = i + 1; j < c.classes.size(); ++j)
        CHECK_FALSE(lattice_isomorphic(c.classes[i].vertices, c.classes[j].vertices));
  }
}

TEST_CASE("classification of 0/1 unimodular polytopes") {
  const std::size_t expected[] = {0, 1, 2, 4, 13};
  for (int d = 1; d <= 4; ++d) {
    Classification c = classify_unimodular(d);
    CHECK(c.classes.size() == expected[d]);
    std::size_t most = 0;
    for (const auto& cls : c.classes) {
      CHECK(cls.dimension == d);
      CHECK(cls.vertex_count == cls.vertices.size());
      most = std::max(most, cls.vertex_count);
      auto v = is_unimodular_polytope(cls.vertices);
      CHECK(v.unimodular);
      CHECK(v.dimension == d);
      HullResult hull = vertex_hull(cls.vertices);
      CHECK(hull.non_vertex_indices.empty());
      REQUIRE(hull.cube_points.has_value());
      CHECK(hull.cube_points->size() == cls.vertices.size());
      CHECK(cls.vertex_count <= vertex_bound(d));
    }
    CHECK(most == vertex_bound(d));
  }
  Classification c4 = classify_unimodular(4);
  bool ex4_found = false;
  for (const auto& cls : c4.classes)
    if (lattice_isomorphic(cls.vertices, PointSet(ex4_matrix()))) ex4_found = cls.vertex_count == 10;
  CHECK(ex4_found);

  Classification open4 = classify_unimodular(4, {.use_vertex_bound = false});
  CHECK(open4.classes.size() == 13);
  CHECK(open4.subsets_visited >= c4.subsets_visited);

  CHECK_THROWS_AS(classify_unimodular(5), BudgetExceeded);
  CHECK_THROWS_AS(classify_unimodular(0), DomainError);
}

TEST_CASE("vertex bound") {
  CHECK(vertex_bound(1) == 2);
  CHECK(vertex_bound(2) == 4);
  CHECK(vertex_bound(3) == 6);
  CHECK(vertex_bound(4) == 10);
  CHECK(vertex_bound(5) == 12);
  CHECK(vertex_bound(6) == 16);
  for (int d = 1; d <= 12; ++d) CHECK(vertex_bound(d) == static_cast<std::size_t>(h(d + 1)));

  VertexBoundReport r = vertex_bound_check(PointSet(ex4_matrix()));
  CHECK(r.ok);
  CHECK(r.tight);
  CHECK(vertex_bound_check(simplex_product(3, 3)).tight);
  CHECK(vertex_bound_check(simplex_product(4, 3)).ok);
  CHECK_FALSE(vertex_bound_check(standard_simplex(4)).tight);
  CHECK_THROWS_AS(vertex_bound_check(points(1, {{0}, {2}})), PreconditionError);
}
