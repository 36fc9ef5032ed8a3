#include "tumax/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tumax/certify.hpp"
#include "tumax/combinatorics.hpp"
#include "tumax/families.hpp"
#include "tumax/lattice.hpp"

namespace tumax {

PointSet::PointSet(IntMatrix points) : points_(std::move(points)) {
  auto dup = columns_distinct(points_);
  if (!dup.distinct) {
    throw UsageError("point set has repeated points " + std::to_string(dup.first_pair->first) + " and " +
                     std::to_string(dup.first_pair->second));
  }
}

bool PointSet::is_01() const {
  return std::all_of(points_.entries().begin(), points_.entries().end(), [](Int x) { return x == 0 || x == 1; });
}

namespace {

using RationalRow = std::vector<Rational>;

// Phase-one simplex with Bland's rule: is {x >= 0 : a x = b} nonempty?
bool lp_feasible(std::vector<RationalRow> a, RationalRow b) {
  const std::size_t m = a.size();
  if (m == 0) return true;
  const std::size_t n = a[0].size();
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < Rational(0)) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  const std::size_t cols = n + m;
  std::vector<RationalRow> t(m, RationalRow(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = Rational(1);
    t[i][cols] = b[i];
    basis[i] = n + i;
  }
  RationalRow obj(cols + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] -= t[i][j];
    obj[cols] -= t[i][cols];
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] < Rational(0)) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(t[i][enter] > Rational(0))) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (!obj[enter].is_zero()) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return obj[cols].is_zero();
}

IntMatrix without_column(const IntMatrix& m, std::size_t skip) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != skip) keep.push_back(j);
  return m.select_columns(keep);
}

// k x k matrix of differences p_i - p_0 over the chosen columns (first is base).
IntMatrix difference_matrix(const IntMatrix& pts, std::span<const std::size_t> idx) {
  const std::size_t k = pts.rows();
  std::vector<Int> data(k * (idx.size() - 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 1; j < idx.size(); ++j)
      data[i * (idx.size() - 1) + j - 1] = checked_sub(pts(i, idx[j]), pts(i, idx[0]));
  return IntMatrix(k, idx.size() - 1, std::move(data));
}

Int gcd_length(const IntMatrix& pts, std::size_t a, std::size_t b) {
  Int g = 0;
  for (std::size_t i = 0; i < pts.rows(); ++i) g = std::gcd(g, checked_sub(pts(i, a), pts(i, b)));
  return g;
}

struct SimplexStats {
  std::vector<Int> per_point;         // full-dimensional simplices through each point
  std::vector<Int> dependent;         // affinely dependent t-subsets, t = 3..k+1
  std::vector<Int> volumes;           // sorted |det| of full-dimensional simplices
};

SimplexStats simplex_stats(const IntMatrix& coords) {
  const std::size_t k = coords.rows(), n = coords.cols();
  SimplexStats st;
  st.per_point.assign(n, 0);
  for (std::size_t t = 3; t <= k + 1 && t <= n; ++t) {
    Int dep = 0;
    for_each_combination(n, t, [&](const std::vector<std::size_t>& idx) {
      IntMatrix d = difference_matrix(coords, idx);
      if (t == k + 1) {
        Int det = determinant(d);
        if (det == 0) {
          ++dep;
        } else {
          st.volumes.push_back(det < 0 ? -det : det);
          for (std::size_t i : idx) ++st.per_point[i];
        }
      } else if (rank(d) < t - 1) {
        ++dep;
      }
      return true;
    });
    st.dependent.push_back(dep);
  }
  if (k + 1 <= 2 && n >= k + 1) {
    // segments and points: every (k+1)-subset is a simplex
    for_each_combination(n, k + 1, [&](const std::vector<std::size_t>& idx) {
      Int det = k == 0 ? 1 : determinant(difference_matrix(coords, idx));
      if (det != 0) {
        st.volumes.push_back(det < 0 ? -det : det);
        for (std::size_t i : idx) ++st.per_point[i];
      }
      return true;
    });
  }
  std::sort(st.volumes.begin(), st.volumes.end());
  return st;
}

}  // namespace

bool in_convex_hull(const IntMatrix& points, std::span<const Int> p) {
  if (p.size() != points.rows()) throw UsageError("point dimension does not match the point set");
  if (points.cols() == 0) return false;
  const std::size_t d = points.rows(), n = points.cols();
  std::vector<RationalRow> a(d + 1, RationalRow(n));
  RationalRow b(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(points(i, j));
    b[i] = Rational(p[i]);
  }
  for (std::size_t j = 0; j < n; ++j) a[d][j] = Rational(1);
  b[d] = Rational(1);
  return lp_feasible(std::move(a), std::move(b));
}

HullResult vertex_hull(const PointSet& s) {
  HullResult r;
  const IntMatrix& pts = s.points();
  for (std::size_t j = 0; j < s.size(); ++j) {
    IntVector p = pts.column(j);
    if (s.size() > 1 && in_convex_hull(without_column(pts, j), p)) {
      r.non_vertex_indices.push_back(j);
    } else {
      r.vertex_indices.push_back(j);
    }
  }
  r.vertices = PointSet(pts.select_columns(r.vertex_indices));
  if (s.is_01() && s.dim() <= 16) {
    std::set<IntVector> present;
    for (std::size_t j = 0; j < s.size(); ++j) present.insert(pts.column(j));
    std::vector<IntVector> cube;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << s.dim()); ++code) {
      IntVector x(s.dim());
      for (std::size_t i = 0; i < s.dim(); ++i) x[i] = static_cast<Int>((code >> i) & 1u);
      if (present.count(x) || in_convex_hull(pts, x)) cube.push_back(x);
    }
    std::sort(cube.begin(), cube.end());
    r.cube_points = std::move(cube);
  }
  return r;
}

UnimodularPolytopeVerdict is_unimodular_polytope(const PointSet& v) {
  if (v.size() == 0) throw DomainError("empty point set has no dimension");
  HullResult hull = vertex_hull(v);
  if (!hull.non_vertex_indices.empty()) {
    throw PreconditionError("point " + std::to_string(hull.non_vertex_indices.front()) +
                            " is not a vertex of the convex hull");
  }
  UnimodularPolytopeVerdict out;
  IntMatrix coords = affine_lattice_coordinates(v.points());
  const std::size_t k = coords.rows();
  out.dimension = static_cast<int>(k);
  out.unimodular = true;
  if (k == 0) return out;
  for_each_combination(v.size(), k + 1, [&](const std::vector<std::size_t>& idx) {
    Int det = determinant(difference_matrix(coords, idx));
    if (det > 1 || det < -1) {
      out.unimodular = false;
      out.witness = IndexSet(idx);
      out.witness_volume = det;
      return false;
    }
    return true;
  });
  return out;
}

PointSet edge_polytope(std::size_t vertices, const std::vector<int>& part,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (part.size() != vertices) throw UsageError("part assignment needs one entry per vertex");
  std::vector<IntVector> cols;
  for (auto [i, j] : edges) {
    if (i >= vertices || j >= vertices) throw UsageError("edge endpoint out of range");
    if (part[i] == part[j]) {
      throw StructureError("edge {" + std::to_string(i) + ", " + std::to_string(j) + "} lies inside one part");
    }
    IntVector c(vertices, 0);
    c[i] = 1;
    c[j] = 1;
    cols.push_back(std::move(c));
  }
  return PointSet(IntMatrix::from_columns(vertices, cols));
}

PointSet complete_bipartite_edge_polytope(std::size_t a, std::size_t b) {
  std::vector<int> part(a + b, 1);
  std::fill(part.begin(), part.begin() + static_cast<std::ptrdiff_t>(a), 0);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return edge_polytope(a + b, part, edges);
}

PointSet simplex_product(std::size_t a, std::size_t b) {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i <= a; ++i)
    for (std::size_t j = 0; j <= b; ++j) {
      IntVector c(a + b, 0);
      if (i > 0) c[i - 1] = 1;
      if (j > 0) c[a + j - 1] = 1;
      cols.push_back(std::move(c));
    }
  return PointSet(IntMatrix::from_columns(a + b, cols));
}

StandardForm normalize_standard_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  if (rank(m) != rows) throw PreconditionError("matrix does not have full row rank");
  if (!is_unimodular(m)) throw PreconditionError("matrix is not unimodular");
  if (!polytopal_certificate(m)) throw PreconditionError("matrix is not polytopal");

  std::vector<std::size_t> basis;
  for (std::size_t j = 0; j < m.cols() && basis.size() < rows; ++j) {
    basis.push_back(j);
    if (rank(m.select_columns(basis)) < basis.size()) basis.pop_back();
  }
  StandardForm out;
  out.permutation = basis;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!std::binary_search(basis.begin(), basis.end(), j)) out.permutation.push_back(j);
  out.r = m.select_columns(basis);
  out.matrix = multiply(unimodular_inverse(out.r), m.select_columns(out.permutation));
  std::vector<std::size_t> rest(m.cols() - rows);
  std::iota(rest.begin(), rest.end(), rows);
  out.b = out.matrix.select_columns(rest);

  if (left_multiply(IntVector(rows, 1), out.matrix) != IntVector(m.cols(), 1))
    throw std::logic_error("standard form columns do not sum to 1");
  if (!certify_tu(out.matrix).is_tu) throw std::logic_error("standard form is not TU");
  return out;
}

namespace {

std::vector<RationalRow> rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<RationalRow> t(n, RationalRow(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = Rational(a(i, j));
    t[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && t[p][c].is_zero()) ++p;
    if (p == n) throw std::logic_error("singular frame");
    std::swap(t[p], t[c]);
    Rational piv = t[c][c];
    for (auto& x : t[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || t[i][c].is_zero()) continue;
      Rational f = t[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) t[i][j] -= f * t[c][j];
    }
  }
  std::vector<RationalRow> inv(n, RationalRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = t[i][n + j];
  return inv;
}

struct PointInvariants {
  std::vector<std::vector<Int>> per_point;  // simplex count then sorted lattice lengths
};

PointInvariants point_invariants(const IntMatrix& coords) {
  SimplexStats st = simplex_stats(coords);
  PointInvariants inv;
  for (std::size_t i = 0; i < coords.cols(); ++i) {
    std::vector<Int> lengths;
    for (std::size_t j = 0; j < coords.cols(); ++j)
      if (j != i) lengths.push_back(gcd_length(coords, i, j));
    std::sort(lengths.begin(), lengths.end());
    std::vector<Int> key{st.per_point[i]};
    key.insert(key.end(), lengths.begin(), lengths.end());
    inv.per_point.push_back(std::move(key));
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const IntMatrix& p, const IntMatrix& q) : p_(p), q_(q), k_(p.rows()) {
    for (std::size_t j = 0; j < q_.cols(); ++j) q_index_[q_.column(j)] = j;
    pinv_ = point_invariants(p_);
    qinv_ = point_invariants(q_);
    // leftmost affinely independent frame of P
    frame_.push_back(0);
    for (std::size_t j = 1; j < p_.cols() && frame_.size() < k_ + 1; ++j) {
      frame_.push_back(j);
      if (rank(difference_matrix(p_, frame_)) < frame_.size() - 1) frame_.pop_back();
    }
    IntMatrix pd = difference_matrix(p_, frame_);
    pdet_ = determinant(pd);
    pd_inverse_ = rational_inverse(pd);
  }

  std::optional<AffineLatticeMap> run() {
    chosen_.clear();
    if (extend()) return result_;
    return std::nullopt;
  }

 private:
  bool extend() {
    const std::size_t slot = chosen_.size();
    if (slot == k_ + 1) return try_frame();
    for (std::size_t j = 0; j < q_.cols(); ++j) {
      if (std::find(chosen_.begin(), chosen_.end(), j) != chosen_.end()) continue;
      if (qinv_.per_point[j] != pinv_.per_point[frame_[slot]]) continue;
      bool lengths = true;
      for (std::size_t s = 0; s < slot && lengths; ++s)
        lengths = gcd_length(q_, chosen_[s], j) == gcd_length(p_, frame_[s], frame_[slot]);
      if (!lengths) continue;
      chosen_.push_back(j);
      bool independent = slot == 0 || rank(difference_matrix(q_, chosen_)) == slot;
      if (independent && extend()) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool try_frame() {
    IntMatrix qd = difference_matrix(q_, chosen_);
    Int qdet = determinant(qd);
    if (qdet != pdet_ && qdet != -pdet_) return false;
    // L = Qd * Pd^-1 must be integral
    std::vector<Int> l(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) {
        Rational s;
        for (std::size_t t = 0; t < k_; ++t) s += Rational(qd(i, t)) * pd_inverse_[t][j];
        if (!s.is_integer()) return false;
        l[i * k_ + j] = s.num();
      }
    IntMatrix lin(k_, k_, std::move(l));
    std::vector<std::size_t> image(p_.cols());
    for (std::size_t j = 0; j < p_.cols(); ++j) {
      IntVector x(k_);
      for (std::size_t i = 0; i < k_; ++i) x[i] = checked_sub(p_(i, j), p_(i, frame_[0]));
      IntVector y = multiply(lin, x);
      for (std::size_t i = 0; i < k_; ++i) y[i] = checked_add(y[i], q_(i, chosen_[0]));
      auto it = q_index_.find(y);
      if (it == q_index_.end()) return false;
      image[j] = it->second;
    }
    IntVector offset(k_);
    IntVector p0(k_);
    for (std::size_t i = 0; i < k_; ++i) p0[i] = p_(i, frame_[0]);
    IntVector lp0 = multiply(lin, p0);
    for (std::size_t i = 0; i < k_; ++i) offset[i] = checked_sub(q_(i, chosen_[0]), lp0[i]);
    result_ = AffineLatticeMap{std::move(lin), std::move(offset), std::move(image)};
    return true;
  }

  const IntMatrix& p_;
  const IntMatrix& q_;
  std::size_t k_;
  std::map<IntVector, std::size_t> q_index_;
  PointInvariants pinv_, qinv_;
  std::vector<std::size_t> frame_;
  Int pdet_ = 1;
  std::vector<RationalRow> pd_inverse_;
  std::vector<std::size_t> chosen_;
  AffineLatticeMap result_;
};

}  // namespace

std::optional<AffineLatticeMap> find_lattice_isomorphism(const PointSet& p, const PointSet& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.size() == 0) return AffineLatticeMap{};
  IntMatrix pc = affine_lattice_coordinates(p.points());
  IntMatrix qc = affine_lattice_coordinates(q.points());
  if (pc.rows() != qc.rows()) return std::nullopt;
  if (pc.rows() == 0) return AffineLatticeMap{IntMatrix(0, 0), {}, {0}};
  return IsoSearch(pc, qc).run();
}

bool lattice_isomorphic(const PointSet& p, const PointSet& q) { return find_lattice_isomorphism(p, q).has_value(); }

std::vector<Int> fingerprint(const PointSet& p) {
  IntMatrix coords = p.size() == 0 ? IntMatrix(0, 0) : affine_lattice_coordinates(p.points());
  std::vector<Int> fp{static_cast<Int>(coords.rows()), static_cast<Int>(p.size())};
  std::vector<Int> lengths;
  for (std::size_t i = 0; i < coords.cols(); ++i)
    for (std::size_t j = i + 1; j < coords.cols(); ++j) lengths.push_back(gcd_length(coords, i, j));
  std::sort(lengths.begin(), lengths.end());
  fp.insert(fp.end(), lengths.begin(), lengths.end());
  SimplexStats st = simplex_stats(coords);
  std::vector<Int> per = st.per_point;
  std::sort(per.begin(), per.end());
  fp.insert(fp.end(), per.begin(), per.end());
  fp.insert(fp.end(), st.dependent.begin(), st.dependent.end());
  fp.insert(fp.end(), st.volumes.begin(), st.volumes.end());
  return fp;
}

namespace {

class CubeEnumerator {
 public:
  CubeEnumerator(int d, std::size_t cap) : d_(d), n_(std::size_t{1} << d), cap_(cap) {
    for (std::size_t code = 0; code < n_; ++code) {
      IntVector x(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = static_cast<Int>((code >> i) & 1u);
      points_.push_back(std::move(x));
    }
    // hyperoctahedral group acting on point codes
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t flip = 0; flip < n_; ++flip) {
        std::vector<std::uint8_t> table(n_);
        for (std::size_t code = 0; code < n_; ++code) {
          std::size_t image = 0;
          for (int i = 0; i < d; ++i)
            if ((code >> i) & 1u) image |= std::size_t{1} << perm[static_cast<std::size_t>(i)];
          table[code] = static_cast<std::uint8_t>(image ^ flip);
        }
        group_.push_back(std::move(table));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void run() {
    current_.push_back(0);
    dfs(1);
  }

  const std::set<std::uint64_t>& canonical() const { return canonical_; }
  std::uint64_t visited() const { return visited_; }
  const std::vector<IntVector>& points() const { return points_; }

 private:
  void dfs(std::size_t next) {
    ++visited_;
    const std::size_t d = static_cast<std::size_t>(d_);
    if (current_.size() >= d + 1 && full_dimensional()) canonical_.insert(canonical_mask());
    if (current_.size() >= cap_) return;
    for (std::size_t q = next; q < n_; ++q) {
      if (!compatible(q)) continue;
      current_.push_back(q);
      dfs(q + 1);
      current_.pop_back();
    }
  }

  // every full-dimensional simplex through q and d current points is unimodular
  bool compatible(std::size_t q) const {
    const std::size_t d = static_cast<std::size_t>(d_);
    if (current_.size() < d) return true;
    return for_each_combination(current_.size(), d, [&](const std::vector<std::size_t>& idx) {
      std::vector<Int> data(d * d);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) data[i * d + j] = points_[current_[idx[j]]][i] - points_[q][i];
      Int det = determinant(IntMatrix(d, d, std::move(data)));
      return det >= -1 && det <= 1;
    });
  }

  bool full_dimensional() const {
    const std::size_t d = static_cast<std::size_t>(d_);
    std::vector<IntVector> cols;
    for (std::size_t c : current_) cols.push_back(points_[c]);
    // first point is the origin, so the affine span is the linear span
    return rank(IntMatrix::from_columns(d, cols)) == d;
  }

  std::uint64_t canonical_mask() const {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& table : group_) {
      std::uint64_t mask = 0;
      for (std::size_t c : current_) mask |= std::uint64_t{1} << table[c];
      best = std::min(best, mask);
    }
    return best;
  }

  int d_;
  std::size_t n_;
  std::size_t cap_;
  std::vector<IntVector> points_;
  std::vector<std::vector<std::uint8_t>> group_;
  std::vector<std::size_t> current_;
  std::set<std::uint64_t> canonical_;
  std::uint64_t visited_ = 0;
};

}  // namespace

Classification classify_unimodular(int d, const ClassifyOptions& options) {
  if (d < 1) throw DomainError("dimension must be at least 1");
  if (d > 5) throw BudgetExceeded("classification is limited to dimension <= 5");
  if (d == 5 && !options.stretch) throw BudgetExceeded("dimension 5 classification requires the stretch flag");
  if (d == 5 && !options.use_vertex_bound) throw BudgetExceeded("dimension 5 needs the vertex-count ceiling");

  const std::size_t n = std::size_t{1} << d;
  const std::size_t cap = options.use_vertex_bound ? static_cast<std::size_t>(h(d + 1)) : n;
  CubeEnumerator en(d, cap);
  en.run();

  Classification out;
  out.subsets_visited = en.visited();
  out.symmetry_classes = en.canonical().size();
  std::map<std::vector<Int>, std::vector<std::size_t>> by_fingerprint;
  for (std::uint64_t mask : en.canonical()) {
    std::vector<IntVector> cols;
    for (std::size_t c = 0; c < n; ++c)
      if ((mask >> c) & 1u) cols.push_back(en.points()[c]);
    PointSet s(IntMatrix::from_columns(static_cast<std::size_t>(d), cols));
    // hull ∩ {0,1}^d must be exactly the chosen set
    bool closed = true;
    for (std::size_t c = 0; c < n && closed; ++c)
      if (!((mask >> c) & 1u) && in_convex_hull(s.points(), en.points()[c])) closed = false;
    if (!closed) continue;

    std::vector<Int> fp = fingerprint(s);
    auto& bucket = by_fingerprint[fp];
    bool known = false;
    for (std::size_t idx : bucket) {
      if (lattice_isomorphic(out.classes[idx].vertices, s)) {
        known = true;
        break;
      }
    }
    if (known) continue;
    bucket.push_back(out.classes.size());
    out.classes.push_back(PolytopeClass{d, s.size(), std::move(s), std::move(fp)});
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const PolytopeClass& a, const PolytopeClass& b) {
    if (a.fingerprint != b.fingerprint) return a.fingerprint < b.fingerprint;
    return a.vertices.points().entries() < b.vertices.points().entries();
  });
  return out;
}

std::size_t vertex_bound(int d) {
  if (d < 0) throw DomainError("negative dimension");
  if (d == 4) return 10;
  return static_cast<std::size_t>((d + 2) * (d + 2) / 4);
}

VertexBoundReport vertex_bound_check(const PointSet& p) {
  UnimodularPolytopeVerdict v = is_unimodular_polytope(p);
  if (!v.unimodular) throw PreconditionError("point set is not a unimodular polytope");
  VertexBoundReport r;
  r.dimension = v.dimension;
  r.vertices = p.size();
  r.bound = vertex_bound(v.dimension);
  r.ok = r.vertices <= r.bound;
  r.tight = r.vertices == r.bound;
  return r;
}

}  // namespace tumax
