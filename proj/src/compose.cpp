#include "tumax/compose.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tumax/graphical.hpp"

namespace tumax {

std::string to_string(SumKind kind) {
  switch (kind) {
    case SumKind::one_sum: return "one-sum";
    case SumKind::two_sum: return "two-sum";
    case SumKind::three_sum: return "three-sum";
    case SumKind::delta_sum: return "delta-sum";
  }
  return "?";
}

SumKind parse_sum_kind(std::string_view name) {
  if (name == "one-sum" || name == "one") return SumKind::one_sum;
  if (name == "two-sum" || name == "two") return SumKind::two_sum;
  if (name == "three-sum" || name == "three") return SumKind::three_sum;
  if (name == "delta-sum" || name == "delta") return SumKind::delta_sum;
  throw UsageError("unknown sum kind '" + std::string(name) + "'");
}

std::string to_string(GlueShape shape) {
  switch (shape) {
    case GlueShape::zero: return "zero";
    case GlueShape::two_sum_shaped: return "two-sum-shaped";
    case GlueShape::general: return "general";
  }
  return "?";
}

namespace {

void expect_length(const IntVector& v, std::size_t n, const char* name) {
  if (v.size() != n) {
    throw UsageError(std::string("vector ") + name + " has length " + std::to_string(v.size()) +
                     ", expected " + std::to_string(n));
  }
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IntMatrix columns_of(std::vector<IntVector> cols) { return IntMatrix::from_columns(cols[0].size(), cols); }
IntMatrix rows_of(std::vector<IntVector> rows) { return IntMatrix::from_rows(rows[0].size(), rows); }
IntMatrix column_matrix(const IntVector& v) { return columns_of({v}); }
IntMatrix row_matrix(const IntVector& v) { return rows_of({v}); }

IntMatrix outer(const IntVector& a, const IntVector& b) {
  std::vector<Int> data(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) data[i * b.size() + j] = checked_mul(a[i], b[j]);
  return IntMatrix(a.size(), b.size(), std::move(data));
}

IntMatrix blocks(const IntMatrix& a, const IntMatrix& c, const IntMatrix& d, const IntMatrix& b) {
  return vconcat(hconcat(a, c), hconcat(d, b));
}

void require_tu(const IntMatrix& factor, const std::string& name) {
  TuVerdict v = certify_tu(factor);
  if (!v.is_tu) {
    std::ostringstream os;
    os << "factor " << name << " is not TU";
    if (v.witness) os << " (minor " << v.witness->minor << ")";
    throw PreconditionError(os.str());
  }
}

void require_size(const IntMatrix& m, const char* name) {
  if (m.rows() + m.cols() < 4) {
    throw SpecError(std::string("size of ") + name + " is " + std::to_string(m.rows() + m.cols()) +
                    ", needs at least 4");
  }
}

IntVector sum3(const std::array<IntVector, 3>& v) {
  IntVector s(v[0].size(), 0);
  for (const auto& x : v)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = checked_add(s[i], x[i]);
  return s;
}

bool in_signed_set(const IntVector& x, const std::array<IntVector, 3>& set) {
  if (is_zero(x)) return true;
  for (const auto& v : set)
    if (x == v || x == negated(v)) return true;
  return false;
}

IntMatrix two_sum_factor1(const IntMatrix& a, const IntVector& u) { return hconcat(a, column_matrix(u)); }
IntMatrix two_sum_factor2(const IntVector& v, const IntMatrix& b) { return vconcat(row_matrix(v), b); }

IntMatrix three_sum_factor1(const IntMatrix& a, const std::array<IntVector, 3>& us) {
  return hconcat(a, columns_of({us[0], us[1], us[2]}));
}
IntMatrix three_sum_factor2(const std::array<IntVector, 3>& vs, const IntMatrix& b) {
  return vconcat(rows_of({vs[0], vs[1], vs[2]}), b);
}

IntMatrix delta_factor1(const IntMatrix& a, const IntVector& u, const IntVector& u_prime, Int x) {
  IntMatrix top = hconcat(a, columns_of({u_prime, u_prime}));
  IntVector bottom = u;
  bottom.push_back(0);
  bottom.push_back(x);
  return top.with_row(bottom);
}
IntMatrix delta_factor2(const IntVector& v, const IntVector& v_prime, const IntMatrix& b, Int x) {
  IntVector top = v;
  top.push_back(0);
  top.push_back(x);
  return vconcat(row_matrix(top), hconcat(b, columns_of({v_prime, v_prime})));
}

void check_three_sum_shape(const IntMatrix& a, const std::array<IntVector, 3>& us,
                           const std::array<IntVector, 3>& vs, const IntMatrix& b, const IntMatrix& c) {
  for (std::size_t l = 0; l < 3; ++l) {
    expect_length(us[l], a.rows(), "u_l");
    expect_length(vs[l], b.cols(), "v_l");
  }
  if (c.rows() != a.rows() || c.cols() != b.cols()) throw UsageError("glue matrix C has the wrong shape");
  require_size(a, "A");
  require_size(b, "B");
  if (!is_zero(sum3(us))) throw SpecError("u1 + u2 + u3 is not zero");
  if (!is_zero(sum3(vs))) throw SpecError("v1 + v2 + v3 is not zero");
  for (std::size_t j = 0; j < c.cols(); ++j)
    if (!in_signed_set(c.column(j), us))
      throw SpecError("column " + std::to_string(j) + " of C is not one of +-u1, +-u2, +-u3, 0");
  for (std::size_t i = 0; i < c.rows(); ++i)
    if (!in_signed_set(c.row(i), vs))
      throw SpecError("row " + std::to_string(i) + " of C is not one of +-v1, +-v2, +-v3, 0");
}

void check_delta_shape(const IntMatrix& a, const IntVector& u, const IntVector& u_prime, const IntVector& v,
                       const IntVector& v_prime, const IntMatrix& b, Int x) {
  expect_length(u, a.cols(), "u");
  expect_length(u_prime, a.rows(), "u'");
  expect_length(v, b.cols(), "v");
  expect_length(v_prime, b.rows(), "v'");
  if (x != 1 && x != -1) throw SpecError("x must be +1 or -1");
  require_size(a, "A");
  require_size(b, "B");
}

}  // namespace

IntMatrix one_sum(const IntMatrix& a, const IntMatrix& b) {
  return blocks(a, IntMatrix(a.rows(), b.cols()), IntMatrix(b.rows(), a.cols()), b);
}

IntMatrix two_sum(const IntMatrix& a, const IntVector& u, const IntVector& v, const IntMatrix& b) {
  expect_length(u, a.rows(), "u");
  expect_length(v, b.cols(), "v");
  require_tu(two_sum_factor1(a, u), "(A | u)");
  require_tu(two_sum_factor2(v, b), "(v^T ; B)");
  return blocks(a, outer(u, v), IntMatrix(b.rows(), a.cols()), b);
}

IntMatrix three_sum(const IntMatrix& a, const std::array<IntVector, 3>& us,
                    const std::array<IntVector, 3>& vs, const IntMatrix& b, const IntMatrix& c) {
  check_three_sum_shape(a, us, vs, b, c);
  require_tu(three_sum_factor1(a, us), "(A | u1 | u2 | u3)");
  require_tu(three_sum_factor2(vs, b), "(v1^T ; v2^T ; v3^T ; B)");
  return blocks(a, c, IntMatrix(b.rows(), a.cols()), b);
}

IntMatrix delta_sum(const IntMatrix& a, const IntVector& u, const IntVector& u_prime, const IntVector& v,
                    const IntVector& v_prime, const IntMatrix& b, Int x) {
  check_delta_shape(a, u, u_prime, v, v_prime, b, x);
  require_tu(delta_factor1(a, u, u_prime, x), "(A u' u' ; u^T 0 x)");
  require_tu(delta_factor2(v, v_prime, b, x), "(v^T 0 x ; B v' v')");
  return blocks(a, outer(u_prime, v), outer(v_prime, u), b);
}

std::vector<IntMatrix> sum_factors(const SumSpec& s) {
  switch (s.kind) {
    case SumKind::one_sum: return {s.a, s.b};
    case SumKind::two_sum: return {two_sum_factor1(s.a, s.u), two_sum_factor2(s.v, s.b)};
    case SumKind::three_sum: return {three_sum_factor1(s.a, s.us), three_sum_factor2(s.vs, s.b)};
    case SumKind::delta_sum:
      return {delta_factor1(s.a, s.u, s.u_prime, s.x), delta_factor2(s.v, s.v_prime, s.b, s.x)};
  }
  return {};
}

GlueShape classify_glue(const IntMatrix& c) {
  std::optional<IntVector> w;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    IntVector row = c.row(i);
    if (is_zero(row)) continue;
    if (!w) {
      w = row;
    } else if (row != *w && row != negated(*w)) {
      return GlueShape::general;
    }
  }
  return w ? GlueShape::two_sum_shaped : GlueShape::zero;
}

Composition compose(const SumSpec& s) {
  Composition out;
  switch (s.kind) {
    case SumKind::one_sum:
      require_tu(s.a, "A");
      require_tu(s.b, "B");
      out.matrix = one_sum(s.a, s.b);
      break;
    case SumKind::two_sum: out.matrix = two_sum(s.a, s.u, s.v, s.b); break;
    case SumKind::three_sum:
      out.matrix = three_sum(s.a, s.us, s.vs, s.b, s.c);
      out.glue = classify_glue(s.c);
      break;
    case SumKind::delta_sum: out.matrix = delta_sum(s.a, s.u, s.u_prime, s.v, s.v_prime, s.b, s.x); break;
  }
  out.factors = sum_factors(s);
  return out;
}

namespace {

Int apply(const Functional& f, const IntVector& v) { return dot(f, v); }

IntVector slice(const IntVector& v, std::size_t from, std::size_t to) {
  return IntVector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

FactorCertificate certify_factor(std::string name, IntMatrix factor, Functional g, IntVector w,
                                 bool coordinates_agree, bool composed_distinct) {
  FactorCertificate fc;
  fc.name = std::move(name);
  fc.valued = left_multiply(g, factor) == w;
  fc.nonzero = !is_zero(g);
  fc.coordinates_agree = coordinates_agree;
  fc.distinct_columns = columns_distinct(factor).distinct;
  fc.inheritance_ok = !composed_distinct || fc.distinct_columns;
  fc.factor = std::move(factor);
  fc.functional = std::move(g);
  fc.w = std::move(w);
  return fc;
}

// Index sets I_l / I'_l: rows of C equal to v_l^T / -v_l^T.
void check_three_sum_transport(const SumSpec& s) {
  for (std::size_t l = 0; l < 3; ++l) {
    if (is_zero(s.vs[l])) throw SpecError("v" + std::to_string(l + 1) + " is zero; row classes are ambiguous");
    for (std::size_t k = 0; k < l; ++k)
      if (s.vs[l] == s.vs[k] || s.vs[l] == negated(s.vs[k]))
        throw SpecError("v" + std::to_string(l + 1) + " equals +-v" + std::to_string(k + 1) +
                        "; row classes are ambiguous");
  }
  for (std::size_t l = 0; l < 2; ++l) {
    bool found = false;
    for (std::size_t i = 0; i < s.c.rows() && !found; ++i) {
      IntVector row = s.c.row(i);
      found = row == s.vs[l] || row == negated(s.vs[l]);
    }
    if (!found) throw HypothesisError("+-v" + std::to_string(l + 1) + "^T does not appear as a row of C");
  }
}

}  // namespace

std::vector<FactorCertificate> transport_functional(const SumSpec& s, const Functional& f, const IntVector& w) {
  IntMatrix m = compose(s).matrix;
  expect_length(f, m.rows(), "f");
  expect_length(w, m.cols(), "w");
  if (is_zero(f)) throw PreconditionError("functional is zero");
  if (left_multiply(f, m) != w) throw PreconditionError("functional does not evaluate to w on the composed matrix");

  const bool distinct = columns_distinct(m).distinct;
  const std::size_t m1 = s.a.rows(), n1 = s.a.cols();
  const IntVector f1 = slice(f, 0, m1), f2 = slice(f, m1, f.size());
  const IntVector w1 = slice(w, 0, n1), w2 = slice(w, n1, w.size());
  std::vector<FactorCertificate> out;

  switch (s.kind) {
    case SumKind::one_sum:
      out.push_back(certify_factor("A", s.a, f1, w1, true, distinct));
      out.push_back(certify_factor("B", s.b, f2, w2, true, distinct));
      break;
    case SumKind::two_sum: {
      Functional g{apply(f1, s.u)};
      g.insert(g.end(), f2.begin(), f2.end());
      bool agree = slice(g, 1, g.size()) == f2;
      out.push_back(certify_factor("(v^T ; B)", two_sum_factor2(s.v, s.b), g, w2, agree, distinct));
      break;
    }
    case SumKind::three_sum: {
      check_three_sum_transport(s);
      // c[l] = sum over I_l of f minus sum over I'_l of f
      std::array<Int, 3> c{0, 0, 0};
      for (std::size_t t = 0; t < m1; ++t) {
        IntVector row = s.c.row(t);
        for (std::size_t l = 0; l < 3; ++l) {
          if (row == s.vs[l]) c[l] = checked_add(c[l], f[t]);
          if (row == negated(s.vs[l])) c[l] = checked_sub(c[l], f[t]);
        }
      }
      Functional g{checked_sub(c[0], c[2]), checked_sub(c[1], c[2])};
      g.insert(g.end(), f2.begin(), f2.end());
      bool agree = slice(g, 2, g.size()) == f2;
      IntMatrix factor = vconcat(rows_of({s.vs[0], s.vs[1]}), s.b);
      out.push_back(certify_factor("(v1^T ; v2^T ; B)", factor, g, w2, agree, distinct));
      break;
    }
    case SumKind::delta_sum: {
      Functional g = f1;
      g.push_back(apply(f2, s.v_prime));
      bool agree1 = slice(g, 0, m1) == f1;
      out.push_back(certify_factor("(A ; u^T)", s.a.with_row(s.u), g, w1, agree1, distinct));
      Functional h{apply(f1, s.u_prime)};
      h.insert(h.end(), f2.begin(), f2.end());
      bool agree2 = slice(h, 1, h.size()) == f2;
      out.push_back(certify_factor("(v^T ; B)", two_sum_factor2(s.v, s.b), h, w2, agree2, distinct));
      break;
    }
  }
  return out;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Int path_sum(const TreePaths& tp, std::size_t s, std::size_t t) {
  Int sum = 0;
  for (const PathStep& step : tp.path(s, t)) sum += step.sign;
  return sum;
}

// count arcs on the tree's vertex set; with unit_sums only arcs whose network
// column sums to 1 are drawn (without repetition, as far as possible).
std::vector<Arc> random_arcs(const ArcGraph& tree, std::size_t count, bool unit_sums, std::mt19937_64& rng) {
  if (!unit_sums) return random_digraph(tree.vertices, count, rng).arcs;
  TreePaths tp(tree);
  std::vector<Arc> candidates;
  for (std::size_t s = 0; s < tree.vertices; ++s)
    for (std::size_t t = 0; t < tree.vertices; ++t)
      if (s != t && path_sum(tp, s, t) == 1) candidates.push_back({s, t});
  std::shuffle(candidates.begin(), candidates.end(), rng);
  candidates.resize(std::min(count, candidates.size()));
  return candidates;
}

std::array<std::size_t, 3> three_vertices(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  return {all[0], all[1], all[2]};
}

std::vector<Arc> triangle(std::size_t n, std::mt19937_64& rng) {
  auto [a, b, c] = three_vertices(n, rng);
  return {{a, b}, {b, c}, {c, a}};
}

// Tree on n + 1 vertices whose extra vertex n is a leaf hanging off a random
// vertex; the leaf arc is placed first or last in the arc order.
struct LeafTree {
  ArcGraph tree;
  std::size_t leaf = 0;
  std::size_t anchor = 0;
};

LeafTree leaf_tree(std::size_t tree_arcs, Int x, bool leaf_first, std::mt19937_64& rng) {
  LeafTree lt;
  ArcGraph base = random_tree(tree_arcs + 1, rng);
  lt.leaf = base.vertices;
  lt.anchor = pick(rng, 0, base.vertices - 1);
  Arc leaf_arc = x == 1 ? Arc{lt.anchor, lt.leaf} : Arc{lt.leaf, lt.anchor};
  lt.tree.vertices = base.vertices + 1;
  if (leaf_first) lt.tree.arcs.push_back(leaf_arc);
  lt.tree.arcs.insert(lt.tree.arcs.end(), base.arcs.begin(), base.arcs.end());
  if (!leaf_first) lt.tree.arcs.push_back(leaf_arc);
  return lt;
}

std::size_t other_vertex(std::size_t n, std::size_t avoid, std::mt19937_64& rng) {
  std::size_t s = pick(rng, 0, n - 2);
  return s >= avoid ? s + 1 : s;
}

SumSpec random_two_sum(std::mt19937_64& rng, const RandomSumOptions& o) {
  SumSpec s;
  s.kind = SumKind::two_sum;
  ArcGraph t1 = random_tree(pick(rng, 1, o.max_tree_arcs) + 1, rng);
  std::vector<Arc> d1 = random_arcs(t1, pick(rng, 1, o.max_arcs) + 1, o.polytopal, rng);
  IntMatrix n1 = network_matrix(t1, ArcGraph{t1.vertices, d1});
  std::vector<std::size_t> a_cols(n1.cols() - 1);
  std::iota(a_cols.begin(), a_cols.end(), 0);
  s.a = n1.select_columns(a_cols);
  s.u = n1.column(n1.cols() - 1);

  ArcGraph t2 = random_tree(pick(rng, 1, o.max_tree_arcs) + 1, rng);
  std::vector<Arc> d2 = random_arcs(t2, pick(rng, 1, o.max_arcs), o.polytopal, rng);
  IntMatrix n2 = network_matrix(t2, ArcGraph{t2.vertices, d2});
  s.v = n2.row(0);
  std::vector<std::size_t> b_rows(n2.rows() - 1);
  std::iota(b_rows.begin(), b_rows.end(), 1);
  s.b = n2.select_rows(b_rows);
  return s;
}

SumSpec random_three_sum(std::mt19937_64& rng, const RandomSumOptions& o) {
  SumSpec s;
  s.kind = SumKind::three_sum;
  for (;;) {
    ArcGraph t1 = random_tree(pick(rng, 2, std::max<std::size_t>(2, o.max_tree_arcs)) + 1, rng);
    std::vector<Arc> d1 = random_digraph(t1.vertices, pick(rng, 0, o.max_arcs), rng).arcs;
    for (const Arc& a : triangle(t1.vertices, rng)) d1.push_back(a);
    IntMatrix n1 = network_matrix(t1, ArcGraph{t1.vertices, d1});
    const std::size_t n_a = n1.cols() - 3;
    std::vector<std::size_t> a_cols(n_a);
    std::iota(a_cols.begin(), a_cols.end(), 0);
    s.a = n1.select_columns(a_cols);
    for (std::size_t l = 0; l < 3; ++l) s.us[l] = n1.column(n_a + l);

    // factor 2 is the transpose of a network matrix whose first three digraph
    // arcs form a triangle
    ArcGraph t2 = random_tree(pick(rng, 2, std::max<std::size_t>(2, o.max_tree_arcs)) + 1, rng);
    std::vector<Arc> d2 = triangle(t2.vertices, rng);
    for (const Arc& a : random_digraph(t2.vertices, pick(rng, 0, o.max_arcs), rng).arcs) d2.push_back(a);
    IntMatrix n2 = network_matrix(t2, ArcGraph{t2.vertices, d2}).transpose();
    for (std::size_t l = 0; l < 3; ++l) s.vs[l] = n2.row(l);
    std::vector<std::size_t> b_rows(n2.rows() - 3);
    std::iota(b_rows.begin(), b_rows.end(), 3);
    s.b = n2.select_rows(b_rows);
    if (s.a.rows() + s.a.cols() >= 4 && s.b.rows() + s.b.cols() >= 4) break;
  }
  // glue: zero, a rank-one block, or the rank-two block u_a v_b^T - u_b v_a^T
  const Int eps = rng() % 2 ? 1 : -1;
  std::size_t a = pick(rng, 0, 2), b = (a + pick(rng, 1, 2)) % 3;
  switch (rng() % 4) {
    case 0: s.c = IntMatrix(s.a.rows(), s.b.cols()); break;
    case 1: s.c = outer(eps == 1 ? s.us[a] : negated(s.us[a]), s.vs[b]); break;
    default: {
      IntMatrix p = outer(s.us[a], s.vs[b]);
      IntMatrix q = outer(s.us[b], s.vs[a]);
      std::vector<Int> data(p.entries().size());
      for (std::size_t k = 0; k < data.size(); ++k) data[k] = eps * (p.entries()[k] - q.entries()[k]);
      s.c = IntMatrix(p.rows(), p.cols(), std::move(data));
    }
  }
  return s;
}

SumSpec random_delta_sum(std::mt19937_64& rng, const RandomSumOptions& o) {
  SumSpec s;
  s.kind = SumKind::delta_sum;
  s.x = rng() % 2 ? 1 : -1;
  for (;;) {
    // factor 1: leaf arc is the last tree arc (row u^T); the last two digraph
    // arcs are p -> anchor and p -> leaf (columns u' and (u'; x))
    LeafTree l1 = leaf_tree(pick(rng, 1, o.max_tree_arcs), s.x, false, rng);
    std::vector<Arc> d1 = random_digraph(l1.tree.vertices, pick(rng, 0, o.max_arcs), rng).arcs;
    std::size_t p1 = other_vertex(l1.leaf, l1.anchor, rng);
    d1.push_back({p1, l1.anchor});
    d1.push_back({p1, l1.leaf});
    IntMatrix f1 = network_matrix(l1.tree, ArcGraph{l1.tree.vertices, d1});
    const std::size_t m1 = f1.rows() - 1, n1 = f1.cols() - 2;
    std::vector<std::size_t> rows1(m1), cols1(n1);
    std::iota(rows1.begin(), rows1.end(), 0);
    std::iota(cols1.begin(), cols1.end(), 0);
    s.a = f1.select_rows(rows1).select_columns(cols1);
    s.u = slice(f1.row(m1), 0, n1);
    s.u_prime = slice(f1.column(n1), 0, m1);

    // factor 2: leaf arc first (row v^T)
    LeafTree l2 = leaf_tree(pick(rng, 1, o.max_tree_arcs), s.x, true, rng);
    std::vector<Arc> d2 = random_digraph(l2.tree.vertices, pick(rng, 0, o.max_arcs), rng).arcs;
    std::size_t p2 = other_vertex(l2.leaf, l2.anchor, rng);
    d2.push_back({p2, l2.anchor});
    d2.push_back({p2, l2.leaf});
    IntMatrix f2 = network_matrix(l2.tree, ArcGraph{l2.tree.vertices, d2});
    const std::size_t m2 = f2.rows() - 1, n2 = f2.cols() - 2;
    std::vector<std::size_t> rows2(m2), cols2(n2);
    std::iota(rows2.begin(), rows2.end(), 1);
    std::iota(cols2.begin(), cols2.end(), 0);
    s.b = f2.select_rows(rows2).select_columns(cols2);
    s.v = slice(f2.row(0), 0, n2);
    s.v_prime = slice(f2.column(n2), 1, m2 + 1);
    if (s.a.rows() + s.a.cols() >= 4 && s.b.rows() + s.b.cols() >= 4) break;
  }
  return s;
}

}  // namespace

SumSpec random_sum_spec(SumKind kind, std::mt19937_64& rng, const RandomSumOptions& o) {
  switch (kind) {
    case SumKind::one_sum: {
      SumSpec s = random_two_sum(rng, o);
      s.kind = SumKind::one_sum;
      s.u.clear();
      s.v.clear();
      return s;
    }
    case SumKind::two_sum: return random_two_sum(rng, o);
    case SumKind::three_sum: return random_three_sum(rng, o);
    case SumKind::delta_sum: return random_delta_sum(rng, o);
  }
  throw UsageError("unknown sum kind");
}

}  // namespace tumax
