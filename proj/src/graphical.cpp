#include "tumax/graphical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "text_reader.hpp"
#include "tumax/combinatorics.hpp"

namespace tumax {

void ArcGraph::check_ranges() const {
  for (const Arc& a : arcs) {
    if (a.tail >= vertices || a.head >= vertices) {
      throw UsageError("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                       " references a vertex outside 0.." + std::to_string(vertices));
    }
  }
}

ArcGraph parse_graph(std::string_view text) {
  detail::TextReader in(text);
  in.skip_blank_lines();
  Int v = in.read_int("vertex count");
  Int a = in.read_int("arc count");
  if (v < 0 || a < 0) throw ParseError("negative count", in.line(), 1);
  in.end_line("header");
  ArcGraph g;
  g.vertices = static_cast<std::size_t>(v);
  for (Int k = 0; k < a; ++k) {
    in.skip_blank_lines();
    std::size_t line = in.line();
    Int s = in.read_int("arc tail");
    Int t = in.read_int("arc head");
    if (s < 0 || t < 0 || s >= v || t >= v) throw ParseError("arc endpoint out of range", line, 1);
    in.end_line("arc");
    g.arcs.push_back({static_cast<std::size_t>(s), static_cast<std::size_t>(t)});
  }
  in.expect_end("graph");
  return g;
}

std::string format_graph(const ArcGraph& g) {
  std::ostringstream os;
  os << g.vertices << ' ' << g.arcs.size() << '\n';
  for (const Arc& a : g.arcs) os << a.tail << ' ' << a.head << '\n';
  return os.str();
}

std::vector<EndpointPair> parse_paths(std::string_view text) {
  detail::TextReader in(text);
  std::vector<EndpointPair> out;
  while (!in.at_end()) {
    std::size_t line = in.line();
    Int s = in.read_int("path endpoint");
    Int t = in.read_int("path endpoint");
    if (s < 0 || t < 0) throw ParseError("negative endpoint", line, 1);
    in.end_line("path");
    out.emplace_back(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
  }
  return out;
}

bool is_spanning_tree(const ArcGraph& g) {
  if (g.vertices == 0) return false;
  if (g.arcs.size() + 1 != g.vertices) return false;
  std::vector<std::size_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : g.arcs) {
    if (a.tail >= g.vertices || a.head >= g.vertices) return false;
    std::size_t x = find(a.tail), y = find(a.head);
    if (x == y) return false;
    parent[x] = y;
  }
  return true;
}

TreePaths::TreePaths(const ArcGraph& tree) {
  tree.check_ranges();
  if (!is_spanning_tree(tree)) throw StructureError("graph is not a spanning tree");
  const std::size_t n = tree.vertices;
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t k = 0; k < tree.arcs.size(); ++k) {
    incident[tree.arcs[k].tail].push_back(k);
    incident[tree.arcs[k].head].push_back(k);
  }
  parent_.assign(n, n);
  parent_arc_.assign(n, 0);
  depth_.assign(n, 0);
  arc_points_up_.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (std::size_t k : incident[v]) {
      const Arc& a = tree.arcs[k];
      std::size_t w = a.tail == v ? a.head : a.tail;
      if (seen[w]) continue;
      seen[w] = 1;
      parent_[w] = v;
      parent_arc_[w] = k;
      depth_[w] = depth_[v] + 1;
      arc_points_up_[w] = a.tail == w ? 1 : 0;
      queue.push(w);
    }
  }
}

std::vector<PathStep> TreePaths::path(std::size_t s, std::size_t t) const {
  if (s >= vertices() || t >= vertices()) throw UsageError("path endpoint outside the tree");
  std::vector<PathStep> from_s;
  std::vector<PathStep> from_t;
  // Walking up from s follows arcs child -> parent; walking up from t records
  // arcs that the path later passes parent -> child.
  while (depth_[s] > depth_[t]) {
    from_s.push_back({parent_arc_[s], arc_points_up_[s] ? 1 : -1});
    s = parent_[s];
  }
  while (depth_[t] > depth_[s]) {
    from_t.push_back({parent_arc_[t], arc_points_up_[t] ? -1 : 1});
    t = parent_[t];
  }
  while (s != t) {
    from_s.push_back({parent_arc_[s], arc_points_up_[s] ? 1 : -1});
    s = parent_[s];
    from_t.push_back({parent_arc_[t], arc_points_up_[t] ? -1 : 1});
    t = parent_[t];
  }
  from_s.insert(from_s.end(), from_t.rbegin(), from_t.rend());
  return from_s;
}

IntMatrix network_matrix(const ArcGraph& tree, const ArcGraph& digraph) {
  TreePaths paths(tree);
  for (const Arc& a : digraph.arcs) {
    if (a.tail >= tree.vertices || a.head >= tree.vertices) {
      throw UsageError("digraph arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                       " uses a vertex not in the tree");
    }
  }
  const std::size_t rows = tree.arcs.size();
  const std::size_t cols = digraph.arcs.size();
  std::vector<Int> data(rows * cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    for (const PathStep& step : paths.path(digraph.arcs[j].tail, digraph.arcs[j].head)) {
      data[step.arc * cols + j] = step.sign;
    }
  }
  return IntMatrix(rows, cols, std::move(data));
}

TransposeExtension transpose_extension(const IntMatrix& m_prime, const ArcGraph& tree,
                                       const ArcGraph& digraph) {
  if (network_matrix(tree, digraph).transpose() != m_prime) {
    throw WitnessMismatch("supplied tree and digraph do not realize M' as a transposed network matrix");
  }
  TransposeExtension out;
  const std::size_t k = digraph.arcs.size();
  out.tree.vertices = tree.vertices + k;
  out.digraph.vertices = tree.vertices + k;
  for (std::size_t e = 0; e < k; ++e) {
    std::size_t fresh = tree.vertices + e;
    out.tree.arcs.push_back({fresh, digraph.arcs[e].tail});
    out.digraph.arcs.push_back({fresh, digraph.arcs[e].head});
  }
  out.tree.arcs.insert(out.tree.arcs.end(), tree.arcs.begin(), tree.arcs.end());
  out.matrix = hconcat(IntMatrix::identity(k), m_prime);
  if (network_matrix(out.tree, out.digraph).transpose() != out.matrix) {
    throw std::logic_error("transpose extension does not reproduce (I | M')");
  }
  return out;
}

namespace {

// For each path, the bitset of tree edges it uses (at most 64 edges).
std::vector<std::uint64_t> path_edge_masks(const TreePaths& tp, std::span<const EndpointPair> paths) {
  std::vector<std::uint64_t> masks;
  masks.reserve(paths.size());
  for (const auto& [s, t] : paths) {
    std::uint64_t mask = 0;
    for (const PathStep& step : tp.path(s, t)) mask |= std::uint64_t{1} << step.arc;
    masks.push_back(mask);
  }
  return masks;
}

}  // namespace

std::vector<Pattern> edge_patterns(const ArcGraph& tree, std::span<const EndpointPair> paths) {
  if (paths.size() > 64) throw UsageError("pattern analysis supports at most 64 paths");
  TreePaths tp(tree);
  std::vector<Pattern> per_edge(tree.arcs.size());
  for (std::size_t j = 0; j < paths.size(); ++j) {
    for (const PathStep& step : tp.path(paths[j].first, paths[j].second)) {
      per_edge[step.arc].bits |= std::uint64_t{1} << j;
    }
  }
  std::set<Pattern> distinct;
  for (const Pattern& p : per_edge)
    if (p.bits != 0) distinct.insert(p);
  return {distinct.begin(), distinct.end()};
}

PatternReport verify_pattern_bounds(const ArcGraph& tree, std::span<const EndpointPair> paths) {
  PatternReport r;
  r.paths = paths.size();
  auto patterns = edge_patterns(tree, paths);
  r.count = patterns.size();
  r.odd_count = static_cast<std::size_t>(
      std::count_if(patterns.begin(), patterns.end(), [](const Pattern& p) { return p.size() % 2 == 1; }));
  const std::size_t m = r.paths;
  if (m >= 2) r.bound_ok = r.count <= 3 * m - 3;
  if (m >= 3) r.odd_bound_ok = r.odd_count <= 3 * m - 5;
  return r;
}

namespace {

// Two-colouring of the underlying undirected graph; empty when not bipartite.
std::optional<std::vector<int>> two_colouring(std::size_t vertices, const std::vector<Arc>& arcs) {
  std::vector<std::vector<std::size_t>> adj(vertices);
  for (const Arc& a : arcs) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> colour(vertices, -1);
  for (std::size_t start = 0; start < vertices; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t w : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool connected(std::size_t vertices, const std::vector<Arc>& arcs) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices;
  for (const Arc& a : arcs) {
    std::size_t x = find(a.tail), y = find(a.head);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components <= 1;
}

}  // namespace

NetworkBoundReport verify_network_column_bound(const ArcGraph& tree, const ArcGraph& digraph) {
  IntMatrix m = network_matrix(tree, digraph);
  NetworkBoundReport r;
  r.arcs = digraph.arcs.size();
  r.tree_arcs = tree.arcs.size();
  const std::size_t side = r.tree_arcs + 1;
  r.bound = static_cast<double>(side * side) / 4.0;

  r.applicable = columns_distinct(m).distinct;
  for (std::size_t j = 0; j < m.cols() && r.applicable; ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, j);
    if (sum <= 0 || sum % 2 == 0) r.applicable = false;
  }
  if (!r.applicable) return r;

  auto colour = two_colouring(tree.vertices, digraph.arcs);
  r.bipartite = colour.has_value();
  const bool within = 4 * r.arcs <= side * side;
  r.equality = 4 * r.arcs == side * side;
  if (r.equality) {
    std::size_t part0 = 0;
    if (colour) part0 = static_cast<std::size_t>(std::count(colour->begin(), colour->end(), 0));
    r.equality_structure_ok = r.tree_arcs % 2 == 1 && r.bipartite &&
                              connected(tree.vertices, digraph.arcs) && 2 * part0 == side;
  }
  r.ok = within && r.bipartite && r.equality_structure_ok;
  return r;
}

TransposeRowReport verify_transpose_row_bound(const IntMatrix& network) {
  TransposeRowReport r;
  r.arcs = network.cols();
  std::set<IntVector> positive;
  std::set<IntVector> positive_odd;
  for (std::size_t i = 0; i < network.rows(); ++i) {
    IntVector row = network.row(i);
    Int sum = std::accumulate(row.begin(), row.end(), Int{0});
    if (sum <= 0) continue;
    positive.insert(row);
    if (sum % 2 != 0) positive_odd.insert(row);
  }
  r.distinct_pos_rows = positive.size();
  r.distinct_pos_odd_rows = positive_odd.size();

  std::set<IntVector> reduced;
  for (const IntVector& row : positive) {
    IntVector mod2(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) mod2[j] = row[j] != 0 ? 1 : 0;
    reduced.insert(mod2);
  }
  r.mod2_distinct = reduced.size() == positive.size();

  const std::size_t a = r.arcs;
  r.compared = a >= 2;
  r.odd_compared = a >= 3;
  if (r.compared && r.distinct_pos_rows > 3 * a - 3) r.bounds_ok = false;
  if (r.odd_compared && r.distinct_pos_odd_rows > 3 * a - 5) r.bounds_ok = false;
  return r;
}

ArcGraph random_tree(std::size_t vertices, std::mt19937_64& rng) {
  if (vertices == 0) throw UsageError("tree needs at least one vertex");
  std::vector<std::size_t> label(vertices);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  ArcGraph g;
  g.vertices = vertices;
  for (std::size_t v = 1; v < vertices; ++v) {
    std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    if (rng() % 2) {
      g.arcs.push_back({label[u], label[v]});
    } else {
      g.arcs.push_back({label[v], label[u]});
    }
  }
  std::shuffle(g.arcs.begin(), g.arcs.end(), rng);
  return g;
}

ArcGraph random_digraph(std::size_t vertices, std::size_t arcs, std::mt19937_64& rng) {
  if (vertices < 2 && arcs > 0) throw UsageError("loop-free arcs need at least two vertices");
  ArcGraph g;
  g.vertices = vertices;
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  for (std::size_t k = 0; k < arcs; ++k) {
    std::size_t s = pick(rng), t = pick(rng);
    while (t == s) t = pick(rng);
    g.arcs.push_back({s, t});
  }
  return g;
}

namespace {

std::string rooted_code(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t w : adj[v])
    if (w != parent) children.push_back(rooted_code(adj, w, v));
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  return code + ")";
}

// Canonical string of an unrooted tree: minimum rooted code over its centres.
std::string tree_code(const ArcGraph& g) {
  const std::size_t n = g.vertices;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Arc& a : g.arcs) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer)
      for (std::size_t w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (std::size_t c : layer) {
    std::string code = rooted_code(adj, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<ArcGraph> nonisomorphic_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<ArcGraph> level{ArcGraph{1, {}}};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, ArcGraph> unique;
    for (const ArcGraph& t : level) {
      for (std::size_t v = 0; v < t.vertices; ++v) {
        ArcGraph g = t;
        g.vertices = size;
        g.arcs.push_back({v, size - 1});
        unique.emplace(tree_code(g), std::move(g));
      }
    }
    level.clear();
    for (auto& [code, g] : unique) level.push_back(std::move(g));
  }
  return level;
}

SweepSummary sweep_network_bound(std::size_t samples, std::uint64_t seed, std::size_t max_tree_arcs) {
  std::mt19937_64 rng(seed);
  SweepSummary summary;
  while (summary.instances < samples) {
    std::size_t tree_arcs = std::uniform_int_distribution<std::size_t>(1, max_tree_arcs)(rng);
    ArcGraph tree = random_tree(tree_arcs + 1, rng);
    TreePaths tp(tree);
    std::vector<Arc> candidates;
    if (rng() % 4 == 0) {
      for (std::size_t s = 0; s < tree.vertices; ++s)
        for (std::size_t t = 0; t < tree.vertices; ++t)
          if (s != t) candidates.push_back({s, t});
    } else {
      std::size_t arcs = std::uniform_int_distribution<std::size_t>(1, 2 * tree.vertices)(rng);
      candidates = random_digraph(tree.vertices, arcs, rng).arcs;
    }
    // Keep arcs whose column has positive odd sum, dropping repeats.
    ArcGraph digraph{tree.vertices, {}};
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (const Arc& a : candidates) {
      Int sum = 0;
      for (const PathStep& step : tp.path(a.tail, a.head)) sum += step.sign;
      if (sum <= 0 || sum % 2 == 0) continue;
      if (!used.insert({a.tail, a.head}).second) continue;
      digraph.arcs.push_back(a);
    }
    if (digraph.arcs.empty()) continue;
    NetworkBoundReport r = verify_network_column_bound(tree, digraph);
    if (!r.applicable) throw std::logic_error("filtered digraph does not satisfy the premise");
    ++summary.instances;
    if (!r.ok) ++summary.violations;
    if (r.equality) ++summary.equality_cases;
  }
  return summary;
}

SweepSummary sweep_transpose_bound(std::size_t samples, std::uint64_t seed, std::size_t max_tree_arcs,
                                   std::size_t max_arcs) {
  std::mt19937_64 rng(seed);
  SweepSummary summary;
  for (std::size_t k = 0; k < samples; ++k) {
    std::size_t tree_arcs = std::uniform_int_distribution<std::size_t>(1, max_tree_arcs)(rng);
    ArcGraph tree = random_tree(tree_arcs + 1, rng);
    std::size_t arcs = std::uniform_int_distribution<std::size_t>(1, max_arcs)(rng);
    ArcGraph digraph = random_digraph(tree.vertices, arcs, rng);
    TransposeRowReport r = verify_transpose_row_bound(network_matrix(tree, digraph));
    ++summary.instances;
    if (!r.compared) ++summary.skipped;
    if (!r.bounds_ok || !r.mod2_distinct) ++summary.violations;
  }
  return summary;
}

SweepSummary sweep_pattern_bounds(std::size_t max_edges, std::size_t max_paths) {
  SweepSummary summary;
  for (std::size_t n = 2; n <= max_edges + 1; ++n) {
    for (const ArcGraph& tree : nonisomorphic_trees(n)) {
      TreePaths tp(tree);
      std::vector<EndpointPair> all_paths;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) all_paths.emplace_back(s, t);
      std::vector<std::uint64_t> masks = path_edge_masks(tp, all_paths);
      for (std::size_t m = 2; m <= max_paths; ++m) {
        for_each_combination(all_paths.size(), m, [&](const std::vector<std::size_t>& chosen) {
          std::set<std::uint64_t> distinct;
          for (std::size_t e = 0; e < tree.arcs.size(); ++e) {
            std::uint64_t bits = 0;
            for (std::size_t j = 0; j < m; ++j)
              if ((masks[chosen[j]] >> e) & 1u) bits |= std::uint64_t{1} << j;
            if (bits != 0) distinct.insert(bits);
          }
          std::size_t odd = 0;
          for (std::uint64_t b : distinct) odd += __builtin_popcountll(b) % 2;
          ++summary.instances;
          bool ok = distinct.size() <= 3 * m - 3 && (m < 3 || odd <= 3 * m - 5);
          if (!ok) ++summary.violations;
          return true;
        });
      }
    }
  }
  return summary;
}

}  // namespace tumax
