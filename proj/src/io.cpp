#include "tumax/io.hpp"

namespace tumax {

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("matrix must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, "matrix row"));
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw UsageError("matrix rows have different lengths");
  return IntMatrix::from_rows(cols, rows);
}

IntVector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array of integers");
  IntVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw UsageError(std::string(what) + " must contain integers only");
    v.push_back(x.get<Int>());
  }
  return v;
}

void to_json(json& j, const TuVerdict& v) {
  j = json{{"is_tu", v.is_tu}, {"method", to_string(v.method)}, {"witness", nullptr}};
  if (v.witness) {
    j["witness"] = json{{"rows", v.witness->rows.indices()},
                        {"cols", v.witness->cols.indices()},
                        {"minor", v.witness->minor}};
  }
}

void to_json(json& j, const SumSpec& s) {
  j = json{{"kind", to_string(s.kind)}, {"A", matrix_to_json(s.a)}, {"B", matrix_to_json(s.b)}};
  switch (s.kind) {
    case SumKind::one_sum: break;
    case SumKind::two_sum:
      j["u"] = s.u;
      j["v"] = s.v;
      break;
    case SumKind::three_sum:
      for (int l = 0; l < 3; ++l) {
        j["u" + std::to_string(l + 1)] = s.us[static_cast<std::size_t>(l)];
        j["v" + std::to_string(l + 1)] = s.vs[static_cast<std::size_t>(l)];
      }
      j["C"] = matrix_to_json(s.c);
      break;
    case SumKind::delta_sum:
      j["u"] = s.u;
      j["u_prime"] = s.u_prime;
      j["v"] = s.v;
      j["v_prime"] = s.v_prime;
      j["x"] = s.x;
      break;
  }
}

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw UsageError(std::string("sum spec is missing '") + key + "'");
  return *it;
}

}  // namespace

SumSpec sum_spec_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("sum spec must be a JSON object");
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw UsageError("sum spec 'kind' must be a string");
  SumSpec s;
  s.kind = parse_sum_kind(kind.get<std::string>());
  s.a = matrix_from_json(field(j, "A"));
  s.b = matrix_from_json(field(j, "B"));
  switch (s.kind) {
    case SumKind::one_sum: break;
    case SumKind::two_sum:
      s.u = vector_from_json(field(j, "u"), "u");
      s.v = vector_from_json(field(j, "v"), "v");
      break;
    case SumKind::three_sum:
      for (std::size_t l = 0; l < 3; ++l) {
        std::string u = "u" + std::to_string(l + 1), v = "v" + std::to_string(l + 1);
        s.us[l] = vector_from_json(field(j, u.c_str()), u.c_str());
        s.vs[l] = vector_from_json(field(j, v.c_str()), v.c_str());
      }
      s.c = matrix_from_json(field(j, "C"));
      break;
    case SumKind::delta_sum:
      s.u = vector_from_json(field(j, "u"), "u");
      s.u_prime = vector_from_json(field(j, "u_prime"), "u_prime");
      s.v = vector_from_json(field(j, "v"), "v");
      s.v_prime = vector_from_json(field(j, "v_prime"), "v_prime");
      if (!field(j, "x").is_number_integer()) throw UsageError("sum spec 'x' must be an integer");
      s.x = j["x"].get<Int>();
      break;
  }
  return s;
}

void to_json(json& j, const FactorCertificate& c) {
  j = json{{"name", c.name},
           {"factor", matrix_to_json(c.factor)},
           {"functional", c.functional},
           {"w", c.w},
           {"valued", c.valued},
           {"nonzero", c.nonzero},
           {"coordinates_agree", c.coordinates_agree},
           {"distinct_columns", c.distinct_columns},
           {"inheritance_ok", c.inheritance_ok}};
}

void to_json(json& j, const BoundReport& r) {
  auto pairs = [](const std::vector<std::pair<Int, Int>>& v) {
    json a = json::array();
    for (auto [x, y] : v) a.push_back(json::array({x, y}));
    return a;
  };
  j = json{{"name", r.name},         {"inequality", r.inequality}, {"max", r.max},
           {"found", pairs(r.found)}, {"expected", pairs(r.expected)}, {"match", r.match}};
}

void to_json(json& j, const PatternReport& r) {
  j = json{{"paths", r.paths},
           {"patterns", r.count},
           {"odd_patterns", r.odd_count},
           {"bound_ok", r.bound_ok},
           {"odd_bound_ok", r.odd_bound_ok}};
}

void to_json(json& j, const NetworkBoundReport& r) {
  j = json{{"applicable", r.applicable},
           {"arcs", r.arcs},
           {"tree_arcs", r.tree_arcs},
           {"bound", r.bound},
           {"bipartite", r.bipartite},
           {"equality", r.equality},
           {"equality_structure_ok", r.equality_structure_ok},
           {"ok", r.ok}};
}

void to_json(json& j, const TransposeRowReport& r) {
  j = json{{"arcs", r.arcs},
           {"distinct_positive_rows", r.distinct_pos_rows},
           {"distinct_positive_odd_rows", r.distinct_pos_odd_rows},
           {"compared", r.compared},
           {"odd_compared", r.odd_compared},
           {"bounds_ok", r.bounds_ok},
           {"mod2_distinct", r.mod2_distinct}};
}

void to_json(json& j, const SweepSummary& s) {
  j = json{{"instances", s.instances},
           {"violations", s.violations},
           {"skipped", s.skipped},
           {"equality_cases", s.equality_cases}};
}

void to_json(json& j, const UnimodularPolytopeVerdict& v) {
  j = json{{"unimodular", v.unimodular}, {"dimension", v.dimension}, {"witness", nullptr}};
  if (v.witness) {
    j["witness"] = v.witness->indices();
    j["witness_volume"] = v.witness_volume;
  }
}

void to_json(json& j, const StandardForm& f) {
  j = json{{"matrix", matrix_to_json(f.matrix)},
           {"B", matrix_to_json(f.b)},
           {"R", matrix_to_json(f.r)},
           {"permutation", f.permutation}};
}

void to_json(json& j, const PolytopeClass& c) {
  json vertices = json::array();
  for (std::size_t i = 0; i < c.vertices.size(); ++i) vertices.push_back(c.vertices.point(i));
  j = json{{"dimension", c.dimension},
           {"vertex_count", c.vertex_count},
           {"vertices", vertices},
           {"fingerprint", c.fingerprint}};
}

void to_json(json& j, const VertexBoundReport& r) {
  j = json{{"dimension", r.dimension}, {"vertices", r.vertices}, {"bound", r.bound}, {"ok", r.ok}, {"tight", r.tight}};
}

void to_json(json& j, const SearchResult& r) {
  j = json{{"m", r.m},
           {"mode", to_string(r.mode)},
           {"strategy", to_string(r.strategy)},
           {"max_columns", r.max_columns},
           {"witness", matrix_to_json(r.witness)},
           {"nodes", r.nodes},
           {"complete", r.complete},
           {"seconds", r.seconds}};
}

}  // namespace tumax
