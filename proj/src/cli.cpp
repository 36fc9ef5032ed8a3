#include "tumax/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <random>
#include <sstream>

#include "tumax/io.hpp"

namespace tumax::cli {

namespace {

struct Context {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prefixes parse errors with the file name.
template <class Fn>
auto parse_file(const std::string& path, Fn parse) {
  std::string text = read_text(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.detail(), e.line(), e.column());
  }
}

IntMatrix read_matrix(const std::string& path) { return parse_file(path, [](const std::string& t) { return parse_matrix(t); }); }
ArcGraph read_graph(const std::string& path) { return parse_file(path, [](const std::string& t) { return parse_graph(t); }); }

json read_json(const std::string& path) {
  std::string text = read_text(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

bool is_scalar(const json& j) { return !j.is_array() && !j.is_object(); }

void write_text(std::ostream& os, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      bool inline_value = is_scalar(v) || (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar));
      if (inline_value) {
        os << indent << it.key() << ":";
        if (v.is_array()) {
          for (const auto& x : v) os << " " << x.dump();
        } else {
          os << " " << (v.is_string() ? v.get<std::string>() : v.dump());
        }
        os << "\n";
      } else {
        os << indent << it.key() << ":\n";
        write_text(os, v, indent + "  ");
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        os << indent << v.dump() << "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        os << indent;
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].dump();
        os << "\n";
      } else {
        write_text(os, v, indent + "  ");
        os << indent << "--\n";
      }
    }
  } else {
    os << indent << j.dump() << "\n";
  }
}

int emit(const Context& ctx, const std::string& command, const json& inputs, const json& result, int code) {
  if (ctx.format == "json") {
    json report{{"command", command}, {"inputs", inputs}, {"result", result}, {"exit", code}};
    *ctx.out << report.dump(2) << "\n";
  } else {
    *ctx.out << "command: " << command << "\n";
    write_text(*ctx.out, result, "");
    *ctx.out << "exit: " << code << "\n";
  }
  return code;
}

int emit_matrix(const Context& ctx, const std::string& command, const json& inputs, const IntMatrix& m,
                json extra = json::object()) {
  if (ctx.format == "text") {
    *ctx.out << format_matrix(m);
    return holds;
  }
  extra["rows"] = m.rows();
  extra["cols"] = m.cols();
  extra["matrix"] = matrix_to_json(m);
  return emit(ctx, command, inputs, extra, holds);
}

json file_input(const std::string& path, const IntMatrix& m) {
  return json{{"file", path}, {"matrix_text", format_matrix(m)}};
}

TuMethod method_or_auto(const std::string& name, const IntMatrix& m, const TuBudget& budget) {
  if (name == "auto") {
    return m.rows() + m.cols() <= budget.max_enumeration_size ? TuMethod::minor_enumeration : TuMethod::ghouila_houri;
  }
  return parse_tu_method(name);
}

// Two-colouring of the undirected graph behind the arcs; StructureError if odd cycle.
std::vector<int> bipartition(const ArcGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const Arc& a : g.arcs) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> colour(g.vertices, -1);
  for (std::size_t s = 0; s < g.vertices; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          throw StructureError("graph is not bipartite");
        }
      }
    }
  }
  return colour;
}

IntVector parse_int_list(const std::string& text, const char* what) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;

  CLI::App app{"Exact tools for totally unimodular matrices and unimodular polytopes", "tumax"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", ctx.seed, "Seed for randomized commands");

  std::function<int()> action;
  std::string file, method = "auto", tree_file, digraph_file, paths_file, graph_file, f_text, w_text, strategy = "verify";
  std::size_t m = 0, a = 0, b = 0, samples = 10000, max_edges = 7, max_paths = 4, threads = 0;
  int variant = 1, d = 0;
  Int max = 200;
  std::uint64_t budget_nodes = 0;
  double seconds = 0;
  bool random_spec = false, no_vertex_bound = false, stretch = false;
  TuBudget tu_budget;

  // check
  auto* check = app.add_subcommand("check", "Certify a property of a matrix file");
  check->require_subcommand(1);
  auto* check_tu = check->add_subcommand("tu", "Total unimodularity");
  check_tu->add_option("file", file)->required();
  check_tu->add_option("--method", method)->check(CLI::IsMember({"auto", "minor-enumeration", "minors", "ghouila-houri", "gh"}));
  check_tu->add_option("--max-enumeration", tu_budget.max_enumeration_size, "rows + cols limit for minor enumeration");
  check_tu->callback([&] {
    action = [&] {
      IntMatrix mat = read_matrix(file);
      TuVerdict v = is_totally_unimodular(mat, method_or_auto(method, mat, tu_budget), tu_budget);
      return emit(ctx, "check tu", file_input(file, mat), v, v.is_tu ? holds : fails);
    };
  });
  auto* check_uni = check->add_subcommand("unimodular", "Full row rank with maximal minors in {-1,0,1}");
  check_uni->add_option("file", file)->required();
  check_uni->callback([&] {
    action = [&] {
      IntMatrix mat = read_matrix(file);
      bool full = rank(mat) == mat.rows();
      bool uni = full && is_unimodular(mat);
      json r{{"unimodular", uni}, {"full_row_rank", full}};
      return emit(ctx, "check unimodular", file_input(file, mat), r, uni ? holds : fails);
    };
  });
  auto* check_pol = check->add_subcommand("polytopal", "Integral functional with value 1 on every column");
  check_pol->add_option("file", file)->required();
  check_pol->callback([&] {
    action = [&] {
      IntMatrix mat = read_matrix(file);
      auto f = polytopal_certificate(mat);
      json r{{"polytopal", f.has_value()}, {"functional", f ? json(*f) : json(nullptr)}};
      return emit(ctx, "check polytopal", file_input(file, mat), r, f ? holds : fails);
    };
  });
  auto* check_prep = check->add_subcommand("prepared", "Polytopal, TU and pairwise distinct columns");
  check_prep->add_option("file", file)->required();
  check_prep->callback([&] {
    action = [&] {
      IntMatrix mat = read_matrix(file);
      bool distinct = columns_distinct(mat).distinct;
      TuVerdict tu = certify_tu(mat);
      auto f = polytopal_certificate(mat);
      bool ok = distinct && tu.is_tu && f;
      json r{{"prepared", ok}, {"distinct_columns", distinct}, {"tu", tu}, {"functional", f ? json(*f) : json(nullptr)}};
      return emit(ctx, "check prepared", file_input(file, mat), r, ok ? holds : fails);
    };
  });
  auto* check_upol = check->add_subcommand("unimodular-polytope", "Columns as vertices of a unimodular polytope");
  check_upol->add_option("file", file)->required();
  check_upol->callback([&] {
    action = [&] {
      IntMatrix mat = read_matrix(file);
      UnimodularPolytopeVerdict v = is_unimodular_polytope(PointSet(mat));
      return emit(ctx, "check unimodular-polytope", file_input(file, mat), v, v.unimodular ? holds : fails);
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate extremal matrices");
  gen->require_subcommand(1);
  auto gen_cmd = [&](const char* name, const char* help, std::function<IntMatrix()> make,
                     std::function<json()> inputs, const char* certification) {
    auto* sc = gen->add_subcommand(name, help);
    sc->callback([&ctx, &action, name, make, inputs, certification] {
      action = [&ctx, name, make, inputs, certification] {
        return emit_matrix(ctx, std::string("gen ") + name, inputs(), make(), json{{"certification", certification}});
      };
    });
    return sc;
  };
  gen_cmd("heller", "All differences e_i - e_j, identity, its negative and zero",
          [&] { return heller_family(m); }, [&] { return json{{"m", m}}; }, "tu")
      ->add_option("--m", m)->required();
  gen_cmd("bipartite", "Polytopal extremal family for m != 5", [&] { return bipartite_extremal(m); },
          [&] { return json{{"m", m}}; }, "prepared")
      ->add_option("--m", m)->required();
  gen_cmd("sporadic-5x10", "The 5 x 10 prepared matrix", [] { return sporadic_5x10(); },
          [] { return json::object(); }, "prepared");
  gen_cmd("sporadic-5x5", "One of the two sporadic 5 x 5 matrices", [&] { return sporadic_5x5(variant); },
          [&] { return json{{"variant", variant}}; }, "tu")
      ->add_option("--variant", variant)->check(CLI::IsMember({1, 2}));
  gen_cmd("ex4", "Vertices of the 4-dimensional polytope with 10 vertices", [] { return ex4_matrix(); },
          [] { return json::object(); }, "unimodular-polytope");
  auto* gen_sp = gen_cmd("simplex-product", "Vertices of Delta_a x Delta_b",
                         [&] { return simplex_product(a, b).points(); }, [&] { return json{{"a", a}, {"b", b}}; },
                         "unimodular-polytope");
  gen_sp->add_option("--a", a)->required();
  gen_sp->add_option("--b", b)->required();
  auto* gen_ep = gen_cmd(
      "edge-polytope", "Edge polytope of a bipartite graph (file) or K_{a,b}",
      [&] {
        if (!graph_file.empty()) {
          ArcGraph g = read_graph(graph_file);
          std::vector<std::pair<std::size_t, std::size_t>> edges;
          for (const Arc& arc : g.arcs) edges.emplace_back(arc.tail, arc.head);
          return edge_polytope(g.vertices, bipartition(g), edges).points();
        }
        if (a == 0 || b == 0) throw UsageError("edge-polytope needs --graph or positive --a and --b");
        return complete_bipartite_edge_polytope(a, b).points();
      },
      [&] { return graph_file.empty() ? json{{"a", a}, {"b", b}} : json{{"graph", graph_file}}; },
      "unimodular-polytope");
  gen_ep->add_option("--graph", graph_file);
  gen_ep->add_option("--a", a);
  gen_ep->add_option("--b", b);

  // network
  auto* network = app.add_subcommand("network", "Network matrices of a tree and a digraph");
  network->require_subcommand(1);
  auto* net_build = network->add_subcommand("build", "Network matrix");
  auto* net_patterns = network->add_subcommand("patterns", "Edge patterns of paths in a tree");
  auto* net_bounds = network->add_subcommand("bounds", "Column and row bounds for one instance");
  for (auto* sc : {net_build, net_patterns, net_bounds}) sc->add_option("--tree", tree_file)->required();
  net_build->add_option("--digraph", digraph_file)->required();
  net_bounds->add_option("--digraph", digraph_file)->required();
  net_patterns->add_option("--paths", paths_file)->required();
  net_build->callback([&] {
    action = [&] {
      IntMatrix mat = network_matrix(read_graph(tree_file), read_graph(digraph_file));
      return emit_matrix(ctx, "network build", json{{"tree", tree_file}, {"digraph", digraph_file}}, mat);
    };
  });
  net_patterns->callback([&] {
    action = [&] {
      ArcGraph tree = read_graph(tree_file);
      auto paths = parse_file(paths_file, [](const std::string& t) { return parse_paths(t); });
      PatternReport r = verify_pattern_bounds(tree, paths);
      json patterns = json::array();
      for (const Pattern& p : edge_patterns(tree, paths)) {
        json set = json::array();
        for (std::size_t j = 0; j < paths.size(); ++j)
          if (p.contains(j)) set.push_back(j);
        patterns.push_back(set);
      }
      json result = r;
      result["pattern_sets"] = patterns;
      return emit(ctx, "network patterns", json{{"tree", tree_file}, {"paths", paths_file}}, result,
                  r.bound_ok && r.odd_bound_ok ? holds : fails);
    };
  });
  net_bounds->callback([&] {
    action = [&] {
      ArcGraph tree = read_graph(tree_file), digraph = read_graph(digraph_file);
      NetworkBoundReport col = verify_network_column_bound(tree, digraph);
      TransposeRowReport row = verify_transpose_row_bound(network_matrix(tree, digraph));
      json r{{"column_bound", col}, {"row_bound", row}};
      return emit(ctx, "network bounds", json{{"tree", tree_file}, {"digraph", digraph_file}}, r,
                  col.ok && row.bounds_ok ? holds : fails);
    };
  });

  // sum
  auto* sum = app.add_subcommand("sum", "Compose TU matrices by 1-, 2-, 3- and Delta-sums");
  sum->require_subcommand(1);
  for (SumKind kind : {SumKind::one_sum, SumKind::two_sum, SumKind::three_sum, SumKind::delta_sum}) {
    std::string name = to_string(kind);
    name = name.substr(0, name.find('-'));
    auto* sc = sum->add_subcommand(name, "Build a " + to_string(kind) + " from a JSON spec");
    sc->add_option("spec", file, "SumSpec JSON file");
    sc->add_flag("--random", random_spec, "Random valid spec from --seed");
    sc->callback([&, kind, name] {
      action = [&, kind, name] {
        SumSpec spec;
        json inputs;
        if (random_spec) {
          std::mt19937_64 rng(ctx.seed);
          spec = random_sum_spec(kind, rng);
          inputs = json{{"random", true}, {"seed", ctx.seed}};
        } else {
          if (file.empty()) throw UsageError("sum " + name + " needs a spec file or --random");
          spec = sum_spec_from_json(read_json(file));
          inputs = json{{"spec", file}};
          if (spec.kind != kind) throw UsageError("spec kind is " + to_string(spec.kind) + ", expected " + to_string(kind));
        }
        Composition c = compose(spec);
        TuVerdict tu = certify_tu(c.matrix);
        json r{{"spec", spec}, {"matrix", matrix_to_json(c.matrix)}, {"tu", tu}};
        if (kind == SumKind::three_sum) r["glue"] = to_string(c.glue);
        return emit(ctx, "sum " + name, inputs, r, tu.is_tu ? holds : fails);
      };
    });
  }
  auto* transport = sum->add_subcommand("transport", "Transport a w-valued functional to the factors");
  transport->add_option("spec", file)->required();
  transport->add_option("--f", f_text, "Functional, comma separated (default: certificate for w)");
  transport->add_option("--w", w_text, "Column values, comma separated (default: all ones)");
  transport->callback([&] {
    action = [&] {
      SumSpec spec = sum_spec_from_json(read_json(file));
      Composition c = compose(spec);
      IntVector w = w_text.empty() ? IntVector(c.matrix.cols(), 1) : parse_int_list(w_text, "--w");
      Functional f;
      if (f_text.empty()) {
        auto cert = w_valued_certificate(c.matrix, w);
        if (!cert) throw PreconditionError("composed matrix is not w-valued");
        f = *cert;
      } else {
        f = parse_int_list(f_text, "--f");
      }
      auto certs = transport_functional(spec, f, w);
      bool ok = std::all_of(certs.begin(), certs.end(), [](const FactorCertificate& x) {
        return x.valued && x.coordinates_agree && x.inheritance_ok;
      });
      json r{{"functional", f}, {"w", w}, {"factors", certs}, {"ok", ok}};
      return emit(ctx, "sum transport", json{{"spec", file}}, r, ok ? holds : fails);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check the column and vertex bounds numerically");
  verify->require_subcommand(1);
  auto* v_extra = verify->add_subcommand("extralemma", "Exception sets of the h-inequalities");
  v_extra->add_option("--max", max)->capture_default_str();
  v_extra->callback([&] {
    action = [&] {
      auto reports = verify_extralemma(max);
      bool ok = std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.match; });
      return emit(ctx, "verify extralemma", json{{"max", max}}, json{{"parts", reports}, {"match", ok}},
                  ok ? holds : fails);
    };
  });
  auto search_cmd = [&](const char* name, const char* help, SearchMode mode) {
    auto* sc = verify->add_subcommand(name, help);
    sc->add_option("--m", m)->required();
    if (mode == SearchMode::polytopal) sc->add_option("--mode", strategy)->check(CLI::IsMember({"verify", "fast"}));
    sc->add_option("--threads", threads);
    sc->add_option("--budget-nodes", budget_nodes);
    sc->add_option("--seconds", seconds, "Wall-clock budget");
    sc->callback([&, name, mode] {
      action = [&, name, mode] {
        SearchOptions o;
        o.strategy = parse_search_strategy(strategy);
        o = search_options_from_environment(o);
        if (threads) o.threads = static_cast<unsigned>(threads);
        if (budget_nodes) o.max_nodes = budget_nodes;
        o.max_seconds = seconds;
        SearchResult r = mode == SearchMode::polytopal ? max_polytopal_tu_columns(m, o)
                         : mode == SearchMode::heller  ? max_tu_columns(m, o)
                                                       : max_odd_sum_tu_columns(m, o);
        json result = r;
        result["witness_certified"] = witness_certified(r);
        int code = holds;
        if (mode != SearchMode::odd_sums) {
          Int expected = mode == SearchMode::polytopal ? h(static_cast<Int>(m)) : static_cast<Int>(m * m + m + 1);
          result["expected"] = expected;
          result["match"] = r.complete && static_cast<Int>(r.max_columns) == expected;
          if (r.complete && static_cast<Int>(r.max_columns) != expected) code = fails;
        }
        if (!r.complete) code = budget;
        return emit(ctx, std::string("verify ") + name, json{{"m", m}, {"mode", to_string(o.strategy)}}, result, code);
      };
    });
  };
  search_cmd("polytopal-bound", "Exhaustive maximum of prepared m-row matrices", SearchMode::polytopal);
  search_cmd("heller-bound", "Exhaustive maximum of distinct TU columns", SearchMode::heller);
  search_cmd("odd-sum-bound", "Exhaustive maximum under positive odd column sums", SearchMode::odd_sums);
  auto* v_transpose = verify->add_subcommand("transpose-bound", "Random transpose bounds and exhaustive patterns");
  v_transpose->add_option("--samples", samples)->capture_default_str();
  v_transpose->add_option("--max-edges", max_edges)->capture_default_str();
  v_transpose->add_option("--max-paths", max_paths)->capture_default_str();
  v_transpose->callback([&] {
    action = [&] {
      SweepSummary rows = sweep_transpose_bound(samples, ctx.seed);
      SweepSummary patterns = sweep_pattern_bounds(max_edges, max_paths);
      bool ok = rows.violations == 0 && patterns.violations == 0;
      json in{{"samples", samples}, {"seed", ctx.seed}, {"max_edges", max_edges}, {"max_paths", max_paths}};
      return emit(ctx, "verify transpose-bound", in, json{{"random_rows", rows}, {"exhaustive_patterns", patterns}},
                  ok ? holds : fails);
    };
  });
  auto* v_network = verify->add_subcommand("network-bound", "Random network column bound instances");
  v_network->add_option("--samples", samples)->capture_default_str();
  v_network->callback([&] {
    action = [&] {
      SweepSummary s = sweep_network_bound(samples, ctx.seed);
      return emit(ctx, "verify network-bound", json{{"samples", samples}, {"seed", ctx.seed}}, s,
                  s.violations == 0 ? holds : fails);
    };
  });
  auto* v_vertex = verify->add_subcommand("vertex-bound", "Vertex count of unimodular polytopes");
  v_vertex->add_option("file", file, "Vertices as matrix columns");
  v_vertex->add_option("--d", d, "Check every classified polytope of dimension d");
  v_vertex->callback([&] {
    action = [&] {
      if (!file.empty()) {
        IntMatrix mat = read_matrix(file);
        VertexBoundReport r = vertex_bound_check(PointSet(mat));
        return emit(ctx, "verify vertex-bound", file_input(file, mat), r, r.ok ? holds : fails);
      }
      if (d < 1) throw UsageError("vertex-bound needs a point file or --d");
      Classification c = classify_unimodular(d);
      json reports = json::array();
      bool ok = true;
      std::size_t most = 0;
      for (const auto& cls : c.classes) {
        VertexBoundReport r = vertex_bound_check(cls.vertices);
        ok = ok && r.ok;
        most = std::max(most, r.vertices);
        reports.push_back(r);
      }
      json result{{"bound", vertex_bound(d)}, {"max_vertices", most}, {"ok", ok}, {"classes", reports}};
      return emit(ctx, "verify vertex-bound", json{{"d", d}}, result, ok ? holds : fails);
    };
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Unimodular 0/1-polytopes of dimension d up to lattice equivalence");
  classify->add_option("--d", d)->required();
  classify->add_flag("--no-vertex-bound", no_vertex_bound, "Do not cap subsets at h(d + 1) points");
  classify->add_flag("--stretch", stretch, "Allow d = 5");
  classify->callback([&] {
    action = [&] {
      Classification c = classify_unimodular(d, {.use_vertex_bound = !no_vertex_bound, .stretch = stretch});
      json classes = json::array();
      for (const auto& cls : c.classes) classes.push_back(cls);
      if (ctx.format == "text") {
        json summary{{"classes", c.classes.size()}, {"subsets_visited", c.subsets_visited},
                     {"symmetry_classes", c.symmetry_classes}};
        json counts = json::array();
        for (const auto& cls : c.classes) counts.push_back(cls.vertex_count);
        summary["vertex_counts"] = counts;
        return emit(ctx, "classify", json{{"d", d}}, summary, holds);
      }
      return emit(ctx, "classify", json{{"d", d}, {"vertex_bound", !no_vertex_bound}}, classes, holds);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return holds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return holds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  if (!action) {
    err << "error: no command\n";
    return usage;
  }

  std::string command;
  for (const auto* sc = app.get_subcommands().front(); sc;) {
    command += (command.empty() ? "" : " ") + sc->get_name();
    auto subs = sc->get_subcommands();
    sc = subs.empty() ? nullptr : subs.front();
  }
  auto fail = [&](int code, const std::string& kind, const std::string& what) {
    err << "error: " << what << "\n";
    if (code == budget) emit(ctx, command, json::object(), json{{"error", kind}, {"message", what}}, code);
    return code;
  };
  try {
    return action();
  } catch (const BudgetExceeded& e) {
    return fail(budget, "budget", e.what());
  } catch (const OverflowError& e) {
    return fail(budget, "overflow", e.what());
  } catch (const WitnessMismatch& e) {
    return fail(fails, "witness", e.what());
  } catch (const Error& e) {
    return fail(usage, "input", e.what());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return fails;
  }
}

}  // namespace tumax::cli
