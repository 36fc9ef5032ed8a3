// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
//   --stretch   also runs the dimension 5 classification (reported only)

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tumax/certify.hpp"
#include "tumax/compose.hpp"
#include "tumax/families.hpp"
#include "tumax/graphical.hpp"
#include "tumax/polytope.hpp"
#include "tumax/search.hpp"

using namespace tumax;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

bool report(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << " [exception: " << e.what() << "]";
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > limit_seconds) {
    o.ok = false;
    o.note << " [over time limit " << limit_seconds << " s]";
  }
  std::printf("%s criterion %d: %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.note.str().c_str());
  std::fflush(stdout);
  return o.ok;
}

std::size_t distinct_count(const IntMatrix& m) {
  auto cols = m.columns();
  std::sort(cols.begin(), cols.end());
  return static_cast<std::size_t>(std::unique(cols.begin(), cols.end()) - cols.begin());
}

void sharpness(Outcome& o) {
  for (std::size_t m = 2; m <= 6; ++m) {
    IntMatrix hf = heller_family(m);
    o.expect(distinct_count(hf) == m * m + m + 1 && hf.cols() == m * m + m + 1, "heller columns m=" + std::to_string(m));
    o.expect(certify_tu(hf).is_tu, "heller TU m=" + std::to_string(m));
  }
  for (std::size_t m = 1; m <= 9; ++m) {
    if (m == 5) continue;
    IntMatrix be = bipartite_extremal(m);
    o.expect(static_cast<Int>(be.cols()) == h(static_cast<Int>(m)), "bipartite columns m=" + std::to_string(m));
    o.expect(is_prepared(be), "bipartite prepared m=" + std::to_string(m));
  }
  IntMatrix sp = sporadic_5x10();
  o.expect(sp.cols() == 10 && is_prepared(sp), "sporadic 5x10 prepared");
  o.note << " heller m=2..6, bipartite m=1..9 without 5, sporadic 5x10";
}

void exhaustive_bounds(Outcome& o) {
  const std::size_t expected[] = {0, 0, 2, 4, 6, 10};
  SearchOptions opt = search_options_from_environment();
  for (std::size_t m = 2; m <= 5; ++m) {
    SearchResult r = max_polytopal_tu_columns(m, opt);
    o.expect(r.complete && r.max_columns == expected[m] && witness_certified(r), "polytopal m=" + std::to_string(m));
    o.note << " h(" << m << ")=" << r.max_columns;
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    SearchResult r = max_tu_columns(m, opt);
    o.expect(r.complete && r.max_columns == m * m + m + 1 && witness_certified(r), "heller m=" + std::to_string(m));
    o.note << " heller(" << m << ")=" << r.max_columns;
  }
}

void stretch_m6() {
  SearchOptions opt = search_options_from_environment();
  opt.max_seconds = 3600;
  SearchResult r = max_polytopal_tu_columns(6, opt);
  std::printf("STRETCH criterion 2: m = 6 polytopal search max_columns %zu (target 12), %s, %llu nodes, %.2f s\n",
              r.max_columns, r.complete ? "complete" : "incomplete", static_cast<unsigned long long>(r.nodes),
              r.seconds);
  std::fflush(stdout);
}

void extralemma(Outcome& o) {
  auto reports = verify_extralemma(200);
  using P = std::vector<std::pair<Int, Int>>;
  const P want[] = {{}, {}, {{3, 1}, {3, 3}, {5, 1}}, {{2, 2}, {2, 4}, {4, 2}}};
  o.expect(reports.size() == 4, "four parts");
  for (std::size_t i = 0; i < reports.size() && i < 4; ++i) {
    o.expect(reports[i].found == want[i] && reports[i].match, "part " + std::to_string(i + 1));
  }
}

void classification(Outcome& o, std::vector<Classification>& keep) {
  const std::size_t expected[] = {0, 1, 2, 4, 13};
  keep.clear();
  keep.emplace_back();
  for (int d = 1; d <= 4; ++d) {
    auto t0 = Clock::now();
    Classification c = classify_unimodular(d);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    o.expect(c.classes.size() == expected[d], "d=" + std::to_string(d));
    o.expect(d == 4 ? secs < 1800 : secs < 60, "time d=" + std::to_string(d));
    o.note << " d=" << d << ":" << c.classes.size();
    keep.push_back(std::move(c));
  }
}

void vertex_bounds(Outcome& o, const std::vector<Classification>& classes) {
  for (int d = 1; d <= 4 && d < static_cast<int>(classes.size()); ++d) {
    std::size_t most = 0;
    for (const auto& cls : classes[static_cast<std::size_t>(d)].classes) {
      VertexBoundReport r = vertex_bound_check(cls.vertices);
      o.expect(r.ok, "bound d=" + std::to_string(d));
      most = std::max(most, r.vertices);
    }
    o.expect(most == vertex_bound(d), "maximum attained d=" + std::to_string(d));
  }
  bool ex4_class = false;
  if (classes.size() > 4) {
    for (const auto& cls : classes[4].classes)
      if (cls.vertex_count == 10 && lattice_isomorphic(cls.vertices, PointSet(ex4_matrix()))) ex4_class = true;
  }
  o.expect(ex4_class, "ex4 class attains 10");
  for (int d : {2, 3, 5, 6, 7}) {
    std::size_t a = static_cast<std::size_t>((d + 1) / 2), b = static_cast<std::size_t>(d / 2);
    VertexBoundReport r = vertex_bound_check(simplex_product(a, b));
    o.expect(r.dimension == d && r.tight, "simplex product tight d=" + std::to_string(d));
  }
}

Functional random_nonzero(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Int> val(-2, 2);
  Functional f(n);
  do
    for (auto& x : f) x = val(rng);
  while (std::all_of(f.begin(), f.end(), [](Int x) { return x == 0; }));
  return f;
}

void properties(Outcome& o) {
  std::mt19937_64 rng(2024);

  // (a) minor enumeration vs Ghouila-Houri
  std::size_t a_cases = 0, a_bad = 0;
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t c = 1; c <= 3; ++c) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < r * c; ++i) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<Int> e(r * c);
        std::size_t x = code;
        for (auto& v : e) {
          v = static_cast<Int>(x % 3) - 1;
          x /= 3;
        }
        IntMatrix m(r, c, e);
        ++a_cases;
        a_bad += is_totally_unimodular(m).is_tu != ghouila_houri_check(m).is_tu;
      }
    }
  for (int s = 0; s < 1000; ++s) {
    IntMatrix m = oracle::random_mixed_ternary(rng, 5, 8);
    ++a_cases;
    a_bad += is_totally_unimodular(m).is_tu != ghouila_houri_check(m).is_tu;
  }
  o.expect(a_bad == 0, "(a) oracle agreement");

  // (b) (I | B) TU iff B TU
  std::size_t b_bad = 0, b_tu = 0;
  for (int s = 0; s < 500; ++s) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix b = s % 2 && rows > 1 ? oracle::random_mixed_ternary(rng, rows, cols) : oracle::random_matrix(rng, rows, cols, -1, 1);
    bool tb = certify_tu(b).is_tu;
    b_tu += tb;
    b_bad += tb != certify_tu(hconcat(IntMatrix::identity(rows), b)).is_tu;
  }
  o.expect(b_bad == 0 && b_tu > 0, "(b) identity extension");

  // (c) sums preserve TU, (d) transported functionals re-certify
  std::size_t c_bad = 0, d_bad = 0;
  std::size_t d_counts[3] = {0, 0, 0};
  for (SumKind kind : {SumKind::one_sum, SumKind::two_sum, SumKind::three_sum, SumKind::delta_sum}) {
    for (int s = 0; s < 100; ++s) {
      Composition c = compose(random_sum_spec(kind, rng));
      bool tu = certify_tu(c.matrix).is_tu;
      bool gh = c.matrix.rows() <= 20 ? ghouila_houri_check(c.matrix).is_tu : tu;
      c_bad += !(tu && gh);
    }
  }
  const SumKind parts[3] = {SumKind::two_sum, SumKind::three_sum, SumKind::delta_sum};
  for (int p = 0; p < 3; ++p) {
    for (int s = 0; d_counts[p] < 100 && s < 20000; ++s) {
      SumSpec spec = random_sum_spec(parts[p], rng);
      IntMatrix m = compose(spec).matrix;
      Functional f = random_nonzero(rng, m.rows());
      IntVector w = left_multiply(f, m);
      std::vector<FactorCertificate> certs;
      try {
        certs = transport_functional(spec, f, w);
      } catch (const HypothesisError&) {
        continue;
      } catch (const SpecError&) {
        continue;
      }
      ++d_counts[p];
      for (const auto& c : certs) {
        bool nonzero_needed = std::any_of(c.w.begin(), c.w.end(), [](Int x) { return x != 0; });
        bool good = c.valued && c.coordinates_agree && c.inheritance_ok && (!nonzero_needed || c.nonzero) &&
                    left_multiply(c.functional, c.factor) == c.w;
        d_bad += !good;
      }
    }
  }
  o.expect(c_bad == 0, "(c) sums preserve TU");
  o.expect(d_bad == 0 && d_counts[0] >= 100 && d_counts[1] >= 100 && d_counts[2] >= 100, "(d) transport");

  // (e) network column bound
  SweepSummary e = sweep_network_bound(10000, 7, 7);
  o.expect(e.violations == 0 && e.instances >= 10000, "(e) network bound");

  // (f) transpose row bounds and pattern bounds
  SweepSummary f1 = sweep_transpose_bound(10000, 11);
  SweepSummary f2 = sweep_pattern_bounds(7, 4);
  o.expect(f1.violations == 0 && f1.instances >= 10000, "(f) transpose bound");
  o.expect(f2.violations == 0 && f2.instances > 0, "(f) pattern bound");

  o.note << " a:" << a_cases << " b:500 c:400 d:" << d_counts[0] << "/" << d_counts[1] << "/" << d_counts[2]
         << " e:" << e.instances << " f:" << f1.instances << "+" << f2.instances;
}

void round_trip(Outcome& o) {
  auto members = corpus::polytopal_unimodular(200, 99);
  std::size_t iso_checked = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const IntMatrix& m = members[i];
    StandardForm f = normalize_standard_form(m);
    IntVector sums = left_multiply(IntVector(f.matrix.rows(), 1), f.matrix);
    bool sums_one = std::all_of(sums.begin(), sums.end(), [](Int s) { return s == 1; });
    o.expect(sums_one && certify_tu(f.matrix).is_tu, "standard form of member " + std::to_string(i));
    o.expect(multiply(f.r, f.matrix) == m.select_columns(f.permutation), "R(I|B) member " + std::to_string(i));
    if (m.rows() - 1 <= 4) {
      ++iso_checked;
      o.expect(lattice_isomorphic(PointSet(m), PointSet(f.matrix)), "conv round trip member " + std::to_string(i));
    }
  }
  o.note << " members:" << members.size() << " isomorphism checked:" << iso_checked;
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;

  std::vector<Classification> classes;
  bool ok = true;
  ok &= report(1, "sharpness witnesses", 10, sharpness);
  ok &= report(2, "exhaustive bound verification", 300, exhaustive_bounds);
  stretch_m6();
  ok &= report(3, "h-inequality exception sets", 1, extralemma);
  ok &= report(4, "unimodular 0/1-polytope classification", 1800 + 180,
               [&](Outcome& o) { classification(o, classes); });
  ok &= report(5, "vertex bound", 600, [&](Outcome& o) { vertex_bounds(o, classes); });
  ok &= report(6, "property suites", 600, properties);
  ok &= report(7, "standard form round trip", 600, round_trip);
  if (stretch) {
    auto t0 = Clock::now();
    Classification c5 = classify_unimodular(5, {.use_vertex_bound = true, .stretch = true});
    std::printf("STRETCH criterion 4: d = 5 classes %zu (expected 38), %.1f s\n", c5.classes.size(),
                std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return ok ? 0 : 1;
}
