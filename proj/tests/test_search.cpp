#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tumax/certify.hpp"
#include "tumax/families.hpp"
#include "tumax/search.hpp"

using namespace tumax;

namespace {

// Brute-force enumeration of {-1,0,1}^m filtered by a predicate.
template <class Keep>
std::set<IntVector> cube_vectors(std::size_t m, Keep keep) {
  std::set<IntVector> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    IntVector v(m);
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i, c /= 3) v[i] = static_cast<Int>(c % 3) - 1;
    if (keep(v)) out.insert(v);
  }
  return out;
}

Int total(const IntVector& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

bool basis_vector(const IntVector& v) {
  return std::count(v.begin(), v.end(), 0) == static_cast<std::ptrdiff_t>(v.size() - 1) && total(v) == 1;
}

SearchOptions single_thread() {
  SearchOptions o;
  o.threads = 1;
  return o;
}

}  // namespace

TEST_CASE("candidate columns") {
  auto c3 = candidate_columns(3, SearchMode::polytopal);
  CHECK(c3.size() == 3);
  std::set<IntVector> got(c3.begin(), c3.end());
  CHECK(got == std::set<IntVector>{{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}});
  CHECK(candidate_columns(2, SearchMode::polytopal).empty());
  CHECK(candidate_columns(1, SearchMode::heller) == std::vector<IntVector>{{-1}, {0}, {1}});
  for (std::size_t m = 1; m <= 5; ++m) {
    auto pol = candidate_columns(m, SearchMode::polytopal);
    auto odd = candidate_columns(m, SearchMode::odd_sums);
    auto all = candidate_columns(m, SearchMode::heller);
    CHECK(std::set<IntVector>(pol.begin(), pol.end()) ==
          cube_vectors(m, [](const IntVector& v) { return total(v) == 1 && !basis_vector(v); }));
    CHECK(std::set<IntVector>(odd.begin(), odd.end()) == cube_vectors(m, [](const IntVector& v) {
            return total(v) > 0 && total(v) % 2 == 1 && !basis_vector(v);
          }));
    CHECK(all.size() == cube_vectors(m, [](const IntVector&) { return true; }).size());
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  CHECK_THROWS_AS(candidate_columns(0, SearchMode::heller), UsageError);
}

TEST_CASE("extension test") {
  CHECK(is_extension_tu(IntMatrix(2, 0), IntVector{1, -1}));
  CHECK_FALSE(is_extension_tu(IntMatrix{{1}, {1}}, IntVector{1, -1}));
  CHECK(is_extension_tu(IntMatrix{{1}, {1}}, IntVector{1, 0}));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = rng() % 4;
    IntMatrix m = oracle::random_matrix(rng, rows, cols, -1, 1);
    if (!oracle::brute_force_tu(m)) continue;
    IntMatrix v = oracle::random_matrix(rng, rows, 1, -1, 1);
    CHECK(is_extension_tu(m, v.column(0)) == oracle::brute_force_tu(m.with_column(v.column(0))));
  }
}

TEST_CASE("polytopal search reaches h(m)") {
  const std::size_t expected[] = {0, 0, 2, 4, 6, 10};
  for (std::size_t m = 2; m <= 5; ++m) {
    SearchResult r = max_polytopal_tu_columns(m);
    CHECK(r.complete);
    CHECK(r.max_columns == expected[m]);
    CHECK(r.max_columns == static_cast<std::size_t>(h(static_cast<Int>(m))));
    CHECK(witness_certified(r));
    SearchResult f = max_polytopal_tu_columns(m, {.strategy = SearchStrategy::fast});
    CHECK(f.max_columns == expected[m]);
    CHECK(witness_certified(f));
  }
  SearchResult r5 = max_polytopal_tu_columns(5);
  CHECK(r5.witness.cols() == 10);
  CHECK(max_polytopal_tu_columns(4).max_columns == bipartite_extremal(4).cols());
  CHECK_THROWS_AS(max_polytopal_tu_columns(1), UsageError);
}

TEST_CASE("search is deterministic across thread counts") {
  for (std::size_t m = 3; m <= 5; ++m) {
    SearchOptions one = single_thread(), many;
    many.threads = 4;
    SearchResult a = max_polytopal_tu_columns(m, one), b = max_polytopal_tu_columns(m, many);
    CHECK(a.witness == b.witness);
    one.strategy = many.strategy = SearchStrategy::fast;
    CHECK(max_polytopal_tu_columns(m, one).witness == max_polytopal_tu_columns(m, many).witness);
  }
}

TEST_CASE("ordering, pruning and shadow checks do not change the maximum") {
  for (std::size_t m = 2; m <= 4; ++m) {
    SearchOptions base = single_thread();
    std::size_t ref = max_polytopal_tu_columns(m, base).max_columns;
    SearchOptions rev = base;
    rev.reverse_order = true;
    CHECK(max_polytopal_tu_columns(m, rev).max_columns == ref);
    SearchOptions full = base;
    full.incremental = false;
    CHECK(max_polytopal_tu_columns(m, full).max_columns == ref);
    SearchOptions shadow = base;
    shadow.shadow_check = true;
    SearchResult s = max_polytopal_tu_columns(m, shadow);
    CHECK(s.max_columns == ref);
    if (m >= 3) CHECK(s.shadow_checks > 0);
    SearchOptions sym = base;
    sym.strategy = SearchStrategy::fast;
    CHECK(max_polytopal_tu_columns(m, sym).max_columns == ref);

    SearchResult odd = max_odd_sum_tu_columns(m, shadow);
    SearchResult odd_rev = max_odd_sum_tu_columns(m, rev);
    CHECK(odd.max_columns == odd_rev.max_columns);
    CHECK(odd.max_columns >= ref);
    CHECK(witness_certified(odd));
  }
  for (std::size_t m = 1; m <= 2; ++m) {
    SearchOptions shadow = single_thread();
    shadow.shadow_check = true;
    CHECK(max_tu_columns(m, shadow).max_columns == m * m + m + 1);
  }
}

TEST_CASE("Heller search") {
  for (std::size_t m = 1; m <= 3; ++m) {
    SearchResult r = max_tu_columns(m);
    CHECK(r.complete);
    CHECK(r.max_columns == m * m + m + 1);
    CHECK(witness_certified(r));
    CHECK(r.witness.cols() == heller_family(m).cols());
  }
  CHECK_THROWS_AS(max_tu_columns(4), UsageError);
}

TEST_CASE("odd-sum search is reported") {
  SearchResult r3 = max_odd_sum_tu_columns(3);
  CHECK(r3.max_columns >= 4);
  CHECK(witness_certified(r3));
  SearchResult r4 = max_odd_sum_tu_columns(4);
  CHECK(r4.complete);
  MESSAGE("odd-sum maximum for m = 4: " << r4.max_columns << " (h(4) = " << h(4) << ")");
}

TEST_CASE("node budget flags an incomplete result") {
  SearchOptions o = single_thread();
  o.max_nodes = 5;
  SearchResult r = max_polytopal_tu_columns(5, o);
  CHECK_FALSE(r.complete);
  CHECK(r.nodes <= 6);
  CHECK(witness_certified(r));
}
