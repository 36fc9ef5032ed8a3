#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tumax/matrix.hpp"

namespace tumax {

// polytopal: (I_m | M'), column sums 1. heller: any {-1,0,1} columns.
// odd_sums: (I_m | M'), positive odd column sums.
enum class SearchMode { polytopal, heller, odd_sums };
enum class SearchStrategy { verify, fast };

std::string to_string(SearchMode mode);
std::string to_string(SearchStrategy strategy);
SearchMode parse_search_mode(std::string_view name);
SearchStrategy parse_search_strategy(std::string_view name);

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::verify;
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0;       // 0: unlimited
  unsigned threads = 0;         // 0: hardware concurrency
  bool incremental = true;      // false: full TU test per extension
  bool shadow_check = false;    // cross-check every extension against the full test
  bool reverse_order = false;
};

// Applies TUMAX_THREADS and TUMAX_BUDGET_NODES when set.
SearchOptions search_options_from_environment(SearchOptions base = {});

struct SearchResult {
  std::size_t m = 0;
  SearchMode mode = SearchMode::polytopal;
  SearchStrategy strategy = SearchStrategy::verify;
  std::size_t max_columns = 0;
  IntMatrix witness;
  std::uint64_t nodes = 0;
  std::uint64_t shadow_checks = 0;
  bool complete = true;
  double seconds = 0;
};

// Candidate columns in lexicographic order; the identity block of the
// polytopal and odd-sum modes is implicit and excluded.
std::vector<IntVector> candidate_columns(std::size_t m, SearchMode mode);

// (M | v) is TU, given M TU. Only minors through v are evaluated.
bool is_extension_tu(const IntMatrix& m, std::span<const Int> v);

SearchResult max_polytopal_tu_columns(std::size_t m, const SearchOptions& options = {});
SearchResult max_tu_columns(std::size_t m, const SearchOptions& options = {});
SearchResult max_odd_sum_tu_columns(std::size_t m, const SearchOptions& options = {});

// The mode's certification of the witness and its column count.
bool witness_certified(const SearchResult& r);

}  // namespace tumax
