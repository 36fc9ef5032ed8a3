#include "tumax/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "tumax/certify.hpp"
#include "tumax/combinatorics.hpp"
#include "tumax/families.hpp"

namespace tumax {

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::polytopal: return "polytopal";
    case SearchMode::heller: return "heller";
    case SearchMode::odd_sums: return "odd-sums";
  }
  return "?";
}

std::string to_string(SearchStrategy strategy) { return strategy == SearchStrategy::verify ? "verify" : "fast"; }

SearchMode parse_search_mode(std::string_view name) {
  if (name == "polytopal") return SearchMode::polytopal;
  if (name == "heller") return SearchMode::heller;
  if (name == "odd-sums" || name == "odd") return SearchMode::odd_sums;
  throw UsageError("unknown search mode '" + std::string(name) + "'");
}

SearchStrategy parse_search_strategy(std::string_view name) {
  if (name == "verify") return SearchStrategy::verify;
  if (name == "fast") return SearchStrategy::fast;
  throw UsageError("unknown search strategy '" + std::string(name) + "'");
}

namespace {

std::uint64_t parse_env_count(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw UsageError(std::string(name) + " must be a non-negative integer");
  return v;
}

}  // namespace

SearchOptions search_options_from_environment(SearchOptions base) {
  if (std::uint64_t t = parse_env_count("TUMAX_THREADS")) base.threads = static_cast<unsigned>(t);
  if (std::uint64_t n = parse_env_count("TUMAX_BUDGET_NODES")) base.max_nodes = n;
  return base;
}

std::vector<IntVector> candidate_columns(std::size_t m, SearchMode mode) {
  if (m < 1) throw UsageError("m must be at least 1");
  if (m > 8) throw UsageError("candidate enumeration is limited to m <= 8");
  std::vector<IntVector> out;
  IntVector v(m, -1);
  for (;;) {
    Int sum = std::accumulate(v.begin(), v.end(), Int{0});
    std::size_t support = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Int x) { return x != 0; }));
    bool basis = support == 1 && sum == 1;
    bool keep = false;
    switch (mode) {
      case SearchMode::polytopal: keep = sum == 1 && !basis; break;
      case SearchMode::heller: keep = true; break;
      case SearchMode::odd_sums: keep = sum > 0 && sum % 2 == 1 && !basis; break;
    }
    if (keep) out.push_back(v);
    std::size_t i = m;
    while (i > 0 && v[i - 1] == 1) v[--i] = -1;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

namespace {

constexpr std::size_t kMaxOrder = 8;

Int small_det(Int* a, std::size_t k) {
  Int sign = 1, prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p * k + p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r * k + p] == 0) ++r;
      if (r == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(a[p * k + c], a[r * k + c]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j)
        a[i * k + j] = (a[i * k + j] * a[p * k + p] - a[i * k + p] * a[p * k + j]) / prev;
    prev = a[p * k + p];
  }
  return sign * a[(k - 1) * k + (k - 1)];
}

// Every square minor of (cols | v) that uses v and has order >= min_order.
bool extension_ok(const std::vector<const Int*>& cols, const Int* v, std::size_t m, std::size_t min_order) {
  const std::size_t s = cols.size();
  Int buf[kMaxOrder * kMaxOrder];
  for (std::size_t k = std::max<std::size_t>(min_order, 1); k <= m && k <= s + 1; ++k) {
    bool ok = for_each_combination(m, k, [&](const std::vector<std::size_t>& rows) {
      bool touches = false;
      for (std::size_t r : rows) touches = touches || v[r] != 0;
      if (!touches) return true;
      return for_each_combination(s, k - 1, [&](const std::vector<std::size_t>& pick) {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j + 1 < k; ++j) buf[i * k + j] = cols[pick[j]][rows[i]];
          buf[i * k + k - 1] = v[rows[i]];
        }
        Int d = small_det(buf, k);
        return d >= -1 && d <= 1;
      });
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_extension_tu(const IntMatrix& m, std::span<const Int> v) {
  if (v.size() != m.rows()) throw UsageError("column length does not match the matrix");
  if (m.rows() > kMaxOrder) {
    return certify_tu(m.with_column(v)).is_tu;
  }
  std::vector<IntVector> cols = m.columns();
  std::vector<const Int*> ptrs;
  for (const auto& c : cols) ptrs.push_back(c.data());
  return extension_ok(ptrs, v.data(), m.rows(), 1);
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

using Clock = std::chrono::steady_clock;

struct Problem {
  std::size_t m = 0;
  SearchMode mode{};
  SearchOptions options;
  std::vector<IntVector> candidates;
  std::vector<Bits> compatible;  // pairwise: all 2x2 minors of (c_i | c_j) fine
  std::size_t offset = 0;        // implicit identity columns
  std::size_t target = 0;        // fast mode stop, in candidate columns
  std::vector<bool> orbit_rep;   // fast mode: allowed first candidates
};

struct Item {
  std::vector<std::size_t> prefix;
  Bits allowed;
};

struct Shared {
  std::atomic<std::size_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> shadow{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::size_t> first_hit{SIZE_MAX};
  Clock::time_point start = Clock::now();
};

class Worker {
 public:
  Worker(const Problem& p, Shared& sh) : p_(p), sh_(sh) {}

  void run(std::size_t item_index, const Item& item) {
    item_ = item_index;
    chosen_ = item.prefix;
    best_ = chosen_;
    note_best();
    dfs(item.allowed);
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  bool stopped() const {
    return sh_.budget_hit.load(std::memory_order_relaxed) || sh_.first_hit.load(std::memory_order_relaxed) < item_;
  }

  void note_best() {
    std::size_t cur = sh_.best.load();
    while (best_.size() > cur && !sh_.best.compare_exchange_weak(cur, best_.size())) {
    }
    if (p_.options.strategy == SearchStrategy::fast && best_.size() >= p_.target) {
      std::size_t hit = sh_.first_hit.load();
      while (item_ < hit && !sh_.first_hit.compare_exchange_weak(hit, item_)) {
      }
    }
  }

  void count_node() {
    std::uint64_t n = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (p_.options.max_nodes && n >= p_.options.max_nodes) sh_.budget_hit = true;
    if (p_.options.max_seconds > 0 && (n & 1023u) == 0) {
      std::chrono::duration<double> el = Clock::now() - sh_.start;
      if (el.count() > p_.options.max_seconds) sh_.budget_hit = true;
    }
  }

  bool extends(std::size_t cand) {
    std::vector<const Int*> cols;
    for (std::size_t c : chosen_) cols.push_back(p_.candidates[c].data());
    const Int* v = p_.candidates[cand].data();
    bool fast_answer = true;
    if (p_.options.incremental) fast_answer = extension_ok(cols, v, p_.m, 3);
    if (!p_.options.incremental || p_.options.shadow_check) {
      std::vector<IntVector> all;
      for (std::size_t c : chosen_) all.push_back(p_.candidates[c]);
      all.push_back(p_.candidates[cand]);
      bool full = is_totally_unimodular(IntMatrix::from_columns(p_.m, all), TuMethod::minor_enumeration,
                                        TuBudget{64, 20})
                      .is_tu;
      if (p_.options.shadow_check) {
        sh_.shadow.fetch_add(1, std::memory_order_relaxed);
        if (full != fast_answer) throw std::logic_error("incremental TU test disagrees with minor enumeration");
      }
      return full;
    }
    return fast_answer;
  }

  void dfs(const Bits& allowed) {
    count_node();
    if (stopped()) return;
    if (chosen_.size() > best_.size()) {
      best_ = chosen_;
      note_best();
      if (p_.options.strategy == SearchStrategy::fast && best_.size() >= p_.target) return;
    }
    std::size_t remaining = popcount(allowed);
    for (std::size_t w = 0; w < allowed.size(); ++w) {
      std::uint64_t word = allowed[w];
      while (word) {
        std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(word));
        word &= word - 1;
        std::size_t cand = w * 64 + bit;
        // cand and everything after it in `allowed`
        std::size_t bound = chosen_.size() + remaining;
        --remaining;
        if (bound <= best_.size() || bound < sh_.best.load(std::memory_order_relaxed)) return;
        if (!extends(cand)) continue;
        Bits next(allowed.size());
        for (std::size_t i = 0; i < allowed.size(); ++i) next[i] = allowed[i] & p_.compatible[cand][i];
        for (std::size_t i = 0; i < w; ++i) next[i] = 0;
        next[w] &= bit == 63 ? 0 : ~((std::uint64_t{2} << bit) - 1);
        chosen_.push_back(cand);
        dfs(next);
        chosen_.pop_back();
        if (stopped()) return;
      }
    }
  }

  const Problem& p_;
  Shared& sh_;
  std::size_t item_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

std::vector<std::vector<std::size_t>> coordinate_permutations(std::size_t m) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// A candidate is an orbit representative when no symmetry maps it to an
// earlier candidate.
std::vector<bool> orbit_representatives(const std::vector<IntVector>& cands, std::size_t m, bool signed_group) {
  std::vector<bool> rep(cands.size(), true);
  auto perms = coordinate_permutations(m);
  const std::size_t flips = signed_group ? (std::size_t{1} << m) : 1;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (const auto& perm : perms) {
      for (std::size_t f = 0; f < flips && rep[i]; ++f) {
        IntVector img(m);
        for (std::size_t r = 0; r < m; ++r) img[perm[r]] = ((f >> r) & 1u) ? -cands[i][r] : cands[i][r];
        if (img < cands[i]) rep[i] = false;
      }
      if (!rep[i]) break;
    }
  }
  return rep;
}

SearchResult run_search(std::size_t m, SearchMode mode, const SearchOptions& options) {
  auto t0 = Clock::now();
  Problem p;
  p.m = m;
  p.mode = mode;
  p.options = options;
  p.candidates = candidate_columns(m, mode);
  if (options.reverse_order) std::reverse(p.candidates.begin(), p.candidates.end());
  p.offset = mode == SearchMode::heller ? 0 : m;
  const std::size_t n = p.candidates.size();
  const std::size_t words = (n + 63) / 64;
  p.compatible.assign(n, Bits(words, 0));
  std::uint64_t pair_checks = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<const Int*> one{p.candidates[i].data()};
      bool ok = extension_ok(one, p.candidates[j].data(), m, 2);
      if (options.shadow_check) {
        std::vector<IntVector> pair{p.candidates[i], p.candidates[j]};
        if (ok != is_totally_unimodular(IntMatrix::from_columns(m, pair)).is_tu)
          throw std::logic_error("pairwise TU test disagrees with minor enumeration");
        ++pair_checks;
      }
      if (ok) p.compatible[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  if (mode == SearchMode::heller) {
    p.target = static_cast<std::size_t>(m * m + m + 1);
  } else if (mode == SearchMode::polytopal) {
    p.target = static_cast<std::size_t>(h(static_cast<Int>(m))) - m;
  } else {
    p.target = n + 1;  // no target: the bound is not a theorem here
  }
  const bool fast = options.strategy == SearchStrategy::fast;
  p.orbit_rep = fast ? orbit_representatives(p.candidates, m, mode == SearchMode::heller) : std::vector<bool>(n, true);

  // depth-1 work items in candidate order
  std::vector<Item> items;
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.orbit_rep[i]) continue;
    Bits allowed = p.compatible[i];
    for (std::size_t j = 0; j <= i; ++j) allowed[j / 64] &= ~(std::uint64_t{1} << (j % 64));
    items.push_back(Item{{i}, std::move(allowed)});
  }

  Shared sh;
  std::vector<std::vector<std::size_t>> found(items.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= items.size() || sh.budget_hit || sh.first_hit.load() < k) break;
        Worker w(p, sh);
        w.run(k, items[k]);
        found[k] = w.best();
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      sh.budget_hit = true;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<std::size_t> best;
  for (std::size_t k = 0; k < found.size(); ++k)
    if (found[k].size() > best.size()) best = found[k];

  SearchResult r;
  r.m = m;
  r.mode = mode;
  r.strategy = options.strategy;
  std::vector<IntVector> cols;
  if (p.offset) {
    for (std::size_t i = 0; i < m; ++i) {
      IntVector e(m, 0);
      e[i] = 1;
      cols.push_back(e);
    }
  }
  for (std::size_t c : best) cols.push_back(p.candidates[c]);
  r.witness = IntMatrix::from_columns(m, cols);
  r.max_columns = cols.size();
  r.nodes = sh.nodes.load();
  r.shadow_checks = pair_checks + sh.shadow.load();
  r.complete = !sh.budget_hit.load();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace

SearchResult max_polytopal_tu_columns(std::size_t m, const SearchOptions& options) {
  if (m < 2 || m > 7) throw UsageError("polytopal search needs 2 <= m <= 7");
  return run_search(m, SearchMode::polytopal, options);
}

SearchResult max_tu_columns(std::size_t m, const SearchOptions& options) {
  if (m < 1 || m > 3) throw UsageError("Heller search needs 1 <= m <= 3");
  return run_search(m, SearchMode::heller, options);
}

SearchResult max_odd_sum_tu_columns(std::size_t m, const SearchOptions& options) {
  if (m < 1 || m > 7) throw UsageError("odd-sum search needs 1 <= m <= 7");
  return run_search(m, SearchMode::odd_sums, options);
}

bool witness_certified(const SearchResult& r) {
  const IntMatrix& w = r.witness;
  if (w.cols() != r.max_columns || w.rows() != r.m) return false;
  if (r.mode == SearchMode::polytopal) return is_prepared(w);
  if (!columns_distinct(w).distinct || !certify_tu(w).is_tu) return false;
  if (r.mode == SearchMode::odd_sums) {
    IntVector sums = left_multiply(IntVector(w.rows(), 1), w);
    return std::all_of(sums.begin(), sums.end(), [](Int s) { return s > 0 && s % 2 == 1; });
  }
  return true;
}

}  // namespace tumax
