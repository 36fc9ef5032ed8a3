#include "tumax/certify.hpp"

#include <algorithm>
#include <cstdlib>

#include "tumax/combinatorics.hpp"
#include "tumax/lattice.hpp"

namespace tumax {

std::string to_string(TuMethod m) {
  return m == TuMethod::minor_enumeration ? "minor-enumeration" : "ghouila-houri";
}

TuMethod parse_tu_method(std::string_view name) {
  if (name == "minor-enumeration" || name == "minors") return TuMethod::minor_enumeration;
  if (name == "ghouila-houri" || name == "gh") return TuMethod::ghouila_houri;
  throw UsageError("unknown TU method '" + std::string(name) + "'");
}

namespace {

// Determinant of m[rows, cols] using a scratch buffer.
Int sub_determinant(const IntMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  std::vector<Int> buf(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = m(rows[i], cols[j]);
  return determinant(IntMatrix(k, k, std::move(buf)));
}

std::optional<MinorWitness> first_ternary_violation(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > 1) return MinorWitness{IndexSet{i}, IndexSet{j}, m(i, j)};
  return std::nullopt;
}

// First |minor| >= 2 among the given row set and all k-column sets.
std::optional<MinorWitness> witness_on_rows(const IntMatrix& m, const std::vector<std::size_t>& rows) {
  constexpr std::uint64_t kMaxColumnSets = 4'000'000;
  if (binomial(m.cols(), rows.size()) > kMaxColumnSets) return std::nullopt;
  std::optional<MinorWitness> found;
  for_each_combination(m.cols(), rows.size(), [&](const std::vector<std::size_t>& cols) {
    Int d = sub_determinant(m, rows, cols);
    if (d > 1 || d < -1) {
      found = MinorWitness{IndexSet(rows), IndexSet(cols), d};
      return false;
    }
    return true;
  });
  return found;
}

// Backtracking search for a +-1 signing of `rows` whose signed column sums
// all lie in {-1, 0, 1}. The first row's sign is fixed to +1.
class SigningSearch {
 public:
  SigningSearch(const IntMatrix& m, const std::vector<std::size_t>& rows)
      : m_(m), rows_(rows), sums_(m.cols(), 0), remaining_(m.cols(), 0) {
    for (std::size_t r : rows_)
      for (std::size_t j = 0; j < m_.cols(); ++j) remaining_[j] += std::abs(m_(r, j));
  }

  bool run() { return assign(0); }

 private:
  bool assign(std::size_t t) {
    if (t == rows_.size()) return true;
    const std::size_t r = rows_[t];
    for (Int sign : {Int{1}, Int{-1}}) {
      if (t == 0 && sign < 0) break;
      bool ok = true;
      for (std::size_t j = 0; j < m_.cols(); ++j) {
        sums_[j] += sign * m_(r, j);
        remaining_[j] -= std::abs(m_(r, j));
        if (std::abs(sums_[j]) - remaining_[j] > 1) ok = false;
      }
      if (ok && assign(t + 1)) return true;
      for (std::size_t j = 0; j < m_.cols(); ++j) {
        sums_[j] -= sign * m_(r, j);
        remaining_[j] += std::abs(m_(r, j));
      }
    }
    return false;
  }

  const IntMatrix& m_;
  const std::vector<std::size_t>& rows_;
  std::vector<Int> sums_;
  std::vector<Int> remaining_;
};

}  // namespace

TuVerdict is_totally_unimodular(const IntMatrix& m, TuMethod method, const TuBudget& budget) {
  if (method == TuMethod::ghouila_houri) return ghouila_houri_check(m, budget);
  if (auto w = first_ternary_violation(m)) return TuVerdict{false, TuMethod::minor_enumeration, w};
  if (m.rows() + m.cols() > budget.max_enumeration_size) {
    throw BudgetExceeded("minor enumeration limited to rows+cols <= " +
                         std::to_string(budget.max_enumeration_size) + " (got " +
                         std::to_string(m.rows() + m.cols()) + "); use ghouila-houri");
  }
  TuVerdict verdict;
  verdict.method = TuMethod::minor_enumeration;
  const std::size_t max_order = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= max_order && verdict.is_tu; ++k) {
    for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        Int d = sub_determinant(m, rows, cols);
        if (d > 1 || d < -1) {
          verdict.is_tu = false;
          verdict.witness = MinorWitness{IndexSet(rows), IndexSet(cols), d};
          return false;
        }
        return true;
      });
    });
  }
  return verdict;
}

TuVerdict ghouila_houri_check(const IntMatrix& m, const TuBudget& budget) {
  TuVerdict verdict;
  verdict.method = TuMethod::ghouila_houri;
  if (auto w = first_ternary_violation(m)) {
    verdict.is_tu = false;
    verdict.witness = w;
    return verdict;
  }
  if (m.rows() > budget.max_ghouila_houri_rows) {
    throw BudgetExceeded("ghouila-houri limited to " + std::to_string(budget.max_ghouila_houri_rows) +
                         " rows (got " + std::to_string(m.rows()) + ")");
  }
  for (std::size_t k = 2; k <= m.rows() && verdict.is_tu; ++k) {
    for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      if (SigningSearch(m, rows).run()) return true;
      verdict.is_tu = false;
      verdict.witness = witness_on_rows(m, rows);
      return false;
    });
  }
  return verdict;
}

TuVerdict certify_tu(const IntMatrix& m, const TuBudget& budget) {
  if (m.rows() + m.cols() <= budget.max_enumeration_size) {
    return is_totally_unimodular(m, TuMethod::minor_enumeration, budget);
  }
  if (m.rows() <= budget.max_ghouila_houri_rows) return ghouila_houri_check(m, budget);
  if (m.cols() <= budget.max_ghouila_houri_rows) {
    TuVerdict v = ghouila_houri_check(m.transpose(), budget);
    if (v.witness) std::swap(v.witness->rows, v.witness->cols);
    return v;
  }
  throw BudgetExceeded("matrix too large for both TU methods");
}

bool is_unimodular(const IntMatrix& m) {
  if (rank(m) != m.rows()) {
    throw PreconditionError("unimodularity requires full row rank");
  }
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return for_each_combination(m.cols(), m.rows(), [&](const std::vector<std::size_t>& cols) {
    Int d = sub_determinant(m, rows, cols);
    return d >= -1 && d <= 1;
  });
}

std::optional<Functional> polytopal_certificate(const IntMatrix& m) {
  IntVector ones(m.cols(), 1);
  return w_valued_certificate(m, ones);
}

std::optional<Functional> w_valued_certificate(const IntMatrix& m, std::span<const Int> w) {
  if (w.size() != m.cols()) throw UsageError("value vector length must equal column count");
  std::optional<Functional> f;
  if (std::all_of(w.begin(), w.end(), [](Int v) { return v == 0; })) {
    f = left_kernel_vector(m);
  } else {
    f = solve_left_integral(m, w);
  }
  if (f && left_multiply(*f, m) != IntVector(w.begin(), w.end())) {
    throw std::logic_error("certificate failed re-evaluation");
  }
  return f;
}

bool is_prepared(const IntMatrix& m, const TuBudget& budget) {
  if (!columns_distinct(m).distinct) return false;
  if (!certify_tu(m, budget).is_tu) return false;
  return polytopal_certificate(m).has_value();
}

}  // namespace tumax
