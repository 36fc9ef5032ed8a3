#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tumax/checked.hpp"

namespace tumax {

using IntVector = std::vector<Int>;

// Strictly increasing list of row or column indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices)
      : IndexSet(std::vector<std::size_t>(indices)) {}

  // {0, 1, ..., n-1}
  static IndexSet range(std::size_t n);

  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  std::size_t operator[](std::size_t i) const { return idx_[i]; }
  auto begin() const noexcept { return idx_.begin(); }
  auto end() const noexcept { return idx_.end(); }
  const std::vector<std::size_t>& indices() const noexcept { return idx_; }

  // Throws UsageError unless every index is < bound.
  void check_bound(std::size_t bound, const char* what) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> idx_;
};

// Dense row-major matrix of 64-bit integers. Values are immutable once
// constructed; every operation returns a new matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);  // zero matrix
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);
  static IntMatrix from_rows(std::size_t cols, std::span<const IntVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int at(std::size_t r, std::size_t c) const;
  std::span<const Int> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<Int>& entries() const noexcept { return data_; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  IntMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  IntMatrix select_rows(std::span<const std::size_t> rows) const;
  IntMatrix negated() const;
  IntMatrix with_column(std::span<const Int> column) const;
  IntMatrix with_row(std::span<const Int> row) const;

  // True iff every entry lies in {-1, 0, 1}.
  bool is_ternary() const noexcept;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// (A | B); row counts must match.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
// (A ; B); column counts must match.
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, std::span<const Int> x);
// Row vector times matrix: f^T M.
IntVector left_multiply(std::span<const Int> f, const IntMatrix& m);
Int dot(std::span<const Int> a, std::span<const Int> b);

// Exact determinant by fraction-free (Bareiss) elimination. Pivot is the
// leftmost nonzero entry at or below the diagonal; row swaps flip the sign.
Int determinant(const IntMatrix& m);

// Determinant of the submatrix selected by rows and cols.
Int minor(const IntMatrix& m, const IndexSet& rows, const IndexSet& cols);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

struct DuplicateColumns {
  bool distinct = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_pair;
};

// First duplicate pair in lexicographic (i, j) order, i < j.
DuplicateColumns columns_distinct(const IntMatrix& m);

// Text format: "rows cols" header, then one line of integers per row.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);

}  // namespace tumax
