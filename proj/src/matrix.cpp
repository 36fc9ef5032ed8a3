#include "tumax/matrix.hpp"

#include "text_reader.hpp"

#include <algorithm>
#include <sstream>

namespace tumax {

IndexSet::IndexSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
  for (std::size_t i = 1; i < idx_.size(); ++i) {
    if (idx_[i] <= idx_[i - 1]) throw UsageError("index set must be strictly increasing");
  }
}

IndexSet IndexSet::range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  IndexSet s;
  s.idx_ = std::move(v);
  return s;
}

void IndexSet::check_bound(std::size_t bound, const char* what) const {
  if (!idx_.empty() && idx_.back() >= bound) {
    throw UsageError(std::string(what) + " index " + std::to_string(idx_.back()) +
                     " out of range " + std::to_string(bound));
  }
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw UsageError("matrix entry count " + std::to_string(data_.size()) + " != " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw UsageError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.data_[i * m.cols_ + j] = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, std::span<const IntVector> rows) {
  std::vector<Int> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw UsageError("row length mismatch");
    data.insert(data.end(), r.begin(), r.end());
  }
  return IntMatrix(rows.size(), cols, std::move(data));
}

Int IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw UsageError("matrix index out of range");
  return (*this)(r, c);
}

IntVector IntMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return {s.begin(), s.end()};
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  rows.check_bound(rows_, "row");
  cols.check_bound(cols_, "column");
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      s.data_[i * s.cols_ + j] = (*this)(rows[i], cols[j]);
  return s;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix s(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw UsageError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) s.data_[i * s.cols_ + j] = (*this)(i, cols[j]);
  }
  return s;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> rows) const {
  IntMatrix s(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw UsageError("row index out of range");
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[i] * cols_), cols_,
                s.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
  return s;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix n(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) n.data_[k] = checked_neg(data_[k]);
  return n;
}

IntMatrix IntMatrix::with_column(std::span<const Int> column) const {
  if (column.size() != rows_) throw UsageError("appended column has wrong length");
  IntMatrix m(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.data_[i * m.cols_ + j] = (*this)(i, j);
    m.data_[i * m.cols_ + cols_] = column[i];
  }
  return m;
}

IntMatrix IntMatrix::with_row(std::span<const Int> row) const {
  if (row.size() != cols_) throw UsageError("appended row has wrong length");
  std::vector<Int> data = data_;
  data.insert(data.end(), row.begin(), row.end());
  return IntMatrix(rows_ + 1, cols_, std::move(data));
}

bool IntMatrix::is_ternary() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Int v) { return v >= -1 && v <= 1; });
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw UsageError("hconcat: row counts differ");
  std::vector<Int> data;
  data.reserve(a.rows() * (a.cols() + b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ra = a.row_span(i);
    auto rb = b.row_span(i);
    data.insert(data.end(), ra.begin(), ra.end());
    data.insert(data.end(), rb.begin(), rb.end());
  }
  return IntMatrix(a.rows(), a.cols() + b.cols(), std::move(data));
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw UsageError("vconcat: column counts differ");
  std::vector<Int> data = a.entries();
  data.insert(data.end(), b.entries().begin(), b.entries().end());
  return IntMatrix(a.rows() + b.rows(), a.cols(), std::move(data));
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("multiply: inner dimensions differ");
  std::vector<Int> data(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Wide acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += static_cast<Wide>(a(i, k)) * b(k, j);
      data[i * b.cols() + j] = narrow(acc);
    }
  return IntMatrix(a.rows(), b.cols(), std::move(data));
}

IntVector multiply(const IntMatrix& a, std::span<const Int> x) {
  if (a.cols() != x.size()) throw UsageError("multiply: vector length mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row_span(i), x);
  return out;
}

IntVector left_multiply(std::span<const Int> f, const IntMatrix& m) {
  if (f.size() != m.rows()) throw UsageError("functional length does not match row count");
  IntVector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Wide acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += static_cast<Wide>(f[i]) * m(i, j);
    out[j] = narrow(acc);
  }
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw UsageError("dot: length mismatch");
  Wide acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<Wide>(a[i]) * b[i];
  return narrow(acc);
}

namespace {

// In-place Bareiss elimination over a row-major buffer; returns rank and
// accumulates the sign of row swaps. When square and full rank, the last
// pivot equals the determinant (up to sign).
struct BareissResult {
  std::size_t rank = 0;
  int sign = 1;
  Int last_pivot = 1;
};

BareissResult bareiss(std::vector<Int>& a, std::size_t rows, std::size_t cols) {
  BareissResult res;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[p * cols + k], a[r * cols + k]);
      res.sign = -res.sign;
    }
    const Int piv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int lead = a[i * cols + c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        Wide v = static_cast<Wide>(piv) * a[i * cols + k] -
                 static_cast<Wide>(lead) * a[r * cols + k];
        a[i * cols + k] = narrow(v / prev);
      }
      a[i * cols + c] = 0;
    }
    prev = piv;
    res.last_pivot = piv;
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<Int> a = m.entries();
  auto res = bareiss(a, n, n);
  if (res.rank < n) return 0;
  return res.sign < 0 ? checked_neg(res.last_pivot) : res.last_pivot;
}

Int minor(const IntMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw UsageError("minor: row and column selections differ in size");
  return determinant(m.submatrix(rows, cols));
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  std::vector<Int> a = m.entries();
  return bareiss(a, m.rows(), m.cols()).rank;
}

DuplicateColumns columns_distinct(const IntMatrix& m) {
  DuplicateColumns out;
  std::vector<IntVector> cols = m.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      if (cols[i] == cols[j]) {
        out.distinct = false;
        out.first_pair = {i, j};
        return out;
      }
    }
  }
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  detail::TextReader in(text);
  in.skip_blank_lines();
  Int r = in.read_int("row count");
  Int c = in.read_int("column count");
  if (r < 0 || c < 0) throw ParseError("negative dimension", in.line(), 1);
  in.end_line("header");
  std::vector<Int> data;
  data.reserve(static_cast<std::size_t>(r * c));
  for (Int i = 0; i < r; ++i) {
    for (Int j = 0; j < c; ++j) data.push_back(in.read_int("matrix entry"));
    in.end_line("matrix row");
  }
  in.expect_end("matrix");
  return IntMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c), std::move(data));
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tumax
