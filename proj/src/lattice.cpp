#include "tumax/lattice.hpp"

#include <algorithm>
#include <utility>

namespace tumax {

namespace {

using Rows = std::vector<std::vector<Int>>;

Rows to_rows(const IntMatrix& a) {
  Rows out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = a.row(i);
  return out;
}

IntMatrix from_rows(const Rows& rows, std::size_t cols) {
  std::vector<Int> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) data.insert(data.end(), r.begin(), r.end());
  return IntMatrix(rows.size(), cols, std::move(data));
}

// row_i -= q * row_k
void axpy_row(std::vector<Int>& dst, const std::vector<Int>& src, Int q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < dst.size(); ++j) {
    dst[j] = checked_sub(dst[j], checked_mul(q, src[j]));
  }
}

void negate_row(std::vector<Int>& row) {
  for (auto& v : row) v = checked_neg(v);
}

}  // namespace

HermiteForm hermite_row_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Rows h = to_rows(a);
  Rows u = to_rows(IntMatrix::identity(m));
  HermiteForm out;

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      // Smallest nonzero magnitude at or below r becomes the pivot candidate.
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h[i][c] == 0) continue;
        if (best == m || abs_checked(h[i][c]) < abs_checked(h[best][c])) best = i;
      }
      if (best == m) break;
      std::swap(h[best], h[r]);
      std::swap(u[best], u[r]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h[i][c] == 0) continue;
        Int q = floor_div(h[i][c], h[r][c]);
        axpy_row(h[i], h[r], q);
        axpy_row(u[i], u[r], q);
        if (h[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      negate_row(h[r]);
      negate_row(u[r]);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h[i][c], h[r][c]);
      axpy_row(h[i], h[r], q);
      axpy_row(u[i], u[r], q);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  out.echelon = from_rows(h, n);
  out.transform = from_rows(u, m);
  return out;
}

std::optional<std::vector<Rational>> solve_left_rational(const IntMatrix& m,
                                                         std::span<const Int> w) {
  if (w.size() != m.cols()) throw UsageError("value vector length must equal column count");
  const std::size_t unknowns = m.rows();
  const std::size_t eqs = m.cols();
  // Row j of the augmented system is column j of M followed by w_j.
  std::vector<std::vector<Rational>> a(eqs, std::vector<Rational>(unknowns + 1));
  for (std::size_t j = 0; j < eqs; ++j) {
    for (std::size_t i = 0; i < unknowns; ++i) a[j][i] = Rational(m(i, j));
    a[j][unknowns] = Rational(w[j]);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < eqs; ++c) {
    std::size_t p = r;
    while (p < eqs && a[p][c].is_zero()) ++p;
    if (p == eqs) continue;
    std::swap(a[p], a[r]);
    Rational piv = a[r][c];
    for (auto& v : a[r]) v /= piv;
    for (std::size_t i = 0; i < eqs; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational factor = a[i][c];
      for (std::size_t k = c; k <= unknowns; ++k) a[i][k] -= factor * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < eqs; ++i) {
    if (!a[i][unknowns].is_zero()) return std::nullopt;
  }
  std::vector<Rational> f(unknowns, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) f[pivots[k]] = a[k][unknowns];
  return f;
}

std::optional<IntVector> solve_left_integral(const IntMatrix& m, std::span<const Int> w) {
  auto rational = solve_left_rational(m, w);
  if (!rational) return std::nullopt;
  if (std::all_of(rational->begin(), rational->end(), [](const Rational& q) { return q.is_integer(); })) {
    IntVector f(rational->size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = (*rational)[i].num();
    return f;
  }

  // f^T = g^T U and g^T H = w^T, solved pivot by pivot.
  HermiteForm hf = hermite_row_form(m);
  const IntMatrix& h = hf.echelon;
  IntVector residual(w.begin(), w.end());
  IntVector g(m.rows(), 0);
  for (std::size_t k = 0; k < hf.rank; ++k) {
    std::size_t p = hf.pivot_columns[k];
    Int piv = h(k, p);
    if (residual[p] % piv != 0) return std::nullopt;
    g[k] = residual[p] / piv;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      residual[j] = checked_sub(residual[j], checked_mul(g[k], h(k, j)));
    }
  }
  if (std::any_of(residual.begin(), residual.end(), [](Int v) { return v != 0; })) {
    return std::nullopt;
  }
  return left_multiply(g, hf.transform);
}

std::optional<IntVector> left_kernel_vector(const IntMatrix& m) {
  if (m.rows() == 0) return std::nullopt;
  HermiteForm hf = hermite_row_form(m);
  if (hf.rank == m.rows()) return std::nullopt;
  return hf.transform.row(hf.rank);
}

IntMatrix unimodular_inverse(const IntMatrix& r) {
  if (!r.is_square()) throw UsageError("inverse of non-square matrix");
  HermiteForm hf = hermite_row_form(r);
  if (hf.echelon != IntMatrix::identity(r.rows())) {
    throw PreconditionError("matrix is not unimodular (determinant is not +-1)");
  }
  return hf.transform;
}

IntMatrix affine_lattice_coordinates(const IntMatrix& points) {
  if (points.cols() == 0) return IntMatrix(0, 0);
  std::vector<Int> diffs(points.rows() * points.cols());
  for (std::size_t i = 0; i < points.rows(); ++i)
    for (std::size_t j = 0; j < points.cols(); ++j)
      diffs[i * points.cols() + j] = checked_sub(points(i, j), points(i, 0));
  HermiteForm hf = hermite_row_form(IntMatrix(points.rows(), points.cols(), std::move(diffs)));
  std::vector<std::size_t> keep(hf.rank);
  for (std::size_t i = 0; i < hf.rank; ++i) keep[i] = i;
  return hf.echelon.select_rows(keep);
}

int affine_dimension(const IntMatrix& points) {
  if (points.cols() == 0) return -1;
  std::vector<Int> diffs(points.rows() * points.cols());
  for (std::size_t i = 0; i < points.rows(); ++i)
    for (std::size_t j = 0; j < points.cols(); ++j)
      diffs[i * points.cols() + j] = checked_sub(points(i, j), points(i, 0));
  return static_cast<int>(rank(IntMatrix(points.rows(), points.cols(), std::move(diffs))));
}

}  // namespace tumax
