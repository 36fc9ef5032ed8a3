#pragma once

#include <optional>
#include <vector>

#include "tumax/matrix.hpp"

namespace tumax {

// U * A = H with U unimodular and H in row Hermite normal form: the first
// `rank` rows are nonzero, pivots strictly move right, pivots are positive
// and entries above a pivot are reduced into [0, pivot).
struct HermiteForm {
  IntMatrix transform;  // U, square with A.rows() rows
  IntMatrix echelon;    // H
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

HermiteForm hermite_row_form(const IntMatrix& a);

// Solves f^T M = w^T over the rationals by Gauss-Jordan elimination.
// Returns the solution with every free coordinate set to zero, or nothing when
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_left_rational(const IntMatrix& m,
                                                         std::span<const Int> w);

// Integral solution of f^T M = w^T. Tries the rational particular solution
// first and falls back to a Hermite lattice solve when that one is
// fractional. Returns nothing when no integral solution exists.
std::optional<IntVector> solve_left_integral(const IntMatrix& m, std::span<const Int> w);

// Nonzero integral f with f^T M = 0, if the left kernel is nontrivial.
std::optional<IntVector> left_kernel_vector(const IntMatrix& m);

// Inverse of a square matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& r);

// Coordinates of the columns of `points` with respect to the lattice
// aff(points) ∩ Z^d: one row per affine dimension, related to the input by an
// affine lattice isomorphism (first point maps to the origin).
IntMatrix affine_lattice_coordinates(const IntMatrix& points);

// Affine dimension of the column set (-1 for an empty set).
int affine_dimension(const IntMatrix& points);

}  // namespace tumax
