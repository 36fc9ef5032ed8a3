#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tumax/matrix.hpp"

namespace tumax {

// Integral row covector f; f(v) = f . v.
using Functional = IntVector;

enum class TuMethod { minor_enumeration, ghouila_houri };

std::string to_string(TuMethod m);
TuMethod parse_tu_method(std::string_view name);

struct MinorWitness {
  IndexSet rows;
  IndexSet cols;
  Int minor = 0;
};

struct TuVerdict {
  bool is_tu = true;
  TuMethod method = TuMethod::minor_enumeration;
  // Present when is_tu is false and a violating minor was located; |minor| >= 2.
  std::optional<MinorWitness> witness;
};

struct TuBudget {
  // Minor enumeration is allowed when rows + cols stays within this size.
  std::size_t max_enumeration_size = 16;
  // Ghouila-Houri enumerates 2^rows row subsets.
  std::size_t max_ghouila_houri_rows = 20;
};

// Checks every square minor in ascending order, lexicographic within an
// order, and stops at the first one outside {-1, 0, 1}.
TuVerdict is_totally_unimodular(const IntMatrix& m, TuMethod method = TuMethod::minor_enumeration,
                                const TuBudget& budget = {});

// Ghouila-Houri: every row subset has a +-1 signing whose signed column sums
// all lie in {-1, 0, 1}. When a subset fails, a violating minor on that subset
// is reported as the witness.
TuVerdict ghouila_houri_check(const IntMatrix& m, const TuBudget& budget = {});

// Picks minor enumeration when it fits the budget, Ghouila-Houri otherwise.
TuVerdict certify_tu(const IntMatrix& m, const TuBudget& budget = {});

// Full row rank required; true iff every maximal minor is in {-1, 0, 1}.
bool is_unimodular(const IntMatrix& m);

// Integral f with f^T M = (1, ..., 1), if any.
std::optional<Functional> polytopal_certificate(const IntMatrix& m);

// Integral nonzero f with f^T M = w^T, if any.
std::optional<Functional> w_valued_certificate(const IntMatrix& m, std::span<const Int> w);

// Polytopal, TU and with pairwise distinct columns.
bool is_prepared(const IntMatrix& m, const TuBudget& budget = {});

}  // namespace tumax
