#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "tumax/certify.hpp"
#include "tumax/matrix.hpp"

namespace tumax {

enum class SumKind { one_sum, two_sum, three_sum, delta_sum };

std::string to_string(SumKind kind);
SumKind parse_sum_kind(std::string_view name);

// A: m1 x n1, B: m2 x n2.
//   two-sum:   u (m1), v (n2)
//   three-sum: us[l] (m1), vs[l] (n2), glue C (m1 x n2)
//   delta-sum: u (n1), u_prime (m1), v (n2), v_prime (m2), x = +-1
struct SumSpec {
  SumKind kind = SumKind::one_sum;
  IntMatrix a;
  IntMatrix b;
  IntVector u, u_prime, v, v_prime;
  std::array<IntVector, 3> us, vs;
  Int x = 1;
  IntMatrix c;
};

IntMatrix one_sum(const IntMatrix& a, const IntMatrix& b);
// (A u v^T; 0 B). Factors (A|u) and (v^T; B) must be TU.
IntMatrix two_sum(const IntMatrix& a, const IntVector& u, const IntVector& v, const IntMatrix& b);
// (A C; 0 B) after validating zero sums, sizes and the column/row shapes of C.
IntMatrix three_sum(const IntMatrix& a, const std::array<IntVector, 3>& us,
                    const std::array<IntVector, 3>& vs, const IntMatrix& b, const IntMatrix& c);
// (A u'v^T; v'u^T B).
IntMatrix delta_sum(const IntMatrix& a, const IntVector& u, const IntVector& u_prime, const IntVector& v,
                    const IntVector& v_prime, const IntMatrix& b, Int x);

// The TU factor matrices named by the definition of each sum, in order.
std::vector<IntMatrix> sum_factors(const SumSpec& spec);

enum class GlueShape { zero, two_sum_shaped, general };
std::string to_string(GlueShape shape);
// zero: C = 0; two_sum_shaped: all nonzero rows are +-w^T for one w.
GlueShape classify_glue(const IntMatrix& c);

struct Composition {
  IntMatrix matrix;
  std::vector<IntMatrix> factors;
  GlueShape glue = GlueShape::zero;  // three-sum only
};

// Validates the spec (factor TU checks included) and builds the sum.
Composition compose(const SumSpec& spec);

struct FactorCertificate {
  std::string name;
  IntMatrix factor;
  Functional functional;
  IntVector w;
  bool valued = false;             // functional * factor == w
  bool nonzero = false;
  bool coordinates_agree = false;  // agreement with f required by the lemma
  bool distinct_columns = false;
  bool inheritance_ok = false;     // composed distinct columns => factor distinct

  bool ok() const { return valued && nonzero && coordinates_agree && inheritance_ok; }
};

// Transports a certificate f (f * M == w, f != 0) for the composed matrix M to
// the factors, following the constructions in the lemma on w-valued sums.
std::vector<FactorCertificate> transport_functional(const SumSpec& spec, const Functional& f,
                                                    const IntVector& w);

// Random valid spec built from network matrices (and their transposes) of the
// given sizes. With polytopal set, factors are chosen so that the composed
// matrix is 1-valued by the all-ones functional whenever the factors are.
struct RandomSumOptions {
  std::size_t max_tree_arcs = 5;
  std::size_t max_arcs = 5;
  bool polytopal = false;
};
SumSpec random_sum_spec(SumKind kind, std::mt19937_64& rng, const RandomSumOptions& options = {});

}  // namespace tumax
