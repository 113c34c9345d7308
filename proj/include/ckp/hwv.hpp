#pragma once

#include <vector>

#include "ckp/fock.hpp"
#include "ckp/linalg.hpp"

namespace ckp {

/// All monomials of a fixed degree, in deterministic (descending
/// lexicographic partition) order.
struct GradedBasis {
  long degree_doubled = 0;
  std::vector<Monomial> monomials;
};

/// Exact basis of the space of highest weight vectors of one degree,
/// together with the h_0 (charge) spectrum.
struct HwvReport {
  long degree_doubled = 0;
  long dimension = 0;
  std::vector<long> charges;  // with multiplicity, descending
  std::vector<FockVector> basis;
};

/// Partitions of d into half-odd parts with repetition, as monomials.
/// d is passed doubled and must be nonnegative.
GradedBasis graded_basis(long degree_doubled);

/// Kernel of the stacked map v -> (h_1 v, ..., h_N v), 2N <= degree, solved
/// exactly per charge block. Blocks are processed in descending charge order.
HwvReport hwv_basis(long degree_doubled);

/// Reports for all degrees 0, 1/2, ..., max_degree (doubled); independent
/// degrees solved in parallel with OpenMP when parallel is set. The result
/// is identical either way.
std::vector<HwvReport> hwv_all(long max_degree_doubled, bool parallel);

/// True iff h_n v = 0 for every n >= 1 with 2n <= max degree of v.
/// The zero vector is rejected.
bool is_hwv(const FockVector& v);

std::vector<long> hwv_charge_spectrum(long degree_doubled);

/// Coordinates of v in the given monomial basis; v's support must lie in it.
RatRow coordinates(const FockVector& v, const std::vector<Monomial>& basis);

}  // namespace ckp
