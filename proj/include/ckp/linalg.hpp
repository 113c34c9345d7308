#pragma once

#include <vector>

#include "ckp/fock.hpp"

namespace ckp {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;  // row-major, dense

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row. Deterministic: first nonzero entry in column order pivots.
std::vector<int> rref(RatMatrix& m);

long rank(RatMatrix m);

/// Basis of the right kernel {x : m x = 0}, deterministic (free variables in
/// column order, each basis vector has a unit at its free column).
std::vector<RatRow> exact_kernel(RatMatrix m, int ncols);

/// True when v is a linear combination of the spanning rows.
bool in_span(const std::vector<RatRow>& span, const RatRow& v);

}  // namespace ckp
