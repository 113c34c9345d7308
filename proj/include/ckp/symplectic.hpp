#pragma once

#include <map>

#include "ckp/fock.hpp"

namespace ckp {

/// Coefficients of a Laurent expansion in z (even exponents, the fields are
/// functions of z^2). Below min_exponent every coefficient vanishes
/// identically, so any requested coefficient is exact.
struct LaurentFamily {
  std::map<long, FockVector> coeffs;  // z exponent -> coefficient
  long min_exponent = 0;

  FockVector coeff(long zexp) const {
    auto it = coeffs.find(zexp);
    return it == coeffs.end() ? FockVector{} : it->second;
  }
};

enum class ExpDirection { annihilation, creation };

/// Applies one of the four exponentials exp(-+ sum (1/n) h_{+-n} z^{-+2n}) to v
/// and reports the coefficients with z exponent inside [window_lo, window_hi].
/// Annihilation direction terminates exactly; creation is exact per exponent.
LaurentFamily exp_heisenberg_apply(ExpDirection direction, bool inverted, const FockVector& v,
                                   long window_lo, long window_hi);

/// Mode H^beta_(n) of V+(z)^-1 beta(z^2) z^(-2 h_0) V-(z)^-1, the coefficient
/// of z^(-2n-2). Maps highest weight vectors to highest weight vectors.
FockVector hbeta_mode(long n, const FockVector& v);

/// Mode H^gamma_(n) of V+(z) gamma(z^2) z^(2 h_0) V-(z).
FockVector hgamma_mode(long n, const FockVector& v);

/// Largest n with H^beta_(n) v possibly nonzero (from degree and charge
/// bookkeeping); every larger mode annihilates v.
long hbeta_vanishing_bound(const FockVector& v);
long hgamma_vanishing_bound(const FockVector& v);

/// L^hwv_n = sum_{k+l=n} :H^gamma_(k) H^beta_(l):, fermionic normal ordering
/// (index >= 0 moved right with a sign). Defined on the highest-weight
/// subspace only; other inputs are rejected.
FockVector hwv_virasoro_mode(long n, const FockVector& v);

}  // namespace ckp
