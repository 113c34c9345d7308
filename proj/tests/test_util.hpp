#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "ckp/fock.hpp"
#include "ckp/hwv.hpp"

namespace ckp::testutil {

// Monomial from (doubled index, multiplicity) pairs in any order of magnitude
inline Monomial mono(std::initializer_list<std::pair<int, int>> parts) {
  std::vector<Monomial::Part> p(parts.begin(), parts.end());
  std::sort(p.begin(), p.end());
  return Monomial(std::move(p));
}

inline FockVector unit(std::initializer_list<std::pair<int, int>> parts) {
  return FockVector(mono(parts), 1);
}

inline FockVector vac() { return FockVector::vacuum(); }

// All basis monomials with degree (doubled) at most max_d2, as unit vectors.
inline std::vector<FockVector> basis_up_to(long max_d2) {
  std::vector<FockVector> out;
  for (long d = 0; d <= max_d2; ++d)
    for (const auto& m : graded_basis(d).monomials) out.emplace_back(m, 1);
  return out;
}

}  // namespace ckp::testutil
