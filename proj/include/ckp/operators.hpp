#pragma once

#include <map>
#include <utility>

#include "ckp/fock.hpp"

namespace ckp {

/// Element of F_chi (x) F_chi with exact rational coefficients.
class TensorVector {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, Rational>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& a, const Monomial& b, const Rational& c);
  void add_product(const FockVector& u, const FockVector& w, const Rational& c);

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  bool operator==(const TensorVector&) const = default;

  /// Swap of the two tensor factors.
  TensorVector swapped() const;

 private:
  Terms terms_;
};

/// Untwisted Heisenberg mode h_n = (1/2) sum_{a+b=2n} :x_a x_b:.
FockVector heisenberg_mode(long n, const FockVector& v);

/// Twisted Heisenberg mode with half-odd index n,
/// h^t_n = (1/2) sum_{a+b=2n} (-1)^(b+1/2) :x_a x_b:.
FockVector twisted_heisenberg_mode(HalfIndex n, const FockVector& v);

/// Virasoro mode of the lambda family (mu = 0),
/// L^lambda_n = -sum_{k+l=n} (lambda(k+1) + (lambda+1)l) :x_{2k+1/2} x_{2l-1/2}:.
FockVector virasoro_mode(const Rational& lambda, long n, const FockVector& v);

/// Reindexed creation/annihilation wrappers: beta mode k acts as x_{-2k+1/2},
/// gamma mode k as x_{-2k-1/2}.
FockVector beta_mode(long k, const FockVector& v);
FockVector gamma_mode(long k, const FockVector& v);

/// S(u (x) w) = sum_m (-1)^(m-1/2) (x_m u) (x) (x_{-m} w); the Hirota
/// bilinear residue. The sum is finite, bounded by the degrees of u and w.
TensorVector hirota_residue(const FockVector& u, const FockVector& w);

}  // namespace ckp
