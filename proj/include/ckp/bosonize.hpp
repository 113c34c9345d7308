#pragma once

#include <map>

#include "ckp/fock.hpp"
#include "ckp/operators.hpp"

namespace ckp {

struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussianRational&) const = default;
};

/// Lattice-charge-tagged monomial in the two variable families x, y:
/// e^{lattice*alpha} * prod x_n^{xparts[n]} * prod y_n^{yparts[n]}.
struct PolyMonomial {
  int lattice = 0;
  std::map<int, int> xparts;
  std::map<int, int> yparts;

  /// Truncation weight: each x_n or y_n counts n.
  long weight() const;
  auto operator<=>(const PolyMonomial&) const = default;
};

/// Finite Gaussian-rational combination of PolyMonomials.
class PolyState {
 public:
  using Terms = std::map<PolyMonomial, GaussianRational>;

  PolyState() = default;
  static PolyState one();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PolyMonomial& m, const GaussianRational& c);

  PolyState& operator+=(const PolyState& o);
  PolyState& operator-=(const PolyState& o);
  PolyState& operator*=(const GaussianRational& c);
  friend PolyState operator+(PolyState a, const PolyState& b) { return a += b; }
  friend PolyState operator-(PolyState a, const PolyState& b) { return a -= b; }
  bool operator==(const PolyState&) const = default;

  long max_weight() const;

 private:
  Terms terms_;
};

class TensorPolyState {
 public:
  using Key = std::pair<PolyMonomial, PolyMonomial>;
  using Terms = std::map<Key, GaussianRational>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PolyMonomial& a, const PolyMonomial& b, const GaussianRational& c);
  void add_product(const PolyState& s, const PolyState& t, const GaussianRational& c);
  TensorPolyState& operator-=(const TensorPolyState& o);
  TensorPolyState swapped() const;
  bool operator==(const TensorPolyState&) const = default;

 private:
  Terms terms_;
};

/// Heisenberg action on the y family: n > 0 differentiates, n < 0 multiplies
/// by |n| y_|n|, n = 0 multiplies by the lattice charge.
PolyState hy_mode(long n, const PolyState& s);

/// Bosonized beta/gamma modes: exact coefficient extraction from the
/// exponential boson operators, beta mode k at z^{k-1}, gamma mode k at z^k.
PolyState beta_bos_mode(long k, const PolyState& s);
PolyState gamma_bos_mode(long k, const PolyState& s);

/// Dispatch through the mode dictionary: x_{-2k-1/2} -> gamma mode k,
/// x_{-2k+1/2} -> beta mode k.
PolyState chi_bos_mode(HalfIndex a, const PolyState& s);

/// |0> -> 1, extended by applying the bosonized creation modes.
PolyState intertwiner(const FockVector& v);
TensorPolyState intertwiner(const TensorVector& t);

/// Res_z (beta(z) (x) gamma(z) - gamma(z) (x) beta(z)) on s (x) t.
TensorPolyState hirota_residue_bos(const PolyState& s, const PolyState& t);

}  // namespace ckp
