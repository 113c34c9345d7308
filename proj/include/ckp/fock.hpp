#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ckp {

using Rational = mpq_class;

/// Mode index n of the generating field, n in Z+1/2, stored as 2n.
/// Negative doubled value = creation mode, positive = annihilation mode.
struct HalfIndex {
  int doubled = 0;

  HalfIndex() = default;
  explicit HalfIndex(int d) : doubled(d) {
    if (d % 2 == 0) throw std::invalid_argument("HalfIndex: doubled value must be odd");
  }

  bool creation() const { return doubled < 0; }
  auto operator<=>(const HalfIndex&) const = default;
};

/// Basis element of the Fock space: a product of creation modes applied to
/// the vacuum. Parts are (doubled index, multiplicity), doubled index < 0 and
/// odd, sorted ascending (most negative index first, i.e. largest |index|).
/// The empty monomial is the vacuum.
class Monomial {
 public:
  using Part = std::pair<int, int>;  // (doubled creation index, multiplicity)

  Monomial() = default;
  explicit Monomial(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  bool is_vacuum() const { return parts_.empty(); }

  /// h_0 eigenvalue: index with doubled = 1 mod 4 contributes +mult, 3 mod 4 -mult.
  long charge() const;
  /// Sum of |index| * multiplicity, returned doubled.
  long degree_doubled() const;

  /// Multiplicity of the creation index with the given doubled value (0 if absent).
  int multiplicity(int doubled_index) const;
  /// Copy with the multiplicity of the given index incremented by one.
  Monomial with_added(int doubled_index) const;
  /// Copy with the multiplicity decremented by one; index must be present.
  Monomial with_removed(int doubled_index) const;

  auto operator<=>(const Monomial&) const = default;

  std::string str() const;  // human-readable, e.g. "x(-3/2)^2 x(-1/2)"

 private:
  std::vector<Part> parts_;
};

/// Finite linear combination of monomials with exact rational coefficients.
/// Zero coefficients are never stored.
class FockVector {
 public:
  using Terms = std::map<Monomial, Rational>;

  FockVector() = default;
  FockVector(Monomial m, Rational c);
  static FockVector vacuum();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rational& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& c, FockVector v) { return v *= c; }
  bool operator==(const FockVector&) const = default;

  /// Max degree over the support, doubled; 0 for the zero vector.
  long max_degree_doubled() const;
  /// True when every monomial has the same degree (vacuously true for 0).
  bool homogeneous() const;

  std::string str() const;

 private:
  Terms terms_;
};

long charge(const Monomial& m);
long degree_doubled(const Monomial& m);

/// Action of the mode x_a on v: creation prepends the index, annihilation
/// contracts against the opposite creation index with sign (-1)^(a-1/2).
FockVector apply_mode(HalfIndex a, const FockVector& v);

/// :x_a x_b: v -- annihilation modes act first (the order only matters when a = -b).
FockVector normal_ordered_pair(HalfIndex a, HalfIndex b, const FockVector& v);

}  // namespace ckp
