#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ckp {

/// Truncated formal series in q^(1/2) with integer coefficients. Exponents
/// are stored doubled, so every key is an integer in [0, order2].
class QSeries {
 public:
  explicit QSeries(long order2) : order2_(order2) {}
  static QSeries one(long order2);

  long order2() const { return order2_; }
  long long coeff(long exp2) const;
  void set(long exp2, long long c);
  void add(long exp2, long long c);

  QSeries operator*(const QSeries& o) const;
  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  /// Multiplicative inverse; the constant term must be 1.
  QSeries inverse() const;
  bool operator==(const QSeries&) const = default;

  const std::map<long, long long>& coeffs() const { return c_; }

 private:
  long order2_;
  std::map<long, long long> c_;
};

/// Series in q^(1/2) whose coefficients are Laurent polynomials in z.
/// Truncation happens only in q; the z support is finite per q power.
class BivariateSeries {
 public:
  explicit BivariateSeries(long order2) : order2_(order2) {}
  static BivariateSeries one(long order2);

  long order2() const { return order2_; }
  long long coeff(long exp2, long zexp) const;
  void add(long exp2, long zexp, long long c);

  BivariateSeries operator*(const BivariateSeries& o) const;
  bool operator==(const BivariateSeries&) const = default;

  /// Multiply by the geometric series (1 - z^zstep q^qexp2)^(-1).
  BivariateSeries times_geometric(long qexp2, long zstep) const;

  QSeries at_z_one() const;

  const std::map<long, std::map<long, long long>>& coeffs() const { return c_; }

 private:
  void prune();
  long order2_;
  std::map<long, std::map<long, long long>> c_;
};

/// A triangular number T_m plus a strictly decreasing sequence of positive
/// half-odd parts (stored doubled).
struct PtdoPartition {
  int m = 0;                 // triangular part is T_m = m(m+1)/2
  std::vector<int> parts2;   // strictly decreasing positive odd values
  long weight_doubled() const;
};

QSeries fock_character(long order2);
BivariateSeries fock_character_bivariate(long order2);

/// Brute-force oracle: sums q^deg z^chg over all basis monomials.
QSeries enumerated_character(long order2);
BivariateSeries enumerated_character_bivariate(long order2);

QSeries hwv_character(long order2);

/// 1 + q + q^3 + q^6 + ... (integer exponents, stored doubled).
QSeries triangular_series(long order2);
/// Sum over triangular numbers vs prod(1-q^{2i})/prod(1-q^{2i-1}); order is
/// the integer q cutoff.
bool triangular_identity_check(long order);

/// prod (1-q^i)(1+z q^{i-1})(1+z^{-1} q^i) = sum_m z^m q^{m(m-1)/2}; order is
/// the integer q cutoff.
bool jacobi_triple_check(long order);
BivariateSeries jacobi_product(long order);
BivariateSeries jacobi_theta_sum(long order);

std::vector<PtdoPartition> enumerate_ptdo(long weight_doubled);

}  // namespace ckp
