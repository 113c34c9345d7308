#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ckp/qseries.hpp"

using namespace ckp;

TEST_CASE("QSeries arithmetic basics") {
  QSeries a(10);
  a.set(0, 1);
  a.set(2, -1);  // 1 - q
  QSeries inv = a.inverse();
  for (long e = 0; e <= 10; e += 2) CHECK(inv.coeff(e) == 1);  // geometric series
  CHECK((a * inv) == QSeries::one(10));
  QSeries z(10);
  CHECK((a + z) == a);
  CHECK((a - a) == z);
}

TEST_CASE("full character has the expected small coefficients") {
  QSeries ch = fock_character(20);
  CHECK(ch.coeff(0) == 1);
  CHECK(ch.coeff(1) == 1);   // q^{1/2}
  CHECK(ch.coeff(3) == 2);   // q^{3/2}: two partitions into half-odd parts
  CHECK(ch.coeff(9) == 8);   // q^{9/2}
}

TEST_CASE("character matches brute-force enumeration") {
  CHECK(fock_character(20) == enumerated_character(20));
  CHECK(fock_character_bivariate(16) == enumerated_character_bivariate(16));
}

TEST_CASE("bivariate character small coefficients") {
  BivariateSeries ch = fock_character_bivariate(12);
  CHECK(ch.coeff(0, 0) == 1);
  CHECK(ch.coeff(1, 1) == 1);   // q^{1/2} z
  CHECK(ch.coeff(3, 3) == 1);   // q^{3/2} z^3
  CHECK(ch.coeff(3, -1) == 1);  // q^{3/2} z^{-1}
  CHECK(ch.coeff(3, 1) == 0);
  CHECK(ch.at_z_one() == fock_character(12));
}

TEST_CASE("highest weight character") {
  QSeries hw = hwv_character(20);
  const long expected[] = {1, 1, 1, 2, 1, 2, 3, 3, 3, 4};
  for (long d = 0; d <= 9; ++d) CHECK(hw.coeff(d) == expected[d]);
  CHECK(hw.coeff(13) == 7);
}

TEST_CASE("highest weight character times even Euler factor recovers the full character") {
  long order2 = 16;
  QSeries even = QSeries::one(order2);
  for (long i = 1; 4 * i <= order2; ++i) {
    QSeries f(order2);
    f.set(0, 1);
    f.set(4 * i, -1);  // 1 - q^{2i}
    even = even * f;
  }
  CHECK(hwv_character(order2) * even.inverse() == fock_character(order2));
}

TEST_CASE("triangular numbers and identity") {
  QSeries t = triangular_series(22);
  for (long e : {0L, 2L, 6L, 12L, 20L}) CHECK(t.coeff(e) == 1);
  CHECK(t.coeff(4) == 0);
  CHECK(triangular_identity_check(30));
}

TEST_CASE("Jacobi triple product") {
  CHECK(jacobi_triple_check(25));
  BivariateSeries theta = jacobi_theta_sum(0);
  // at order 0 only m = 0 and m = 1 contribute q^0
  CHECK(theta.coeff(0, 0) == 1);
  CHECK(theta.coeff(0, 1) == 1);
  // z = 1 specialization: theta sum collapses to 2 * sum_{m>=0} q^{T_m}
  QSeries sum = jacobi_theta_sum(15).at_z_one();
  QSeries tri = triangular_series(30);
  QSeries twice_tri(30);
  for (const auto& [e, c] : tri.coeffs()) twice_tri.add(e, 2 * c);
  CHECK(sum == twice_tri);
}

TEST_CASE("triangular-plus-distinct-odd partitions") {
  const long expected[] = {1, 1, 1, 2, 1, 2, 3, 3, 3, 4};
  for (long d = 0; d <= 9; ++d) CHECK(enumerate_ptdo(d).size() == (size_t)expected[d]);
  CHECK(enumerate_ptdo(13).size() == 7);
  auto empty = enumerate_ptdo(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].m == 0);
  CHECK(empty[0].parts2.empty());
}

TEST_CASE("ptdo enumeration is sound") {
  for (long d = 0; d <= 13; ++d) {
    for (const auto& p : enumerate_ptdo(d)) {
      CHECK(p.weight_doubled() == d);
      CHECK(p.m >= 0);
      for (size_t i = 0; i < p.parts2.size(); ++i) {
        CHECK(p.parts2[i] > 0);
        CHECK(p.parts2[i] % 2 == 1);
        if (i > 0) CHECK(p.parts2[i - 1] > p.parts2[i]);
      }
    }
    // counts reproduce the highest weight character coefficient
    CHECK((long long)enumerate_ptdo(d).size() == hwv_character(13).coeff(d));
  }
}
