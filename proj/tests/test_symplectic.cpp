#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ckp/hwv.hpp"
#include "ckp/operators.hpp"
#include "ckp/symplectic.hpp"
#include "test_util.hpp"

using namespace ckp;
using namespace ckp::testutil;

namespace {

std::vector<FockVector> hwv_vectors_up_to(long max_d2) {
  std::vector<FockVector> out;
  for (const auto& rep : hwv_all(max_d2, false))
    for (const auto& v : rep.basis) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("exponential operators on pinned inputs") {
  LaurentFamily vm = exp_heisenberg_apply(ExpDirection::annihilation, false, vac(), -10, 0);
  CHECK(vm.coeff(0) == vac());
  for (long e = -10; e < 0; e += 2) CHECK(vm.coeff(e).is_zero());

  FockVector v = unit({{-3, 1}, {-1, 1}});
  LaurentFamily vmi = exp_heisenberg_apply(ExpDirection::annihilation, true, v, -10, 0);
  CHECK(vmi.coeff(0) == v);
  CHECK(vmi.coeff(-2) == Rational(-1) * vac());
  CHECK(vmi.coeff(-4).is_zero());

  LaurentFamily vp = exp_heisenberg_apply(ExpDirection::creation, false, vac(), 0, 2);
  CHECK(vp.coeff(0) == vac());
  CHECK(vp.coeff(2) == unit({{-3, 1}, {-1, 1}}));
}

TEST_CASE("symplectic fermion modes generate the chi ladders") {
  CHECK(hbeta_mode(-1, vac()) == unit({{-3, 1}}));
  for (long n = 0; n <= 3; ++n) CHECK(hbeta_mode(n, vac()).is_zero());
  CHECK(hgamma_mode(-1, vac()) == unit({{-1, 1}}));
  CHECK(hgamma_mode(0, vac()).is_zero());
  CHECK(hbeta_mode(-2, hbeta_mode(-1, vac())) == unit({{-3, 2}}));
  CHECK(hgamma_mode(-2, hgamma_mode(-1, vac())) == unit({{-1, 2}}));

  FockVector b = vac(), g = vac();
  for (int n = 1; n <= 4; ++n) {
    b = hbeta_mode(-n, b);
    g = hgamma_mode(-n, g);
    CHECK(b == unit({{-3, n}}));
    CHECK(g == unit({{-1, n}}));
  }
}

TEST_CASE("vanishing bounds are honest") {
  CHECK(hbeta_vanishing_bound(vac()) == -1);
  CHECK(hgamma_vanishing_bound(vac()) == -1);
  for (const auto& v : hwv_vectors_up_to(6)) {
    long nb = hbeta_vanishing_bound(v);
    long ng = hgamma_vanishing_bound(v);
    for (long n = nb + 1; n <= nb + 3; ++n) CHECK(hbeta_mode(n, v).is_zero());
    for (long n = ng + 1; n <= ng + 3; ++n) CHECK(hgamma_mode(n, v).is_zero());
  }
}

TEST_CASE("anticommutation relations on highest weight vectors") {
  auto vectors = hwv_vectors_up_to(6);
  for (long m = -3; m <= 3; ++m) {
    for (long n = -3; n <= 3; ++n) {
      for (const auto& v : vectors) {
        FockVector bg = hbeta_mode(m, hgamma_mode(n, v)) + hgamma_mode(n, hbeta_mode(m, v));
        FockVector rhs = (m + n == 0) ? Rational(m) * v : FockVector{};
        REQUIRE(bg == rhs);
        FockVector bb = hbeta_mode(m, hbeta_mode(n, v)) + hbeta_mode(n, hbeta_mode(m, v));
        REQUIRE(bb.is_zero());
        FockVector gg = hgamma_mode(m, hgamma_mode(n, v)) + hgamma_mode(n, hgamma_mode(m, v));
        REQUIRE(gg.is_zero());
      }
    }
  }
}

TEST_CASE("modes preserve the highest weight subspace") {
  for (const auto& v : hwv_vectors_up_to(8)) {
    for (long n = -3; n <= 3; ++n) {
      FockVector b = hbeta_mode(n, v);
      if (!b.is_zero()) CHECK(is_hwv(b));
      FockVector g = hgamma_mode(n, v);
      if (!g.is_zero()) CHECK(is_hwv(g));
    }
  }
}

TEST_CASE("charge shifts") {
  for (const auto& v : hwv_vectors_up_to(6)) {
    for (long n = -2; n <= 2; ++n) {
      FockVector cb = heisenberg_mode(0, hbeta_mode(n, v)) - hbeta_mode(n, heisenberg_mode(0, v));
      REQUIRE(cb == Rational(-1) * hbeta_mode(n, v));
      FockVector cg = heisenberg_mode(0, hgamma_mode(n, v)) - hgamma_mode(n, heisenberg_mode(0, v));
      REQUIRE(cg == hgamma_mode(n, v));
    }
  }
}

TEST_CASE("exchange relation within a finite window") {
  // V-(z) V+(w) = (sum_j w^{2j} z^{-2j}) V+(w) V-(z), coefficientwise
  for (const FockVector& v : {vac(), unit({{-1, 1}})}) {
    long wmax = 6;
    LaurentFamily plus = exp_heisenberg_apply(ExpDirection::creation, false, v, 0, wmax);
    for (long b2 = 0; b2 <= wmax; b2 += 2) {
      LaurentFamily lhs_fam =
          exp_heisenberg_apply(ExpDirection::annihilation, false, plus.coeff(b2), -20, 0);
      LaurentFamily minus = exp_heisenberg_apply(ExpDirection::annihilation, false, v, -20, 0);
      for (long a2 = -8; a2 <= 0; a2 += 2) {
        FockVector rhs;
        for (long j2 = 0; j2 <= b2; j2 += 2) {
          FockVector inner = minus.coeff(a2 + j2);
          if (inner.is_zero()) continue;
          rhs += exp_heisenberg_apply(ExpDirection::creation, false, inner, 0, b2).coeff(b2 - j2);
        }
        REQUIRE(lhs_fam.coeff(a2) == rhs);
      }
    }
  }
}

TEST_CASE("Virasoro modes on the highest weight space") {
  for (long n = -1; n <= 3; ++n) CHECK(hwv_virasoro_mode(n, vac()).is_zero());

  FockVector central = hwv_virasoro_mode(2, hwv_virasoro_mode(-2, vac())) -
                       hwv_virasoro_mode(-2, hwv_virasoro_mode(2, vac())) -
                       Rational(4) * hwv_virasoro_mode(0, vac());
  CHECK(central == Rational(-1) * vac());

  CHECK_THROWS(hwv_virasoro_mode(0, unit({{-3, 1}, {-1, 1}})));
}

TEST_CASE("translation relation with the beta modes") {
  for (const FockVector& v : {vac(), unit({{-1, 1}})}) {
    for (long n = -3; n <= 1; ++n) {
      FockVector lhs = hwv_virasoro_mode(-1, hbeta_mode(n, v));
      FockVector bt = hbeta_mode(n, hwv_virasoro_mode(-1, v));
      lhs -= bt;
      // mode form of the derivative: with modes at (z^2)^{-n-1} the commutator
      // [T, H^beta_(n)] picks up the factor -n on H^beta_(n-1)
      REQUIRE(lhs == Rational(-n) * hbeta_mode(n - 1, v));
    }
  }
}
