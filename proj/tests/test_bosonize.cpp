#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "ckp/bosonize.hpp"
#include "ckp/hwv.hpp"
#include "ckp/linalg.hpp"
#include "test_util.hpp"

using namespace ckp;
using namespace ckp::testutil;

namespace {

PolyState state(int lattice, std::map<int, int> xparts, std::map<int, int> yparts) {
  PolyMonomial m;
  m.lattice = lattice;
  m.xparts = std::move(xparts);
  m.yparts = std::move(yparts);
  PolyState s;
  s.add_term(m, GaussianRational(1));
  return s;
}

// all monomial states with the given lattice range and variable weight bound
std::vector<PolyState> small_states(int max_lattice, long max_weight) {
  std::vector<PolyState> out;
  std::vector<std::pair<std::map<int, int>, std::map<int, int>>> shapes;
  // enumerate exponent patterns over x_1,x_2,x_3,y_1,y_2,y_3
  for (int x1 = 0; x1 <= max_weight; ++x1)
    for (int x2 = 0; 2 * x2 <= max_weight; ++x2)
      for (int x3 = 0; 3 * x3 <= max_weight; ++x3)
        for (int y1 = 0; y1 <= max_weight; ++y1)
          for (int y2 = 0; 2 * y2 <= max_weight; ++y2)
            for (int y3 = 0; 3 * y3 <= max_weight; ++y3) {
              long w = x1 + 2 * x2 + 3 * x3 + y1 + 2 * y2 + 3 * y3;
              if (w > max_weight) continue;
              std::map<int, int> xs, ys;
              if (x1) xs[1] = x1;
              if (x2) xs[2] = x2;
              if (x3) xs[3] = x3;
              if (y1) ys[1] = y1;
              if (y2) ys[2] = y2;
              if (y3) ys[3] = y3;
              shapes.emplace_back(xs, ys);
            }
  for (int m = -max_lattice; m <= max_lattice; ++m)
    for (const auto& [xs, ys] : shapes) out.push_back(state(m, xs, ys));
  return out;
}

GaussianRational gi() { return GaussianRational::i(); }

// x-boson Heisenberg action transported from the oscillator algebra:
// n > 0 acts as i d/dx_n, n < 0 as i|n| x_|n|, n = 0 reads the lattice charge.
PolyState hx_mode(long n, const PolyState& s) {
  PolyState out;
  for (const auto& [m, c] : s.terms()) {
    if (n == 0) {
      if (m.lattice != 0) out.add_term(m, GaussianRational(m.lattice) * c);
    } else if (n < 0) {
      PolyMonomial t = m;
      t.xparts[(int)-n] += 1;
      out.add_term(t, GaussianRational(Rational(-n)) * gi() * c);
    } else {
      auto it = m.xparts.find((int)n);
      if (it == m.xparts.end()) continue;
      PolyMonomial t = m;
      int e = it->second;
      if (e == 1)
        t.xparts.erase((int)n);
      else
        t.xparts[(int)n] = e - 1;
      out.add_term(t, GaussianRational(Rational(e)) * gi() * c);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("hy_mode pinned values") {
  CHECK(hy_mode(0, state(1, {}, {})) == state(1, {}, {}));
  CHECK(hy_mode(0, state(-2, {}, {{1, 1}})).terms().begin()->second == GaussianRational(-2));
  CHECK(hy_mode(1, state(0, {}, {{1, 1}})) == state(0, {}, {}));
  PolyState two_y2 = state(0, {}, {{2, 1}});
  two_y2 *= GaussianRational(2);
  CHECK(hy_mode(-2, PolyState::one()) == two_y2);
  CHECK(hy_mode(2, PolyState::one()).is_zero());
}

TEST_CASE("lattice charge shifts by the mode type") {
  for (const auto& s : small_states(1, 2)) {
    int m0 = s.terms().begin()->first.lattice;
    for (long k = -2; k <= 2; ++k) {
      PolyState bs = beta_bos_mode(k, s);
      for (const auto& [m, c] : bs.terms()) CHECK(m.lattice == m0 - 1);
      PolyState gs = gamma_bos_mode(k, s);
      for (const auto& [m, c] : gs.terms()) CHECK(m.lattice == m0 + 1);
    }
  }
}

TEST_CASE("bosonized canonical commutation relations") {
  auto states = small_states(2, 3);
  for (long m = -2; m <= 2; ++m) {
    for (long n = -2; n <= 2; ++n) {
      for (const auto& s : states) {
        PolyState bg = beta_bos_mode(m, gamma_bos_mode(n, s)) - gamma_bos_mode(n, beta_bos_mode(m, s));
        PolyState rhs;
        if (m + n == 0) rhs = s;
        REQUIRE(bg == rhs);
        PolyState bb = beta_bos_mode(m, beta_bos_mode(n, s)) - beta_bos_mode(n, beta_bos_mode(m, s));
        REQUIRE(bb.is_zero());
        PolyState gg = gamma_bos_mode(m, gamma_bos_mode(n, s)) - gamma_bos_mode(n, gamma_bos_mode(m, s));
        REQUIRE(gg.is_zero());
      }
    }
  }
}

TEST_CASE("chi dispatch matches the mode dictionary") {
  for (const auto& s : small_states(1, 2)) {
    CHECK(chi_bos_mode(HalfIndex(-1), s) == gamma_bos_mode(0, s));
    CHECK(chi_bos_mode(HalfIndex(-3), s) == beta_bos_mode(1, s));
    CHECK(chi_bos_mode(HalfIndex(-5), s) == gamma_bos_mode(1, s));
    CHECK(chi_bos_mode(HalfIndex(1), s) == beta_bos_mode(0, s));
    CHECK(chi_bos_mode(HalfIndex(3), s) == gamma_bos_mode(-1, s));
    CHECK(chi_bos_mode(HalfIndex(5), s) == beta_bos_mode(-1, s));
  }
}

TEST_CASE("bosonized chi modes obey the chi commutation law") {
  auto states = small_states(2, 3);
  for (int ad = -5; ad <= 5; ad += 2) {
    for (int bd = -5; bd <= 5; bd += 2) {
      for (const auto& s : states) {
        PolyState lhs = chi_bos_mode(HalfIndex(ad), chi_bos_mode(HalfIndex(bd), s)) -
                        chi_bos_mode(HalfIndex(bd), chi_bos_mode(HalfIndex(ad), s));
        PolyState rhs;
        if (ad == -bd) {
          int sign = (((ad - 1) / 2) % 2 == 0) ? 1 : -1;
          rhs = s;
          rhs *= GaussianRational(sign);
        }
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("intertwiner basics and equivariance") {
  CHECK(intertwiner(vac()) == PolyState::one());
  for (const auto& v : basis_up_to(6)) {
    for (int ad = -5; ad <= 5; ad += 2) {
      PolyState lhs = intertwiner(apply_mode(HalfIndex(ad), v));
      PolyState rhs = chi_bos_mode(HalfIndex(ad), intertwiner(v));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("intertwiner preserves the charge as the lattice exponent") {
  for (const auto& v : basis_up_to(6)) {
    long c = v.terms().begin()->first.charge();
    PolyState img = intertwiner(v);
    REQUIRE(!img.is_zero());
    for (const auto& [m, coeff] : img.terms()) CHECK(m.lattice == c);
  }
}

TEST_CASE("intertwiner is injective degree by degree") {
  for (long d = 0; d <= 6; ++d) {
    auto gb = graded_basis(d);
    // flatten images to rational coordinates (re and im per monomial)
    std::map<PolyMonomial, size_t> index;
    std::vector<PolyState> images;
    for (const auto& m : gb.monomials) {
      images.push_back(intertwiner(FockVector(m, 1)));
      for (const auto& [pm, c] : images.back().terms())
        index.emplace(pm, index.size());
    }
    RatMatrix rows;
    for (const auto& img : images) {
      RatRow row(2 * index.size(), Rational(0));
      for (const auto& [pm, c] : img.terms()) {
        row[2 * index.at(pm)] = c.re;
        row[2 * index.at(pm) + 1] = c.im;
      }
      rows.push_back(std::move(row));
    }
    CHECK(rank(rows) == (long)gb.monomials.size());
  }
}

TEST_CASE("Heisenberg action transported through the intertwiner") {
  for (const auto& v : basis_up_to(4)) {
    for (long n = -2; n <= 2; ++n) {
      PolyState lhs = intertwiner(heisenberg_mode(n, v));
      PolyState rhs = hx_mode(n, intertwiner(v));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("bosonized Hirota residue") {
  CHECK(hirota_residue_bos(PolyState::one(), PolyState::one()).is_zero());

  for (const auto& u : basis_up_to(4)) {
    for (const auto& w : basis_up_to(4)) {
      TensorPolyState lhs = hirota_residue_bos(intertwiner(u), intertwiner(w));
      TensorPolyState rhs = intertwiner(hirota_residue(u, w));
      REQUIRE(lhs == rhs);
    }
  }

  for (const auto& u : basis_up_to(4)) {
    for (const auto& w : basis_up_to(4)) {
      TensorPolyState a = hirota_residue_bos(intertwiner(u), intertwiner(w));
      TensorPolyState b = hirota_residue_bos(intertwiner(w), intertwiner(u)).swapped();
      TensorPolyState sum = a;
      for (const auto& [k, c] : b.terms()) sum.add_term(k.first, k.second, c);
      REQUIRE(sum.is_zero());
    }
  }
}
