#include "ckp/symplectic.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ckp/hwv.hpp"
#include "ckp/operators.hpp"

namespace ckp {

namespace {

long ceil_div(long a, long b) { return (a >= 0) ? (a + b - 1) / b : -((-a) / b); }

// Coefficients F_0..F_jmax of exp(sign * sum_{n>0} (1/n) h_{sn} t^n) v, where
// sn = +n (annihilation) or -n (creation). Recurrence j F_j = sign * sum_n h_{sn} F_{j-n}.
std::vector<FockVector> exp_family(const FockVector& v, long jmax, int sign, bool creation) {
  std::vector<FockVector> f;
  f.push_back(v);
  for (long j = 1; j <= jmax; ++j) {
    FockVector acc;
    for (long n = 1; n <= j; ++n) {
      const FockVector& prev = f[j - n];
      if (prev.is_zero()) continue;
      acc += heisenberg_mode(creation ? -n : n, prev);
    }
    acc *= Rational(sign, j);
    f.push_back(std::move(acc));
  }
  return f;
}

// Single creation-exponential coefficient applied to v.
FockVector exp_creation_coeff(const FockVector& v, long j, int sign) {
  if (j == 0) return v;
  return exp_family(v, j, sign, true)[j];
}

}  // namespace

LaurentFamily exp_heisenberg_apply(ExpDirection direction, bool inverted, const FockVector& v,
                                   long window_lo, long window_hi) {
  if (window_lo > window_hi) throw std::invalid_argument("exp_heisenberg_apply: empty window");
  LaurentFamily out;
  if (direction == ExpDirection::annihilation) {
    // V-(z) = exp(-sum (1/n) h_n z^{-2n}); inverted flips the sign
    int sign = inverted ? 1 : -1;
    long jmax = v.max_degree_doubled() / 4;
    out.min_exponent = -2 * jmax;
    auto fam = exp_family(v, jmax, sign, false);
    for (long j = 0; j <= jmax; ++j) {
      long ze = -2 * j;
      if (ze < window_lo || ze > window_hi || fam[j].is_zero()) continue;
      out.coeffs.emplace(ze, fam[j]);
    }
  } else {
    // V+(z) = exp(sum (1/n) h_{-n} z^{2n}); inverted flips the sign
    int sign = inverted ? -1 : 1;
    out.min_exponent = 0;
    long jmax = window_hi / 2;
    auto fam = exp_family(v, std::max(jmax, 0L), sign, true);
    for (long j = 0; j <= jmax; ++j) {
      long ze = 2 * j;
      if (ze < window_lo || ze > window_hi || fam[j].is_zero()) continue;
      out.coeffs.emplace(ze, fam[j]);
    }
  }
  return out;
}

namespace {

// The splitting enumeration below depends on a term's degree and charge only,
// so terms sharing both are processed as one block.
std::map<std::pair<long, long>, FockVector> homogeneous_blocks(const FockVector& v) {
  std::map<std::pair<long, long>, FockVector> blocks;
  for (const auto& [mono, c] : v.terms())
    blocks[{mono.degree_doubled(), mono.charge()}].add_term(mono, c);
  return blocks;
}

}  // namespace

FockVector hbeta_mode(long n, const FockVector& v) {
  FockVector out;
  for (const auto& [key, m] : homogeneous_blocks(v)) {
    const auto [degd, chg] = key;
    // V-(z)^{-1} (w-exponent -j1), then w^{-chg}, then beta mode m at w^{m-1},
    // then V+(z)^{-1} at w^{+j4}; total exponent must be -n-1
    auto fminus = exp_family(m, degd / 4, +1, false);
    for (long j1 = 0; j1 * 4 <= degd; ++j1) {
      const FockVector& u = fminus[j1];
      if (u.is_zero()) continue;
      long degd_u = degd - 4 * j1;
      long m_min = ceil_div(1 - degd_u, 4);
      long m_max = -n + j1 + chg;
      for (long mm = m_min; mm <= m_max; ++mm) {
        FockVector t = beta_mode(mm, u);
        if (t.is_zero()) continue;
        out += exp_creation_coeff(t, m_max - mm, -1);
      }
    }
  }
  return out;
}

FockVector hgamma_mode(long n, const FockVector& v) {
  FockVector out;
  for (const auto& [key, m] : homogeneous_blocks(v)) {
    const auto [degd, chg] = key;
    auto fminus = exp_family(m, degd / 4, -1, false);  // V-(z)
    for (long j1 = 0; j1 * 4 <= degd; ++j1) {
      const FockVector& u = fminus[j1];
      if (u.is_zero()) continue;
      long degd_u = degd - 4 * j1;
      long m_min = ceil_div(-1 - degd_u, 4);
      long m_max = -n - 1 + j1 - chg;
      for (long mm = m_min; mm <= m_max; ++mm) {
        FockVector t = gamma_mode(mm, u);
        if (t.is_zero()) continue;
        out += exp_creation_coeff(t, m_max - mm, +1);  // V+(z)
      }
    }
  }
  return out;
}

long hbeta_vanishing_bound(const FockVector& v) {
  long best = -1000;
  for (const auto& [mono, c] : v.terms())
    best = std::max(best, mono.charge() - ceil_div(1 - mono.degree_doubled(), 4));
  return best;
}

long hgamma_vanishing_bound(const FockVector& v) {
  long best = -1000;
  for (const auto& [mono, c] : v.terms())
    best = std::max(best, -mono.charge() - 1 - ceil_div(-1 - mono.degree_doubled(), 4));
  return best;
}

FockVector hwv_virasoro_mode(long n, const FockVector& v) {
  FockVector out;
  if (v.is_zero()) return out;
  if (!is_hwv(v)) throw std::invalid_argument("hwv_virasoro_mode: input outside the highest-weight subspace");
  // k < 0: H^gamma_(k) H^beta_(n-k); bounded by H^beta_(n-k) v != 0
  for (long k = n - hbeta_vanishing_bound(v); k <= -1; ++k) {
    FockVector t = hbeta_mode(n - k, v);
    if (t.is_zero()) continue;
    out += hgamma_mode(k, t);
  }
  // k >= 0: -H^beta_(n-k) H^gamma_(k)
  for (long k = 0; k <= hgamma_vanishing_bound(v); ++k) {
    FockVector t = hgamma_mode(k, v);
    if (t.is_zero()) continue;
    out -= hbeta_mode(n - k, t);
  }
  return out;
}

}  // namespace ckp
