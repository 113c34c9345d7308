#include "ckp/bosonize.hpp"

#include <algorithm>
#include <vector>

namespace ckp {

long PolyMonomial::weight() const {
  long w = 0;
  for (const auto& [n, e] : xparts) w += static_cast<long>(n) * e;
  for (const auto& [n, e] : yparts) w += static_cast<long>(n) * e;
  return w;
}

PolyState PolyState::one() {
  PolyState s;
  s.add_term(PolyMonomial{}, GaussianRational(1));
  return s;
}

void PolyState::add_term(const PolyMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyState& PolyState::operator+=(const PolyState& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyState& PolyState::operator-=(const PolyState& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PolyState& PolyState::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = v * c;
  return *this;
}

long PolyState::max_weight() const {
  long w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

void TensorPolyState::add_term(const PolyMonomial& a, const PolyMonomial& b, const GaussianRational& c) {
  if (c.is_zero()) return;
  Key k{a, b};
  auto [it, inserted] = terms_.emplace(std::move(k), c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorPolyState::add_product(const PolyState& s, const PolyState& t, const GaussianRational& c) {
  for (const auto& [ms, cs] : s.terms())
    for (const auto& [mt, ct] : t.terms()) add_term(ms, mt, c * cs * ct);
}

TensorPolyState& TensorPolyState::operator-=(const TensorPolyState& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorPolyState TensorPolyState::swapped() const {
  TensorPolyState out;
  for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

namespace {

PolyState mul_x(int n, const PolyState& s) {
  PolyState out;
  for (const auto& [m, c] : s.terms()) {
    PolyMonomial t = m;
    ++t.xparts[n];
    out.add_term(t, c);
  }
  return out;
}

PolyState mul_y(int n, const PolyState& s) {
  PolyState out;
  for (const auto& [m, c] : s.terms()) {
    PolyMonomial t = m;
    ++t.yparts[n];
    out.add_term(t, c);
  }
  return out;
}

PolyState ddx(int n, const PolyState& s) {
  PolyState out;
  for (const auto& [m, c] : s.terms()) {
    auto it = m.xparts.find(n);
    if (it == m.xparts.end()) continue;
    PolyMonomial t = m;
    int e = it->second;
    if (e == 1)
      t.xparts.erase(n);
    else
      t.xparts[n] = e - 1;
    out.add_term(t, c * GaussianRational(e));
  }
  return out;
}

PolyState ddy(int n, const PolyState& s) {
  PolyState out;
  for (const auto& [m, c] : s.terms()) {
    auto it = m.yparts.find(n);
    if (it == m.yparts.end()) continue;
    PolyMonomial t = m;
    int e = it->second;
    if (e == 1)
      t.yparts.erase(n);
    else
      t.yparts[n] = e - 1;
    out.add_term(t, c * GaussianRational(e));
  }
  return out;
}

PolyState shift_lattice(int d, const PolyState& s) {
  PolyState out;
  for (const auto& [m, c] : s.terms()) {
    PolyMonomial t = m;
    t.lattice += d;
    out.add_term(t, c);
  }
  return out;
}

PolyState mul_lattice_charge(const PolyState& s) {
  PolyState out;
  for (const auto& [m, c] : s.terms()) out.add_term(m, c * GaussianRational(m.lattice));
  return out;
}

// Coefficients of exp(sa * sum_{n>0} (1/n)(d/dx_n + i d/dy_n) z^{-n}) s at
// z^{-j}, j = 0..jmax. Weight drops by exactly j, so the family terminates.
std::vector<PolyState> annihilation_family(const PolyState& s, long jmax, const GaussianRational& sa) {
  std::vector<PolyState> f;
  f.push_back(s);
  GaussianRational i = GaussianRational::i();
  for (long j = 1; j <= jmax; ++j) {
    PolyState acc;
    for (long n = 1; n <= j; ++n) {
      const PolyState& prev = f[j - n];
      if (prev.is_zero()) continue;
      PolyState d = ddx(static_cast<int>(n), prev);
      PolyState dy = ddy(static_cast<int>(n), prev);
      dy *= i;
      d += dy;
      d *= sa;
      acc += d;
    }
    acc *= GaussianRational(Rational(1, j));
    f.push_back(std::move(acc));
  }
  return f;
}

// Coefficient of exp(sc * sum_{n>0} (x_n + i y_n) z^n) s at z^j.
PolyState creation_coeff(const PolyState& s, long j, const GaussianRational& sc) {
  if (j == 0) return s;
  std::vector<PolyState> f;
  f.push_back(s);
  GaussianRational i = GaussianRational::i();
  for (long jj = 1; jj <= j; ++jj) {
    PolyState acc;
    for (long n = 1; n <= jj; ++n) {
      const PolyState& prev = f[jj - n];
      if (prev.is_zero()) continue;
      PolyState t = mul_x(static_cast<int>(n), prev);
      PolyState ty = mul_y(static_cast<int>(n), prev);
      ty *= i;
      t += ty;
      t *= sc * GaussianRational(n);
      acc += t;
    }
    acc *= GaussianRational(Rational(1, jj));
    f.push_back(std::move(acc));
  }
  return f[j];
}

long max_y_weight(const PolyState& s) {
  long w = 0;
  for (const auto& [m, c] : s.terms())
    for (const auto& [n, e] : m.yparts) w = std::max(w, static_cast<long>(n));
  return w;
}

}  // namespace

PolyState hy_mode(long n, const PolyState& s) {
  if (n > 0) return ddy(static_cast<int>(n), s);
  if (n < 0) {
    PolyState out = mul_y(static_cast<int>(-n), s);
    out *= GaussianRational(-n);
    return out;
  }
  return mul_lattice_charge(s);
}

PolyState beta_bos_mode(long k, const PolyState& s) {
  // exp(i sum (x_n+iy_n) z^n) exp(-i sum (1/n)(dx_n+i dy_n) z^{-n}) e^{-alpha},
  // coefficient of z^{k-1}
  PolyState shifted = shift_lattice(-1, s);
  GaussianRational sa(0, -1), sc(0, 1);
  long w = shifted.max_weight();
  auto dfam = annihilation_family(shifted, w, sa);
  PolyState out;
  for (long jd = 0; jd <= w; ++jd) {
    if (dfam[jd].is_zero()) continue;
    long jc = k - 1 + jd;
    if (jc < 0) continue;
    out += creation_coeff(dfam[jd], jc, sc);
  }
  return out;
}

PolyState gamma_bos_mode(long k, const PolyState& s) {
  // :exp(-i sum (x_n+iy_n) z^n) h^y(z) exp(i sum (1/n)(dx_n+i dy_n) z^{-n}) e^{alpha}:,
  // coefficient of z^k. The single h^y factor splits into its annihilation
  // half, the charge term h^y_0 z^{-1} (z^{h_0} sits right of e^{alpha}, so it
  // reads the charge before the shift), and its creation half; creation
  // pieces act left of annihilation pieces.
  PolyState shifted = shift_lattice(+1, s);
  GaussianRational sa(0, 1), sc(0, -1);
  long w = shifted.max_weight();
  auto dfam = annihilation_family(shifted, w, sa);
  PolyState out;
  for (long jd = 0; jd <= w; ++jd) {
    const PolyState& u = dfam[jd];
    if (u.is_zero()) continue;
    // h^y annihilation: d/dy_r at z^{-r-1}
    long rmax = max_y_weight(u);
    for (long r = 1; r <= rmax; ++r) {
      PolyState t = ddy(static_cast<int>(r), u);
      if (t.is_zero()) continue;
      long jc = k + jd + r + 1;
      if (jc < 0) continue;
      out += creation_coeff(t, jc, sc);
    }
    // h^y_0 at z^{-1}; u already carries the shifted lattice, so subtract it back
    {
      PolyState t;
      for (const auto& [m, c] : u.terms()) t.add_term(m, c * GaussianRational(m.lattice - 1));
      long jc = k + jd + 1;
      if (!t.is_zero() && jc >= 0) out += creation_coeff(t, jc, sc);
    }
    // h^y creation: r y_r at z^{r-1}
    for (long r = 1; r <= k + jd + 1; ++r) {
      PolyState t = mul_y(static_cast<int>(r), u);
      t *= GaussianRational(r);
      long jc = k + jd + 1 - r;
      out += creation_coeff(t, jc, sc);
    }
  }
  return out;
}

PolyState chi_bos_mode(HalfIndex a, const PolyState& s) {
  int rem = ((a.doubled % 4) + 4) % 4;
  if (rem == 1) return beta_bos_mode((1 - a.doubled) / 4, s);
  return gamma_bos_mode(-(a.doubled + 1) / 4, s);
}

PolyState intertwiner(const FockVector& v) {
  PolyState out;
  for (const auto& [mono, c] : v.terms()) {
    PolyState s = PolyState::one();
    // parts are stored most-negative-first; apply the smallest |index| first,
    // matching the basis word read right to left
    const auto& parts = mono.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      for (int rep = 0; rep < it->second; ++rep) s = chi_bos_mode(HalfIndex(it->first), s);
    s *= GaussianRational(c);
    out += s;
  }
  return out;
}

TensorPolyState intertwiner(const TensorVector& t) {
  TensorPolyState out;
  for (const auto& [k, c] : t.terms())
    out.add_product(intertwiner(FockVector(k.first, 1)), intertwiner(FockVector(k.second, 1)),
                    GaussianRational(c));
  return out;
}

TensorPolyState hirota_residue_bos(const PolyState& s, const PolyState& t) {
  TensorPolyState out;
  long ws = s.max_weight(), wt = t.max_weight();
  // beta at z^{m-1}, gamma at z^n, residue pairs n = -m
  for (long m = 1 - ws; m <= 2 * wt + 1; ++m) {
    PolyState a = beta_bos_mode(m, s);
    if (a.is_zero()) continue;
    PolyState b = gamma_bos_mode(-m, t);
    if (b.is_zero()) continue;
    out.add_product(a, b, GaussianRational(1));
  }
  for (long m = 1 - wt; m <= 2 * ws + 1; ++m) {
    PolyState b = beta_bos_mode(m, t);
    if (b.is_zero()) continue;
    PolyState a = gamma_bos_mode(-m, s);
    if (a.is_zero()) continue;
    out.add_product(a, b, GaussianRational(-1));
  }
  return out;
}

}  // namespace ckp
