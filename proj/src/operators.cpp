#include "ckp/operators.hpp"

#include <algorithm>

namespace ckp {

void TensorVector::add_term(const Monomial& a, const Monomial& b, const Rational& c) {
  if (c == 0) return;
  Key k{a, b};
  auto [it, inserted] = terms_.emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TensorVector::add_product(const FockVector& u, const FockVector& w, const Rational& c) {
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mw, cw] : w.terms()) add_term(mu, mw, c * cu * cw);
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorVector TensorVector::swapped() const {
  TensorVector out;
  for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

namespace {

// A pair (a, b) contributes to a mode sum acting on v only when each member
// is a creation index or an annihilation index not exceeding the max degree.
bool pair_contributes(int da, int db, long maxd) {
  return (da < 0 || da <= maxd) && (db < 0 || db <= maxd);
}

}  // namespace

FockVector heisenberg_mode(long n, const FockVector& v) {
  FockVector out;
  if (v.is_zero()) return out;
  long maxd = v.max_degree_doubled();
  long total = 4 * n;  // doubled sum of the pair indices
  Rational half(1, 2);
  for (long da = total - maxd - 2; da <= maxd + 2; ++da) {
    if (((da % 2) + 2) % 2 == 0) continue;
    long db = total - da;
    if (!pair_contributes(static_cast<int>(da), static_cast<int>(db), maxd)) continue;
    FockVector t = normal_ordered_pair(HalfIndex(static_cast<int>(da)), HalfIndex(static_cast<int>(db)), v);
    t *= half;
    out += t;
  }
  return out;
}

FockVector twisted_heisenberg_mode(HalfIndex n, const FockVector& v) {
  FockVector out;
  if (v.is_zero()) return out;
  long maxd = v.max_degree_doubled();
  long total = 2L * n.doubled;  // doubled(a) + doubled(b) = 2 * (2n)
  for (long da = total - maxd - 2; da <= maxd + 2; ++da) {
    if (((da % 2) + 2) % 2 == 0) continue;
    long db = total - da;
    if (!pair_contributes(static_cast<int>(da), static_cast<int>(db), maxd)) continue;
    // sign (-1)^(b+1/2), b+1/2 = (db+1)/2
    long e = (db + 1) / 2;
    Rational coeff(((e % 2 + 2) % 2 == 0) ? 1 : -1, 2);
    FockVector t = normal_ordered_pair(HalfIndex(static_cast<int>(da)), HalfIndex(static_cast<int>(db)), v);
    t *= coeff;
    out += t;
  }
  return out;
}

FockVector virasoro_mode(const Rational& lambda, long n, const FockVector& v) {
  FockVector out;
  if (v.is_zero()) return out;
  long maxd = v.max_degree_doubled();
  // pair indices a = 2k+1/2 (doubled 4k+1), b = 2l-1/2 (doubled 4l-1), k+l=n
  long klo = n - (maxd + 1) / 4 - 1;
  long khi = (maxd - 1 + 4) / 4 + 1;
  for (long k = klo; k <= khi; ++k) {
    long l = n - k;
    long da = 4 * k + 1, db = 4 * l - 1;
    if (!pair_contributes(static_cast<int>(da), static_cast<int>(db), maxd)) continue;
    Rational coeff = -(lambda * (k + 1) + (lambda + 1) * l);
    if (coeff == 0) continue;
    FockVector t = normal_ordered_pair(HalfIndex(static_cast<int>(da)), HalfIndex(static_cast<int>(db)), v);
    t *= coeff;
    out += t;
  }
  return out;
}

FockVector beta_mode(long k, const FockVector& v) {
  return apply_mode(HalfIndex(static_cast<int>(-4 * k + 1)), v);
}

FockVector gamma_mode(long k, const FockVector& v) {
  return apply_mode(HalfIndex(static_cast<int>(-4 * k - 1)), v);
}

TensorVector hirota_residue(const FockVector& u, const FockVector& w) {
  TensorVector out;
  long du = u.max_degree_doubled(), dw = w.max_degree_doubled();
  // x_m u = 0 for m > deg u; x_{-m} w = 0 for -m > deg w
  for (long md = -dw; md <= du; ++md) {
    if (((md % 2) + 2) % 2 == 0) continue;
    long e = (md - 1) / 2;  // m - 1/2
    Rational sign(((e % 2 + 2) % 2 == 0) ? 1 : -1);
    FockVector a = apply_mode(HalfIndex(static_cast<int>(md)), u);
    if (a.is_zero()) continue;
    FockVector b = apply_mode(HalfIndex(static_cast<int>(-md)), w);
    if (b.is_zero()) continue;
    out.add_product(a, b, sign);
  }
  return out;
}

}  // namespace ckp
