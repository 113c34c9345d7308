#include "ckp/qseries.hpp"

#include <stdexcept>

#include "ckp/hwv.hpp"

namespace ckp {

QSeries QSeries::one(long order2) {
  QSeries s(order2);
  s.set(0, 1);
  return s;
}

long long QSeries::coeff(long exp2) const {
  auto it = c_.find(exp2);
  return it == c_.end() ? 0 : it->second;
}

void QSeries::set(long exp2, long long c) {
  if (exp2 < 0 || exp2 > order2_) throw std::out_of_range("QSeries::set: exponent outside [0, order]");
  if (c == 0)
    c_.erase(exp2);
  else
    c_[exp2] = c;
}

void QSeries::add(long exp2, long long c) {
  if (exp2 < 0 || exp2 > order2_) return;
  auto [it, inserted] = c_.emplace(exp2, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

QSeries QSeries::operator*(const QSeries& o) const {
  QSeries out(std::min(order2_, o.order2_));
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) out.add(e1 + e2, c1 * c2);
  return out;
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries out(std::min(order2_, o.order2_));
  for (const auto& [e, c] : c_) out.add(e, c);
  for (const auto& [e, c] : o.c_) out.add(e, c);
  return out;
}

QSeries QSeries::operator-(const QSeries& o) const {
  QSeries out(std::min(order2_, o.order2_));
  for (const auto& [e, c] : c_) out.add(e, c);
  for (const auto& [e, c] : o.c_) out.add(e, -c);
  return out;
}

QSeries QSeries::inverse() const {
  if (coeff(0) != 1) throw std::invalid_argument("QSeries::inverse: constant term must be 1");
  QSeries out(order2_);
  out.set(0, 1);
  for (long e = 1; e <= order2_; ++e) {
    long long acc = 0;
    for (const auto& [f, cf] : c_) {
      if (f == 0 || f > e) continue;
      acc += cf * out.coeff(e - f);
    }
    if (acc != 0) out.set(e, -acc);
  }
  return out;
}

BivariateSeries BivariateSeries::one(long order2) {
  BivariateSeries s(order2);
  s.add(0, 0, 1);
  return s;
}

long long BivariateSeries::coeff(long exp2, long zexp) const {
  auto it = c_.find(exp2);
  if (it == c_.end()) return 0;
  auto jt = it->second.find(zexp);
  return jt == it->second.end() ? 0 : jt->second;
}

void BivariateSeries::add(long exp2, long zexp, long long c) {
  if (exp2 < 0 || exp2 > order2_ || c == 0) return;
  auto& zmap = c_[exp2];
  auto [it, inserted] = zmap.emplace(zexp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) zmap.erase(it);
  }
  if (zmap.empty()) c_.erase(exp2);
}

void BivariateSeries::prune() {
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second.empty() ? c_.erase(it) : std::next(it);
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
  BivariateSeries out(std::min(order2_, o.order2_));
  for (const auto& [e1, z1] : c_)
    for (const auto& [e2, z2] : o.c_) {
      if (e1 + e2 > out.order2_) continue;
      for (const auto& [za, ca] : z1)
        for (const auto& [zb, cb] : z2) out.add(e1 + e2, za + zb, ca * cb);
    }
  return out;
}

BivariateSeries BivariateSeries::times_geometric(long qexp2, long zstep) const {
  if (qexp2 <= 0) throw std::invalid_argument("times_geometric: q exponent must be positive");
  BivariateSeries out(order2_);
  for (const auto& [e, zmap] : c_)
    for (const auto& [z, c] : zmap)
      for (long k = 0; e + k * qexp2 <= order2_; ++k) out.add(e + k * qexp2, z + k * zstep, c);
  return out;
}

QSeries BivariateSeries::at_z_one() const {
  QSeries out(order2_);
  for (const auto& [e, zmap] : c_) {
    long long acc = 0;
    for (const auto& [z, c] : zmap) acc += c;
    if (acc != 0) out.set(e, acc);
  }
  return out;
}

long PtdoPartition::weight_doubled() const {
  long w = static_cast<long>(m) * (m + 1);  // 2 * T_m
  for (int p : parts2) w += p;
  return w;
}

QSeries fock_character(long order2) {
  QSeries prod = QSeries::one(order2);
  for (long jd = 1; jd <= order2; jd += 2) {
    QSeries f = QSeries::one(order2);
    f.add(jd, -1);
    prod = prod * f;
  }
  return prod.inverse();
}

BivariateSeries fock_character_bivariate(long order2) {
  BivariateSeries s = BivariateSeries::one(order2);
  for (long j = 1;; ++j) {
    long e_gamma = 4 * j - 3;  // creation x_{-(2j-3/2)} raises charge
    long e_beta = 4 * j - 1;   // creation x_{-(2j-1/2)} lowers charge
    if (e_gamma > order2 && e_beta > order2) break;
    if (e_gamma <= order2) s = s.times_geometric(e_gamma, +1);
    if (e_beta <= order2) s = s.times_geometric(e_beta, -1);
  }
  return s;
}

QSeries enumerated_character(long order2) {
  QSeries s(order2);
  for (long d = 0; d <= order2; ++d) s.set(d, static_cast<long long>(graded_basis(d).monomials.size()));
  return s;
}

BivariateSeries enumerated_character_bivariate(long order2) {
  BivariateSeries s(order2);
  for (long d = 0; d <= order2; ++d)
    for (const auto& m : graded_basis(d).monomials) s.add(d, m.charge(), 1);
  return s;
}

QSeries hwv_character(long order2) {
  QSeries prod = triangular_series(order2);
  for (long jd = 1; jd <= order2; jd += 2) {
    QSeries f = QSeries::one(order2);
    f.add(jd, 1);
    prod = prod * f;
  }
  return prod;
}

QSeries triangular_series(long order2) {
  QSeries s(order2);
  for (long m = 0;; ++m) {
    long t2 = m * (m + 1);  // doubled T_m
    if (t2 > order2) break;
    s.set(t2, 1);
  }
  return s;
}

bool triangular_identity_check(long order) {
  long order2 = 2 * order;
  QSeries lhs = triangular_series(order2);
  QSeries even = QSeries::one(order2);  // prod (1 - q^{2i})
  QSeries odd = QSeries::one(order2);   // prod (1 - q^{2i-1})
  for (long i = 1; 4 * i - 2 <= order2; ++i) {
    if (4 * i <= order2) {
      QSeries f = QSeries::one(order2);
      f.add(4 * i, -1);
      even = even * f;
    }
    QSeries f = QSeries::one(order2);
    f.add(4 * i - 2, -1);
    odd = odd * f;
  }
  return lhs == even * odd.inverse();
}

BivariateSeries jacobi_product(long order) {
  long order2 = 2 * order;
  BivariateSeries s = BivariateSeries::one(order2);
  for (long i = 1; 2 * (i - 1) <= order2; ++i) {
    // (1 - q^i)(1 + z q^{i-1})(1 + z^{-1} q^i), integer exponents doubled
    BivariateSeries f(order2);
    f.add(0, 0, 1);
    if (2 * i <= order2) f.add(2 * i, 0, -1);
    s = s * f;
    BivariateSeries g(order2);
    g.add(0, 0, 1);
    g.add(2 * (i - 1), 1, 1);
    s = s * g;
    if (2 * i <= order2) {
      BivariateSeries h(order2);
      h.add(0, 0, 1);
      h.add(2 * i, -1, 1);
      s = s * h;
    }
  }
  return s;
}

BivariateSeries jacobi_theta_sum(long order) {
  long order2 = 2 * order;
  BivariateSeries s(order2);
  for (long m = -(order + 2); m <= order + 2; ++m) {
    long e = m * (m - 1);  // doubled m(m-1)/2
    if (e <= order2) s.add(e, m, 1);
  }
  return s;
}

bool jacobi_triple_check(long order) { return jacobi_product(order) == jacobi_theta_sum(order); }

namespace {

void distinct_odd_partitions(long remaining, int max_part, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  int p = static_cast<int>(std::min<long>(remaining, max_part));
  if (p % 2 == 0) --p;
  for (; p >= 1; p -= 2) {
    cur.push_back(p);
    distinct_odd_partitions(remaining - p, p - 2, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PtdoPartition> enumerate_ptdo(long weight_doubled) {
  std::vector<PtdoPartition> out;
  for (int m = 0;; ++m) {
    long t2 = static_cast<long>(m) * (m + 1);
    if (t2 > weight_doubled) break;
    long rest = weight_doubled - t2;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    distinct_odd_partitions(rest, static_cast<int>(rest), cur, parts);
    for (auto& p : parts) out.push_back(PtdoPartition{m, std::move(p)});
  }
  return out;
}

}  // namespace ckp
