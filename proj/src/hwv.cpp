#include "ckp/hwv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ckp/operators.hpp"

namespace ckp {

namespace {

void enumerate_odd_partitions(long remaining, long max_part, std::vector<int>& current,
                              std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  long p = std::min(remaining, max_part);
  if (p % 2 == 0) --p;
  for (; p >= 1; p -= 2) {
    current.push_back(static_cast<int>(p));
    enumerate_odd_partitions(remaining - p, p, current, out);
    current.pop_back();
  }
}

Monomial monomial_from_partition(const std::vector<int>& parts) {
  std::vector<Monomial::Part> mp;
  for (int p : parts) {
    if (!mp.empty() && mp.back().first == -p)
      ++mp.back().second;
    else
      mp.push_back({-p, 1});
  }
  return Monomial(std::move(mp));
}

}  // namespace

GradedBasis graded_basis(long degree_doubled) {
  if (degree_doubled < 0) throw std::invalid_argument("graded_basis: degree must be nonnegative");
  GradedBasis gb;
  gb.degree_doubled = degree_doubled;
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  enumerate_odd_partitions(degree_doubled, degree_doubled, cur, parts);
  for (const auto& p : parts) gb.monomials.push_back(monomial_from_partition(p));
  return gb;
}

RatRow coordinates(const FockVector& v, const std::vector<Monomial>& basis) {
  std::map<Monomial, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  RatRow row(basis.size(), 0);
  for (const auto& [m, c] : v.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::invalid_argument("coordinates: monomial outside basis");
    row[it->second] = c;
  }
  return row;
}

HwvReport hwv_basis(long degree_doubled) {
  HwvReport report;
  report.degree_doubled = degree_doubled;
  GradedBasis gb = graded_basis(degree_doubled);

  // charge blocks, descending charge
  std::map<long, std::vector<Monomial>, std::greater<long>> blocks;
  for (const auto& m : gb.monomials) blocks[m.charge()].push_back(m);

  // h_n lowers degree by 2n; conditions with 2n <= degree suffice
  long nmax = degree_doubled / 4;

  for (const auto& [chg, cols] : blocks) {
    RatMatrix mat;
    for (long n = 1; n <= nmax; ++n) {
      GradedBasis target = graded_basis(degree_doubled - 4 * n);
      std::vector<Monomial> rows_basis;
      for (const auto& t : target.monomials)
        if (t.charge() == chg) rows_basis.push_back(t);
      if (rows_basis.empty()) continue;
      std::map<Monomial, size_t> rindex;
      for (size_t i = 0; i < rows_basis.size(); ++i) rindex.emplace(rows_basis[i], i);
      size_t base = mat.size();
      mat.resize(base + rows_basis.size(), RatRow(cols.size(), 0));
      for (size_t j = 0; j < cols.size(); ++j) {
        FockVector image = heisenberg_mode(n, FockVector(cols[j], 1));
        for (const auto& [m, c] : image.terms()) mat[base + rindex.at(m)][j] = c;
      }
    }
    std::vector<RatRow> kernel = exact_kernel(std::move(mat), static_cast<int>(cols.size()));
    for (const auto& coeffs : kernel) {
      FockVector v;
      for (size_t j = 0; j < cols.size(); ++j) v.add_term(cols[j], coeffs[j]);
      report.basis.push_back(std::move(v));
      report.charges.push_back(chg);
    }
  }
  report.dimension = static_cast<long>(report.basis.size());
  return report;
}

std::vector<HwvReport> hwv_all(long max_degree_doubled, bool parallel) {
  std::vector<HwvReport> out(max_degree_doubled + 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long d = 0; d <= max_degree_doubled; ++d) out[d] = hwv_basis(d);
  return out;
}

bool is_hwv(const FockVector& v) {
  if (v.is_zero()) throw std::invalid_argument("is_hwv: zero vector");
  long nmax = v.max_degree_doubled() / 4;
  for (long n = 1; n <= nmax; ++n)
    if (!heisenberg_mode(n, v).is_zero()) return false;
  return true;
}

std::vector<long> hwv_charge_spectrum(long degree_doubled) {
  return hwv_basis(degree_doubled).charges;
}

}  // namespace ckp
