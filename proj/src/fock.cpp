#include "ckp/fock.hpp"

#include <algorithm>
#include <sstream>

namespace ckp {

Monomial::Monomial(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (const auto& [idx, mult] : parts_) {
    if (idx >= 0 || idx % 2 == 0) throw std::invalid_argument("Monomial: indices must be negative odd doubled values");
    if (mult < 1) throw std::invalid_argument("Monomial: multiplicities must be >= 1");
  }
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i - 1].first >= parts_[i].first)
      throw std::invalid_argument("Monomial: parts must be strictly ascending by doubled index");
}

long Monomial::charge() const {
  long c = 0;
  for (const auto& [idx, mult] : parts_) {
    int r = ((-idx) % 4 + 4) % 4;  // -idx = doubled j, positive odd
    c += (r == 1) ? mult : -mult;
  }
  return c;
}

long Monomial::degree_doubled() const {
  long d = 0;
  for (const auto& [idx, mult] : parts_) d += static_cast<long>(-idx) * mult;
  return d;
}

int Monomial::multiplicity(int doubled_index) const {
  for (const auto& [idx, mult] : parts_)
    if (idx == doubled_index) return mult;
  return 0;
}

Monomial Monomial::with_added(int doubled_index) const {
  std::vector<Part> p = parts_;
  auto it = std::lower_bound(p.begin(), p.end(), doubled_index,
                             [](const Part& a, int b) { return a.first < b; });
  if (it != p.end() && it->first == doubled_index)
    ++it->second;
  else
    p.insert(it, {doubled_index, 1});
  Monomial m;
  m.parts_ = std::move(p);
  return m;
}

Monomial Monomial::with_removed(int doubled_index) const {
  std::vector<Part> p = parts_;
  auto it = std::lower_bound(p.begin(), p.end(), doubled_index,
                             [](const Part& a, int b) { return a.first < b; });
  if (it == p.end() || it->first != doubled_index)
    throw std::invalid_argument("Monomial::with_removed: index absent");
  if (--it->second == 0) p.erase(it);
  Monomial m;
  m.parts_ = std::move(p);
  return m;
}

std::string Monomial::str() const {
  if (parts_.empty()) return "|0>";
  std::ostringstream os;
  for (const auto& [idx, mult] : parts_) {
    os << "x(" << idx << "/2)";
    if (mult > 1) os << "^" << mult;
    os << " ";
  }
  os << "|0>";
  return os.str();
}

FockVector::FockVector(Monomial m, Rational c) {
  if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

FockVector FockVector::vacuum() { return FockVector(Monomial{}, 1); }

void FockVector::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

long FockVector::max_degree_doubled() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_doubled());
  return d;
}

bool FockVector::homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_.begin()->first.degree_doubled();
  for (const auto& [m, c] : terms_)
    if (m.degree_doubled() != d) return false;
  return true;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.get_str() << ")*" << m.str();
    first = false;
  }
  return os.str();
}

long charge(const Monomial& m) { return m.charge(); }
long degree_doubled(const Monomial& m) { return m.degree_doubled(); }

FockVector apply_mode(HalfIndex a, const FockVector& v) {
  FockVector out;
  if (a.creation()) {
    for (const auto& [m, c] : v.terms()) out.add_term(m.with_added(a.doubled), c);
    return out;
  }
  // annihilation: contract against the creation index -a with sign (-1)^(a-1/2)
  int sign = (((a.doubled - 1) / 2) % 2 == 0) ? 1 : -1;
  for (const auto& [m, c] : v.terms()) {
    int mult = m.multiplicity(-a.doubled);
    if (mult == 0) continue;
    out.add_term(m.with_removed(-a.doubled), c * mult * sign);
  }
  return out;
}

FockVector normal_ordered_pair(HalfIndex a, HalfIndex b, const FockVector& v) {
  if (a.doubled > 0 && b.doubled < 0) return apply_mode(b, apply_mode(a, v));
  return apply_mode(a, apply_mode(b, v));
}

}  // namespace ckp
