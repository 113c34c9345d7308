#include "ckp/linalg.hpp"

namespace ckp {

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t nrows = m.size(), ncols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t sel = row;
    while (sel < nrows && m[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

long rank(RatMatrix m) { return static_cast<long>(rref(m).size()); }

std::vector<RatRow> exact_kernel(RatMatrix m, int ncols) {
  std::vector<RatRow> basis;
  if (ncols == 0) return basis;
  if (m.empty()) m.push_back(RatRow(ncols, 0));
  std::vector<int> pivots = rref(m);
  std::vector<int> pivot_of_col(ncols, -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
  for (int col = 0; col < ncols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    RatRow v(ncols, 0);
    v[col] = 1;
    for (int c = 0; c < ncols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -m[pivot_of_col[c]][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const std::vector<RatRow>& span, const RatRow& v) {
  RatMatrix m = span;
  long r0 = rank(m);
  m.push_back(v);
  return rank(m) == r0;
}

}  // namespace ckp
