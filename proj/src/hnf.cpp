#include "stabset/hnf.hpp"

#include <stdexcept>
#include <utility>

namespace stabset {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HNFResult hermite_normal_form(const std::vector<std::vector<Int>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m ? static_cast<int>(rows[0].size()) : 0;
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("hnf: ragged matrix");

  HNFResult res;
  res.h = rows;
  res.u.assign(m, std::vector<Int>(m, 0));
  for (int i = 0; i < m; ++i) res.u[i][i] = 1;

  auto row_sub = [&](int target, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < n; ++j) res.h[target][j] -= q * res.h[src][j];
    for (int j = 0; j < m; ++j) res.u[target][j] -= q * res.u[src][j];
  };
  auto row_swap = [&](int a, int b) {
    if (a == b) return;
    std::swap(res.h[a], res.h[b]);
    std::swap(res.u[a], res.u[b]);
  };
  auto row_negate = [&](int r) {
    for (int j = 0; j < n; ++j) res.h[r][j] = -res.h[r][j];
    for (int j = 0; j < m; ++j) res.u[r][j] = -res.u[r][j];
  };

  int r = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && r < m; ++col) {
    // Euclidean elimination below row r in this column.
    for (;;) {
      int best = -1;
      for (int i = r; i < m; ++i) {
        if (res.h[i][col] == 0) continue;
        if (best < 0 || abs(res.h[i][col]) < abs(res.h[best][col])) best = i;
      }
      if (best < 0) break;  // column is zero below r
      row_swap(r, best);
      bool cleared = true;
      for (int i = r + 1; i < m; ++i) {
        if (res.h[i][col] == 0) continue;
        row_sub(i, r, floor_div(res.h[i][col], res.h[r][col]));
        if (res.h[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (res.h[r][col] == 0) continue;
    if (res.h[r][col] < 0) row_negate(r);
    for (int i = 0; i < r; ++i)
      row_sub(i, r, floor_div(res.h[i][col], res.h[r][col]));
    pivot_col.push_back(col);
    ++r;
  }
  res.rank = r;
  if (res.rank == n) {
    res.lattice_index = 1;
    for (int i = 0; i < n; ++i) res.lattice_index *= res.h[i][pivot_col[i]];
  }
  return res;
}

}  // namespace stabset
