#include "stabset/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabset {

void Inequality::normalize() {
  Int g = 0;
  for (const Int& c : coeffs) g = int_gcd(g, c);
  g = int_gcd(g, rhs);
  if (g == 0) throw std::invalid_argument("inequality: zero functional");
  for (Int& c : coeffs) c /= g;
  rhs /= g;
}

Int Inequality::slack(const std::vector<std::int64_t>& x) const {
  return rhs - dot(coeffs, x);
}

namespace {

// Dense simplex tableau. Rows are equality constraints over the extended
// variable set (split free vars, slacks, artificials); basis columns stay
// identity through pivots.
struct Tableau {
  int rows = 0, cols = 0;
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> rhs;             // per row, kept >= 0
  std::vector<int> basis;                // basic column per row
  std::vector<Rational> z;               // reduced costs
  Rational zval = 0;

  void pivot(int r, int j) {
    const Rational p = a[r][j];
    for (int c = 0; c < cols; ++c) a[r][c] /= p;
    rhs[r] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const Rational f = a[i][j];
      for (int c = 0; c < cols; ++c) a[i][c] -= f * a[r][c];
      rhs[i] -= f * rhs[r];
    }
    if (z[j] != 0) {
      const Rational f = z[j];
      for (int c = 0; c < cols; ++c) z[c] -= f * a[r][c];
      zval += f * rhs[r];
    }
    basis[r] = j;
  }

  void rebuild_objective(const std::vector<Rational>& c) {
    z = c;
    zval = 0;
    for (int r = 0; r < rows; ++r) {
      const Rational f = c[basis[r]];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) z[j] -= f * a[r][j];
      zval += f * rhs[r];
    }
  }

  // Bland's rule; `enterable` masks out columns that may never enter
  // (artificials). Returns optimal or unbounded.
  LPStatus optimize(const std::vector<bool>& enterable) {
    for (long iter = 0;; ++iter) {
      if (iter > 200000)
        throw std::logic_error("simplex: iteration cap hit despite Bland's rule");
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (enterable[j] && z[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LPStatus::optimal;
      int leave = -1;
      Rational best = 0;
      for (int r = 0; r < rows; ++r) {
        if (a[r][enter] <= 0) continue;
        const Rational ratio = rhs[r] / a[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave]))
          {
            leave = r;
            best = ratio;
          }
      }
      if (leave < 0) return LPStatus::unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult lp_maximize(const std::vector<Rational>& objective,
                     const std::vector<LinConstraint>& constraints,
                     const std::vector<bool>& nonneg) {
  const int n = static_cast<int>(objective.size());
  if (!nonneg.empty() && static_cast<int>(nonneg.size()) != n)
    throw std::invalid_argument("lp: nonneg mask length mismatch");
  for (const auto& c : constraints)
    if (static_cast<int>(c.coeffs.size()) != n)
      throw std::invalid_argument("lp: constraint dimension mismatch");

  // Column layout: per original variable one column (nonneg) or a split
  // pair u,w with x = u - w (free); then one slack per inequality row;
  // then one artificial per row.
  std::vector<int> col_of(n), neg_col_of(n, -1);
  int ncols = 0;
  for (int j = 0; j < n; ++j) {
    col_of[j] = ncols++;
    if (nonneg.empty() || !nonneg[j]) neg_col_of[j] = ncols++;
  }
  const int m = static_cast<int>(constraints.size());
  int nslack = 0;
  for (const auto& c : constraints)
    if (c.rel != Rel::eq) ++nslack;
  const int slack0 = ncols;
  const int art0 = ncols + nslack;
  const int total = art0 + m;
  check_guard(static_cast<long>(m + 1) * total <= 8'000'000,
              "lp: tableau exceeds desk-scale guard");

  Tableau t;
  t.rows = m;
  t.cols = total;
  t.a.assign(m, std::vector<Rational>(total, 0));
  t.rhs.assign(m, 0);
  t.basis.assign(m, 0);
  int next_slack = slack0;
  for (int r = 0; r < m; ++r) {
    const auto& c = constraints[r];
    for (int j = 0; j < n; ++j) {
      t.a[r][col_of[j]] = c.coeffs[j];
      if (neg_col_of[j] >= 0) t.a[r][neg_col_of[j]] = -c.coeffs[j];
    }
    if (c.rel == Rel::le)
      t.a[r][next_slack++] = 1;
    else if (c.rel == Rel::ge)
      t.a[r][next_slack++] = -1;
    t.rhs[r] = c.rhs;
    if (t.rhs[r] < 0) {
      for (int j = 0; j < total; ++j) t.a[r][j] = -t.a[r][j];
      t.rhs[r] = -t.rhs[r];
    }
    t.a[r][art0 + r] = 1;
    t.basis[r] = art0 + r;
  }

  std::vector<bool> enterable(total, true);
  for (int j = art0; j < total; ++j) enterable[j] = false;

  // Phase 1: drive the artificials to zero.
  std::vector<Rational> phase1(total, 0);
  for (int j = art0; j < total; ++j) phase1[j] = -1;
  t.rebuild_objective(phase1);
  if (t.optimize(enterable) != LPStatus::optimal)
    throw std::logic_error("simplex: phase 1 unbounded");
  if (t.zval != 0) return {LPStatus::infeasible, 0, {}};

  // Degenerate artificials still in the basis: pivot them out on any real
  // column, or drop the (redundant) row.
  for (int r = t.rows - 1; r >= 0; --r) {
    if (t.basis[r] < art0) continue;
    int j = 0;
    while (j < art0 && t.a[r][j] == 0) ++j;
    if (j < art0) {
      t.pivot(r, j);
    } else {
      t.a.erase(t.a.begin() + r);
      t.rhs.erase(t.rhs.begin() + r);
      t.basis.erase(t.basis.begin() + r);
      --t.rows;
    }
  }

  // Phase 2: the real objective over the split variables.
  std::vector<Rational> phase2(total, 0);
  for (int j = 0; j < n; ++j) {
    phase2[col_of[j]] = objective[j];
    if (neg_col_of[j] >= 0) phase2[neg_col_of[j]] = -objective[j];
  }
  t.rebuild_objective(phase2);
  const LPStatus status = t.optimize(enterable);
  if (status == LPStatus::unbounded) return {LPStatus::unbounded, 0, {}};

  std::vector<Rational> tab_val(total, 0);
  for (int r = 0; r < t.rows; ++r) tab_val[t.basis[r]] = t.rhs[r];
  LPResult res;
  res.status = LPStatus::optimal;
  res.optimum = t.zval;
  res.witness.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    res.witness[j] = tab_val[col_of[j]];
    if (neg_col_of[j] >= 0) res.witness[j] -= tab_val[neg_col_of[j]];
  }
  return res;
}

LPResult lp_feasible(const std::vector<LinConstraint>& constraints,
                     const std::vector<bool>& nonneg) {
  std::size_t n = 0;
  if (!constraints.empty()) n = constraints.front().coeffs.size();
  else if (!nonneg.empty()) n = nonneg.size();
  return lp_maximize(std::vector<Rational>(n, 0), constraints, nonneg);
}

}  // namespace stabset
