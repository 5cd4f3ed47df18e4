#include "stabset/facets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stabset {

namespace {

// Zero-set bitmask over inserted halfspace indices.
struct Mask {
  std::vector<std::uint64_t> words;
  explicit Mask(int bits) : words((bits + 63) / 64, 0) {}
  void set(int i) { words[i / 64] |= 1ull << (i % 64); }
  bool test(int i) const { return (words[i / 64] >> (i % 64)) & 1; }
};

Mask intersect(const Mask& a, const Mask& b) {
  Mask out = a;
  for (std::size_t w = 0; w < out.words.size(); ++w) out.words[w] &= b.words[w];
  return out;
}

bool subset(const Mask& a, const Mask& b) {
  for (std::size_t w = 0; w < a.words.size(); ++w)
    if (a.words[w] & ~b.words[w]) return false;
  return true;
}

int popcount(const Mask& a) {
  int c = 0;
  for (auto w : a.words) c += std::popcount(w);
  return c;
}

struct Ray {
  std::vector<Int> v;  // length d, primitive
  Mask tight;

  Ray(std::vector<Int> vec, int bits) : v(std::move(vec)), tight(bits) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    if (g > 1)
      for (Int& x : v) x /= g;
  }
};

Int row_dot(const std::vector<Int>& row, const std::vector<Int>& ray) {
  Int s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * ray[i];
  return s;
}

// Lex-greedy maximal independent subset of rows; returns indices, or an
// empty vector when rank < d.
std::vector<int> independent_rows(const std::vector<std::vector<Int>>& rows, int d) {
  std::vector<std::vector<Rational>> echelon;
  std::vector<int> picked;
  for (int idx = 0; idx < static_cast<int>(rows.size()) &&
                    static_cast<int>(picked.size()) < d;
       ++idx) {
    std::vector<Rational> r(d);
    for (int j = 0; j < d; ++j) r[j] = rows[idx][j];
    for (const auto& e : echelon) {
      int lead = 0;
      while (lead < d && e[lead] == 0) ++lead;
      if (lead < d && r[lead] != 0) {
        const Rational f = r[lead] / e[lead];
        for (int j = lead; j < d; ++j) r[j] -= f * e[j];
      }
    }
    bool zero = true;
    for (int j = 0; j < d && zero; ++j) zero = (r[j] == 0);
    if (!zero) {
      echelon.push_back(std::move(r));
      std::sort(echelon.begin(), echelon.end(),
                [d](const auto& a, const auto& b) {
                  for (int j = 0; j < d; ++j) {
                    const bool za = a[j] == 0, zb = b[j] == 0;
                    if (za != zb) return zb;
                    if (j + 1 == d || !za) break;
                  }
                  return false;
                });
      picked.push_back(idx);
    }
  }
  if (static_cast<int>(picked.size()) < d) return {};
  return picked;
}

// Columns of -N^{-1}, cleared to primitive integers: the extreme rays of
// the simplicial cone {y : N y <= 0}.
std::vector<std::vector<Int>> simplicial_rays(
    const std::vector<std::vector<Int>>& nrows, int d) {
  // Gauss-Jordan on [N | -I].
  std::vector<std::vector<Rational>> t(d, std::vector<Rational>(2 * d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) t[i][j] = nrows[i][j];
    t[i][d + i] = -1;
  }
  for (int col = 0; col < d; ++col) {
    int pr = col;
    while (pr < d && t[pr][col] == 0) ++pr;
    if (pr == d) throw std::logic_error("facet enumeration: singular basis");
    std::swap(t[col], t[pr]);
    const Rational p = t[col][col];
    for (int j = 0; j < 2 * d; ++j) t[col][j] /= p;
    for (int i = 0; i < d; ++i) {
      if (i == col || t[i][col] == 0) continue;
      const Rational f = t[i][col];
      for (int j = 0; j < 2 * d; ++j) t[i][j] -= f * t[col][j];
    }
  }
  std::vector<std::vector<Int>> rays;
  for (int c = 0; c < d; ++c) {
    Int lcm = 1;
    for (int i = 0; i < d; ++i) {
      const Int den = rational_den(t[i][d + c]);
      lcm = lcm / int_gcd(lcm, den) * den;
    }
    std::vector<Int> ray(d);
    for (int i = 0; i < d; ++i) {
      const Rational v = t[i][d + c] * Rational(lcm);
      ray[i] = rational_num(v);
    }
    rays.push_back(std::move(ray));
  }
  return rays;
}

}  // namespace

std::vector<Inequality> facet_enumeration(
    const std::vector<std::vector<std::int64_t>>& points, int dim,
    const Limits& limits) {
  check_guard(dim <= limits.facet_max_n,
              "facet enumeration: dimension exceeds facet_max_n=" +
                  std::to_string(limits.facet_max_n));
  if (points.empty())
    throw std::invalid_argument("facet enumeration: empty point set");
  const int d = dim + 1;

  // One halfspace (v, -1).y <= 0 per distinct point, in lex point order.
  std::vector<std::vector<std::int64_t>> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::vector<Int>> rows;
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("facet enumeration: point dimension mismatch");
    std::vector<Int> row(d);
    for (int j = 0; j < dim; ++j) row[j] = p[j];
    row[dim] = -1;
    rows.push_back(std::move(row));
  }
  const int m = static_cast<int>(rows.size());

  const std::vector<int> base = independent_rows(rows, d);
  if (base.empty())
    throw std::invalid_argument("facet enumeration: point set not full-dimensional");

  std::vector<std::vector<Int>> nrows;
  for (int idx : base) nrows.push_back(rows[idx]);
  std::vector<bool> in_base(m, false);
  for (int idx : base) in_base[idx] = true;

  std::vector<Ray> rays;
  for (auto& rv : simplicial_rays(nrows, d)) {
    Ray ray(std::move(rv), m);
    for (int idx : base) {
      const Int s = row_dot(rows[idx], ray.v);
      if (s == 0) ray.tight.set(idx);
      else if (s > 0) throw std::logic_error("facet enumeration: bad initial ray");
    }
    rays.push_back(std::move(ray));
  }

  for (int t = 0; t < m; ++t) {
    if (in_base[t]) continue;
    std::vector<Int> val(rays.size());
    bool any_pos = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = row_dot(rows[t], rays[i].v);
      if (val[i] > 0) any_pos = true;
    }
    if (!any_pos) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].tight.set(t);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] <= 0) {
        next.push_back(rays[i]);
        if (val[i] == 0) next.back().tight.set(t);
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        // Adjacency: no third ray is tight on everything both are tight on.
        const Mask common = intersect(rays[i].tight, rays[j].tight);
        if (popcount(common) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != i && k != j && subset(common, rays[k].tight)) adjacent = false;
        if (!adjacent) continue;
        std::vector<Int> comb(d);
        for (int c = 0; c < d; ++c)
          comb[c] = val[i] * rays[j].v[c] - val[j] * rays[i].v[c];
        Ray nr(std::move(comb), m);
        nr.tight = common;
        nr.tight.set(t);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<Inequality> out;
  for (const auto& r : rays) {
    Inequality ineq;
    ineq.coeffs.assign(r.v.begin(), r.v.end() - 1);
    ineq.rhs = r.v.back();
    ineq.normalize();
    out.push_back(std::move(ineq));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace stabset
