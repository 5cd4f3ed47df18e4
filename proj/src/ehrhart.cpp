#include "stabset/ehrhart.hpp"

#include <stdexcept>

namespace stabset {

namespace {

// C(a, b) for integer a (0 when a < b or b < 0).
Int binom(const Int& a, int b) {
  if (b < 0 || a < b) return 0;
  Int num = 1, den = 1;
  for (int t = 0; t < b; ++t) {
    num *= a - t;
    den *= t + 1;
  }
  return num / den;
}

}  // namespace

EhrhartData ehrhart_h_star(const VPolytope& p, const Limits& limits) {
  const int n = p.dim();
  check_guard(n <= limits.ehrhart_max_n,
              "ehrhart: dimension exceeds ehrhart_max_n=" +
                  std::to_string(limits.ehrhart_max_n));
  EhrhartData data;
  for (int k = 0; k <= n; ++k)
    data.values.push_back(Int(lattice_points(p, k, limits).size()));

  // Exact Lagrange interpolation over the nodes 0..n.
  data.coefficients.assign(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> basis{1};  // product of (x - j) for j != k
    Rational den = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis.push_back(0);
      for (int t = static_cast<int>(basis.size()) - 1; t > 0; --t)
        basis[t] = basis[t - 1] - Rational(j) * basis[t];
      basis[0] = -Rational(j) * basis[0];
      den *= k - j;
    }
    const Rational scale = Rational(data.values[k]) / den;
    for (int t = 0; t <= n; ++t) data.coefficients[t] += scale * basis[t];
  }

  for (int j = 0; j <= n; ++j) {
    Int h = 0;
    for (int i = 0; i <= j; ++i) {
      const Int term = binom(Int(n) + 1, j - i) * data.values[i];
      h += (j - i) % 2 == 0 ? term : -term;
    }
    data.h_star.push_back(h);
  }

  if (data.h_star[0] != 1)
    throw std::logic_error("ehrhart: h*_0 != 1");
  for (const Int& h : data.h_star)
    if (h < 0) throw std::logic_error("ehrhart: negative h* entry");
  // The series identity on the computed window: L(k) = sum_j h*_j C(n+k-j, n).
  for (int k = 0; k <= n; ++k) {
    Int lhs = 0;
    for (int j = 0; j <= n; ++j)
      lhs += data.h_star[j] * binom(Int(n) + k - j, n);
    if (lhs != data.values[k])
      throw std::logic_error("ehrhart: h* series identity failed");
  }
  // Normalized volume: sum h* = n! * leading coefficient.
  Int fact = 1, hsum = 0;
  for (int t = 1; t <= n; ++t) fact *= t;
  for (const Int& h : data.h_star) hsum += h;
  if (Rational(hsum) != Rational(fact) * data.coefficients[n])
    throw std::logic_error("ehrhart: normalized volume mismatch");

  data.degree = 0;
  for (int j = 0; j <= n; ++j)
    if (data.h_star[j] != 0) data.degree = j;
  return data;
}

Rational ehrhart_eval(const std::vector<Rational>& coefficients, const Int& k) {
  Rational v = 0;
  for (int t = static_cast<int>(coefficients.size()) - 1; t >= 0; --t)
    v = v * Rational(k) + coefficients[t];
  return v;
}

Int interior_lattice_point_count(const VPolytope& p, int k, const Limits& limits) {
  const auto& facets = p.facets(limits);
  Int count = 0;
  for (const auto& x : lattice_points(p, k, limits)) {
    bool strict = true;
    for (const auto& f : facets)
      if (Int(k) * f.rhs - dot(f.coeffs, x) <= 0) {
        strict = false;
        break;
      }
    if (strict) ++count;
  }
  return count;
}

}  // namespace stabset
