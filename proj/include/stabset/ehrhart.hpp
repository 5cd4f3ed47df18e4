#pragma once

#include <vector>

#include "stabset/limits.hpp"
#include "stabset/polytope.hpp"
#include "stabset/rational.hpp"

namespace stabset {

// Ehrhart counts L(0..n), the interpolated polynomial, and the h*-vector.
// Construction self-checks the defining identities and Stanley
// nonnegativity; violations are internal errors, not user errors.
struct EhrhartData {
  std::vector<Int> values;             // L(k), k = 0..n
  std::vector<Rational> coefficients;  // L(k) = sum c_i k^i
  std::vector<Int> h_star;             // h*_0..h*_n
  int degree = 0;                      // max index with h*_i != 0
};

EhrhartData ehrhart_h_star(const VPolytope& p, const Limits& limits = {});

// Evaluates the interpolated polynomial exactly (negative arguments allowed;
// reciprocity tests evaluate at -k).
Rational ehrhart_eval(const std::vector<Rational>& coefficients, const Int& k);

// Number of integer points strictly inside kP (every facet slack positive).
Int interior_lattice_point_count(const VPolytope& p, int k,
                                 const Limits& limits = {});

}  // namespace stabset
