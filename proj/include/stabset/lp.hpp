#pragma once

#include <vector>

#include "stabset/limits.hpp"
#include "stabset/rational.hpp"

namespace stabset {

// One halfspace a.x <= b with integer data in lowest terms. The canonical
// currency of facet enumeration and certificates.
struct Inequality {
  std::vector<Int> coeffs;
  Int rhs = 0;

  bool operator==(const Inequality& o) const {
    return coeffs == o.coeffs && rhs == o.rhs;
  }
  bool operator<(const Inequality& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return rhs < o.rhs;
  }
  // Divides through by the gcd of all entries. Sign is not touched: the
  // inequality's orientation is part of its meaning.
  void normalize();
  // b - a.x, exact.
  Int slack(const std::vector<std::int64_t>& x) const;
};

enum class Rel { le, eq, ge };

// General linear constraint for the solver; rational data.
struct LinConstraint {
  std::vector<Rational> coeffs;
  Rel rel = Rel::le;
  Rational rhs = 0;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rational optimum = 0;           // meaningful when optimal
  std::vector<Rational> witness;  // primal point, when optimal
};

// Maximizes objective.x subject to the constraints, exactly. nonneg[j]
// marks x_j >= 0; variables not marked are free (split internally).
// Two-phase dense simplex with Bland's rule: deterministic and finite.
// An empty nonneg vector means all variables are free.
LPResult lp_maximize(const std::vector<Rational>& objective,
                     const std::vector<LinConstraint>& constraints,
                     const std::vector<bool>& nonneg = {});

// Feasibility probe: lp_maximize with the zero objective.
LPResult lp_feasible(const std::vector<LinConstraint>& constraints,
                     const std::vector<bool>& nonneg = {});

}  // namespace stabset
