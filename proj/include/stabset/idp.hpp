#pragma once

#include <optional>

#include "stabset/hnf.hpp"
#include "stabset/limits.hpp"
#include "stabset/polytope.hpp"

namespace stabset {

// True iff the vertex differences generate Z^dim (Hermite form has full
// rank and unit lattice index). For 0/1 polytopes the vertex set equals
// the lattice-point set, so this is the spanning property.
bool lattice_spanning(const VPolytope& p);

// Bounded integer-decomposition check: every lattice point of kP must be
// a sum of k lattice points of P, for k = 2..checked_up_to. Not a full
// IDP certificate; `pass` only covers the checked window.
struct IdpReport {
  bool pass = false;
  int checked_up_to = 0;
  std::optional<int> failing_k;
  std::optional<Point> failing_point;  // lexicographically first failure
};

IdpReport is_idp_up_to(const VPolytope& p, int k_max, const Limits& limits = {});

}  // namespace stabset
