#pragma once

#include <cstdint>
#include <vector>

#include "stabset/limits.hpp"
#include "stabset/lp.hpp"

namespace stabset {

// Facets of conv(points) as primitive inequalities a.x <= b, sorted by
// (coeffs, rhs). The point set must be full-dimensional. Double
// description on the cone {(a,b) : a.v <= b for all v}: extreme rays of
// that cone are exactly the facets of a full-dimensional bounded hull.
// Orientation is forced by validity, so nonnegativity facets come out as
// -x_i <= 0.
std::vector<Inequality> facet_enumeration(
    const std::vector<std::vector<std::int64_t>>& points, int dim,
    const Limits& limits = {});

}  // namespace stabset
