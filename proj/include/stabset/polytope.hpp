#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stabset/facets.hpp"
#include "stabset/graph.hpp"
#include "stabset/invariants.hpp"
#include "stabset/limits.hpp"
#include "stabset/lp.hpp"

namespace stabset {

using Point = std::vector<std::int64_t>;

// V-representation of a full-dimensional 0/1 polytope with a write-once
// facet cache. Copies share the cache; concurrent duplicate computation
// is harmless because the facet list is a pure function of the vertices.
class VPolytope {
 public:
  VPolytope(int dim, std::vector<Point> vertices, std::string source);

  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::string& source() const { return source_; }

  bool facets_cached() const { return cache_->ready.load(std::memory_order_acquire); }
  // Computes facets on first use (may throw GuardError past the facet
  // guard) and caches them.
  const std::vector<Inequality>& facets(const Limits& limits = {}) const;

 private:
  struct FacetCache {
    std::atomic<bool> ready{false};
    std::mutex mu;
    std::vector<Inequality> value;
  };
  int dim_;
  std::vector<Point> vertices_;
  std::string source_;
  std::shared_ptr<FacetCache> cache_;
};

VPolytope stable_set_polytope(const Graph& g, const Limits& limits = {});

// Built directly from matchings of g, coordinates in the canonical edge
// order; coincides with stable_set_polytope(line_graph(g)) vertex for
// vertex.
VPolytope matching_polytope(const Graph& g, const Limits& limits = {});

// Membership x in kP. The public entry dispatches: facet evaluation when
// facets are cached, LP otherwise. The suffixed variants force one path.
bool contains(const VPolytope& p, int k, const Point& x, const Limits& limits = {});
bool contains_lp(const VPolytope& p, int k, const Point& x);
bool contains_facet(const VPolytope& p, int k, const Point& x, const Limits& limits = {});

// Outcome of an interior test. On failure exactly one certificate field
// is populated; on LP-path success `steps` holds the 2n positive maxima
// in direction order +e1, -e1, +e2, -e2, ...
struct InteriorCertificate {
  std::optional<Inequality> tight_facet;  // facet with k*rhs - a.x <= 0
  int blocked_direction = 0;              // +i / -i: max step along +/-e_i is 0
  bool outside = false;                   // x is not in kP at all
  std::vector<Rational> steps;
};

bool interior_contains(const VPolytope& p, int k, const Point& x,
                       InteriorCertificate* cert = nullptr,
                       const Limits& limits = {});
bool interior_contains_lp(const VPolytope& p, int k, const Point& x,
                          InteriorCertificate* cert = nullptr);
bool interior_contains_facet(const VPolytope& p, int k, const Point& x,
                             InteriorCertificate* cert = nullptr,
                             const Limits& limits = {});

// All integer points of kP in lexicographic order. Facet-pruned DFS;
// falls back to per-point membership LPs (tighter guard) when the facet
// path is out of budget.
std::vector<Point> lattice_points(const VPolytope& p, int k,
                                  const Limits& limits = {});

}  // namespace stabset
