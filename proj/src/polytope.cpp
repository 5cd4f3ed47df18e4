#include "stabset/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabset {

VPolytope::VPolytope(int dim, std::vector<Point> vertices, std::string source)
    : dim_(dim),
      vertices_(std::move(vertices)),
      source_(std::move(source)),
      cache_(std::make_shared<FacetCache>()) {
  if (vertices_.empty()) throw std::invalid_argument("polytope: no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  for (const auto& v : vertices_)
    if (static_cast<int>(v.size()) != dim_)
      throw std::invalid_argument("polytope: vertex dimension mismatch");
}

const std::vector<Inequality>& VPolytope::facets(const Limits& limits) const {
  if (!cache_->ready.load(std::memory_order_acquire)) {
    auto computed = facet_enumeration(vertices_, dim_, limits);
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->ready.load(std::memory_order_relaxed)) {
      cache_->value = std::move(computed);
      cache_->ready.store(true, std::memory_order_release);
    }
  }
  return cache_->value;
}

VPolytope stable_set_polytope(const Graph& g, const Limits& limits) {
  return VPolytope(g.vertex_count(), stable_set_indicators(g, limits),
                   "stable_set(" + g.label() + ")");
}

VPolytope matching_polytope(const Graph& g, const Limits& limits) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("matching polytope: graph has no edges");
  check_guard(g.edge_count() <= limits.max_n,
              "matching enumeration: edge count exceeds max_n=" +
                  std::to_string(limits.max_n));
  const int m = g.edge_count();
  const auto& edges = g.edges();
  // DFS over edges in canonical order, skip before take: indicator
  // vectors arrive in lexicographic order, mirroring the stable-set
  // enumeration of the line graph.
  std::vector<Point> matchings;
  Point cur(m, 0);
  std::uint64_t used_vertices = 0;
  auto dfs = [&](auto&& self, int e) -> void {
    if (e == m) {
      matchings.push_back(cur);
      return;
    }
    cur[e] = 0;
    self(self, e + 1);
    const std::uint64_t ends = (1ull << (edges[e].first - 1)) |
                               (1ull << (edges[e].second - 1));
    if (!(used_vertices & ends)) {
      cur[e] = 1;
      used_vertices |= ends;
      self(self, e + 1);
      used_vertices &= ~ends;
      cur[e] = 0;
    }
  };
  dfs(dfs, 0);
  return VPolytope(m, std::move(matchings), "matching(" + g.label() + ")");
}

namespace {

void require_dim(const VPolytope& p, const Point& x) {
  if (static_cast<int>(x.size()) != p.dim())
    throw std::invalid_argument("polytope query: point dimension mismatch");
}

// Convex-combination rows: sum(lambda) = 1 and (k V)^T lambda = x, with an
// optional extra step variable epsilon moving x along direction d.
std::vector<LinConstraint> membership_rows(const VPolytope& p, int k,
                                           const Point& x, const int* direction) {
  const int n = p.dim();
  const int nv = static_cast<int>(p.vertices().size());
  const int cols = nv + (direction ? 1 : 0);
  std::vector<LinConstraint> rows;
  for (int j = 0; j < n; ++j) {
    LinConstraint c;
    c.coeffs.assign(cols, 0);
    for (int v = 0; v < nv; ++v)
      c.coeffs[v] = Rational(k) * p.vertices()[v][j];
    if (direction) {
      const int dir = *direction;
      if (std::abs(dir) - 1 == j) c.coeffs[nv] = dir > 0 ? -1 : 1;
    }
    c.rel = Rel::eq;
    c.rhs = x[j];
    rows.push_back(std::move(c));
  }
  LinConstraint sum;
  sum.coeffs.assign(cols, 1);
  if (direction) sum.coeffs[nv] = 0;
  sum.rel = Rel::eq;
  sum.rhs = 1;
  rows.push_back(std::move(sum));
  return rows;
}

}  // namespace

bool contains_lp(const VPolytope& p, int k, const Point& x) {
  require_dim(p, x);
  const auto rows = membership_rows(p, k, x, nullptr);
  const std::vector<bool> nonneg(p.vertices().size(), true);
  return lp_feasible(rows, nonneg).status == LPStatus::optimal;
}

bool contains_facet(const VPolytope& p, int k, const Point& x,
                    const Limits& limits) {
  require_dim(p, x);
  for (const auto& f : p.facets(limits))
    if (Int(k) * f.rhs - dot(f.coeffs, x) < 0) return false;
  return true;
}

bool contains(const VPolytope& p, int k, const Point& x, const Limits& limits) {
  return p.facets_cached() ? contains_facet(p, k, x, limits)
                           : contains_lp(p, k, x);
}

bool interior_contains_lp(const VPolytope& p, int k, const Point& x,
                          InteriorCertificate* cert) {
  require_dim(p, x);
  if (cert) *cert = {};
  if (!contains_lp(p, k, x)) {
    if (cert) cert->outside = true;
    return false;
  }
  const int nv = static_cast<int>(p.vertices().size());
  std::vector<Rational> objective(nv + 1, 0);
  objective[nv] = 1;
  const std::vector<bool> nonneg(nv + 1, true);
  std::vector<Rational> steps;
  for (int j = 1; j <= p.dim(); ++j) {
    for (const int dir : {j, -j}) {
      const auto rows = membership_rows(p, k, x, &dir);
      const LPResult r = lp_maximize(objective, rows, nonneg);
      // x is in kP, so epsilon = 0 is feasible and the maximum exists.
      if (r.status != LPStatus::optimal)
        throw std::logic_error("interior test: directional LP not optimal");
      if (r.optimum == 0) {
        if (cert) {
          *cert = {};
          cert->blocked_direction = dir;
        }
        return false;
      }
      steps.push_back(r.optimum);
    }
  }
  if (cert) cert->steps = std::move(steps);
  return true;
}

bool interior_contains_facet(const VPolytope& p, int k, const Point& x,
                             InteriorCertificate* cert, const Limits& limits) {
  require_dim(p, x);
  if (cert) *cert = {};
  for (const auto& f : p.facets(limits))
    if (Int(k) * f.rhs - dot(f.coeffs, x) <= 0) {
      if (cert) cert->tight_facet = f;
      return false;
    }
  return true;
}

bool interior_contains(const VPolytope& p, int k, const Point& x,
                       InteriorCertificate* cert, const Limits& limits) {
  return p.facets_cached() ? interior_contains_facet(p, k, x, cert, limits)
                           : interior_contains_lp(p, k, x, cert);
}

std::vector<Point> lattice_points(const VPolytope& p, int k,
                                  const Limits& limits) {
  check_guard(p.dim() <= limits.ehrhart_max_n,
              "lattice points: dimension exceeds ehrhart_max_n=" +
                  std::to_string(limits.ehrhart_max_n));
  if (k < 0) throw std::invalid_argument("lattice points: negative dilation");
  const int n = p.dim();
  std::vector<std::int64_t> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    std::int64_t mn = p.vertices()[0][j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = k * mn;
    hi[j] = k * mx;
  }

  const std::vector<Inequality>* facets = nullptr;
  try {
    facets = &p.facets(limits);
  } catch (const GuardError&) {
    check_guard(n <= 5,
                "lattice points: no facets within budget and dimension > 5");
  }

  std::vector<Point> out;
  Point x(n, 0);
  if (!facets) {
    // LP fallback: scan the bounding box, one membership LP per point.
    auto scan = [&](auto&& self, int j) -> void {
      if (j == n) {
        if (contains_lp(p, k, x)) out.push_back(x);
        return;
      }
      for (std::int64_t v = lo[j]; v <= hi[j]; ++v) {
        x[j] = v;
        self(self, j + 1);
      }
      x[j] = lo[j];
    };
    scan(scan, 0);
    return out;
  }

  // Facet-pruned DFS: a partial assignment dies when some facet cannot be
  // satisfied even with the most favorable free coordinates.
  const auto& fs = *facets;
  auto dfs = [&](auto&& self, int j) -> void {
    for (const auto& f : fs) {
      Int bound = 0;
      for (int t = 0; t < j; ++t) bound += f.coeffs[t] * x[t];
      for (int t = j; t < n; ++t)
        bound += f.coeffs[t] * (f.coeffs[t] > 0 ? lo[t] : hi[t]);
      if (bound > Int(k) * f.rhs) return;
    }
    if (j == n) {
      out.push_back(x);
      return;
    }
    for (std::int64_t v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      self(self, j + 1);
    }
    x[j] = lo[j];
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace stabset
