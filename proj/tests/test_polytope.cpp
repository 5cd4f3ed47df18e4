#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "stabset/graph.hpp"
#include "stabset/polytope.hpp"

using namespace stabset;

namespace {

Point pt(std::initializer_list<std::int64_t> xs) { return Point(xs); }

// Box scan oracle: every integer point of [0, k]^n that contains_lp accepts.
std::vector<Point> lattice_points_by_scan(const VPolytope& p, int k) {
  std::vector<Point> out;
  Point x(p.dim(), 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == p.dim()) {
      if (contains_lp(p, k, x)) out.push_back(x);
      return;
    }
    for (std::int64_t v = 0; v <= k; ++v) {
      x[j] = v;
      self(self, j + 1);
    }
    x[j] = 0;
  };
  rec(rec, 0);
  return out;  // already lexicographic by construction
}

}  // namespace

TEST_CASE("stable set polytope of the 5-cycle has the 11 indicator vertices") {
  const VPolytope p = stable_set_polytope(Graph::cycle(5));
  CHECK(p.dim() == 5);
  REQUIRE(p.vertices().size() == 11);
  // Sorted, deduplicated, and exactly the stable sets: empty, 5 singletons,
  // 5 non-adjacent pairs.
  CHECK(std::is_sorted(p.vertices().begin(), p.vertices().end()));
  CHECK(p.vertices().front() == pt({0, 0, 0, 0, 0}));
  int singletons = 0;
  int pairs = 0;
  for (const auto& v : p.vertices()) {
    const auto ones = std::count(v.begin(), v.end(), 1);
    if (ones == 1) ++singletons;
    if (ones == 2) ++pairs;
  }
  CHECK(singletons == 5);
  CHECK(pairs == 5);
  CHECK_FALSE(std::binary_search(p.vertices().begin(), p.vertices().end(),
                                 pt({1, 1, 0, 0, 0})));  // edge of the cycle
}

TEST_CASE("matching polytope equals the stable set polytope of the line graph") {
  for (const Graph& g : {Graph::complete(3), Graph::path(4), Graph::cycle(5)}) {
    const VPolytope m = matching_polytope(g);
    const VPolytope s = stable_set_polytope(g.line_graph());
    CHECK(m.dim() == s.dim());
    CHECK(m.vertices() == s.vertices());
  }
  CHECK_THROWS_AS(matching_polytope(Graph::empty(3)), std::invalid_argument);
}

TEST_CASE("membership at fixed dilations") {
  const VPolytope c5 = stable_set_polytope(Graph::cycle(5));
  const Point ones5(5, 1);
  // sum(x) <= 2 is valid for the 5-cycle, so the all-ones point needs k >= 3.
  CHECK_FALSE(contains_lp(c5, 2, ones5));
  CHECK(contains_lp(c5, 3, ones5));
  CHECK(contains_facet(c5, 3, ones5));
  CHECK_FALSE(contains_facet(c5, 2, ones5));

  const VPolytope k3 = stable_set_polytope(Graph::complete(3));
  CHECK_FALSE(contains_lp(k3, 1, pt({1, 1, 0})));
  CHECK(contains_lp(k3, 2, pt({1, 1, 0})));
  CHECK(contains_lp(k3, 1, pt({0, 0, 0})));
  CHECK(contains_lp(k3, 5, pt({0, 0, 0})));

  CHECK_THROWS_AS(contains_lp(k3, 1, pt({0, 0})), std::invalid_argument);
}

TEST_CASE("contains dispatches on the facet cache") {
  const VPolytope fresh = stable_set_polytope(Graph::cycle(5));
  CHECK_FALSE(fresh.facets_cached());
  CHECK(contains(fresh, 3, Point(5, 1)));  // LP path
  CHECK_FALSE(fresh.facets_cached());
  fresh.facets();
  CHECK(fresh.facets_cached());
  CHECK(contains(fresh, 3, Point(5, 1)));  // facet path, same verdict
  CHECK_FALSE(contains(fresh, 2, Point(5, 1)));
}

TEST_CASE("interior certificates") {
  const VPolytope c5 = stable_set_polytope(Graph::cycle(5));
  const Point ones(5, 1);

  SUBCASE("outside point") {
    InteriorCertificate cert;
    CHECK_FALSE(interior_contains_lp(c5, 2, ones, &cert));
    CHECK(cert.outside);
    CHECK(cert.blocked_direction == 0);
    CHECK_FALSE(cert.tight_facet.has_value());
  }

  SUBCASE("boundary point, LP path reports the first blocked direction") {
    InteriorCertificate cert;
    CHECK_FALSE(interior_contains_lp(c5, 2, pt({1, 1, 0, 0, 0}), &cert));
    CHECK(cert.blocked_direction == 1);  // x1 + x2 <= 2 is tight, +e1 blocked
    CHECK_FALSE(cert.outside);

    InteriorCertificate origin_cert;
    CHECK_FALSE(interior_contains_lp(c5, 2, pt({0, 0, 0, 0, 0}), &origin_cert));
    CHECK(origin_cert.blocked_direction == -1);  // x1 >= 0 is tight
  }

  SUBCASE("boundary point, facet path names a tight facet") {
    InteriorCertificate cert;
    CHECK_FALSE(interior_contains_facet(c5, 2, pt({1, 1, 0, 0, 0}), &cert));
    REQUIRE(cert.tight_facet.has_value());
    const Inequality& f = *cert.tight_facet;
    Int lhs = 0;
    for (int j = 0; j < 5; ++j) lhs += f.coeffs[j] * pt({1, 1, 0, 0, 0})[j];
    CHECK(Int(2) * f.rhs - lhs <= 0);
    const auto& fs = c5.facets();
    CHECK(std::find(fs.begin(), fs.end(), f) != fs.end());
  }

  SUBCASE("interior point returns 2n positive steps") {
    InteriorCertificate cert;
    REQUIRE(interior_contains_lp(c5, 3, ones, &cert));
    REQUIRE(cert.steps.size() == 10);
    for (const Rational& s : cert.steps) CHECK(s > 0);
    CHECK(interior_contains_facet(c5, 3, ones));
  }
}

TEST_CASE("interior membership is monotone in the dilation") {
  SplitMix64 rng(2024);
  const Graph g = Graph::cycle(5);
  const VPolytope p = stable_set_polytope(g);
  for (int trial = 0; trial < 20; ++trial) {
    Point x(5);
    for (auto& c : x) c = static_cast<std::int64_t>(rng.next() % 4);
    for (int k = 1; k <= 4; ++k) {
      if (interior_contains_lp(p, k, x)) {
        CHECK(interior_contains_lp(p, k + 1, x));
        CHECK(contains_lp(p, k + 1, x));
      }
      if (contains_lp(p, k, x)) CHECK(contains_lp(p, k + 1, x));
    }
  }
}

TEST_CASE("lattice point enumeration at fixed dilations") {
  Limits limits;

  SUBCASE("single edge") {
    const VPolytope p = stable_set_polytope(Graph::complete(2));
    const auto pts = lattice_points(p, 2, limits);
    const std::vector<Point> expect = {pt({0, 0}), pt({0, 1}), pt({0, 2}),
                                       pt({1, 0}), pt({1, 1}), pt({2, 0})};
    CHECK(pts == expect);
  }

  SUBCASE("triangle, third dilation is the full simplex") {
    const VPolytope p = stable_set_polytope(Graph::complete(3));
    // x >= 0, sum <= 3: C(6, 3) integer points.
    CHECK(lattice_points(p, 3, limits).size() == oracle::binomial(6, 3));
  }

  SUBCASE("5-cycle at k=1 recovers exactly the vertices") {
    const VPolytope p = stable_set_polytope(Graph::cycle(5));
    CHECK(lattice_points(p, 1, limits) == p.vertices());
  }

  SUBCASE("unit square") {
    const VPolytope p = stable_set_polytope(Graph::empty(2));
    CHECK(lattice_points(p, 2, limits).size() == 9);
    CHECK(interior_contains_lp(p, 2, pt({1, 1})));
  }

  SUBCASE("matches the membership box scan") {
    for (const Graph& g : {Graph::path(3), Graph::cycle(4)}) {
      const VPolytope p = stable_set_polytope(g);
      for (int k = 0; k <= 3; ++k)
        CHECK(lattice_points(p, k, limits) == lattice_points_by_scan(p, k));
    }
  }

  SUBCASE("guards") {
    const VPolytope p = stable_set_polytope(Graph::cycle(5));
    CHECK_THROWS_AS(lattice_points(p, -1, limits), std::invalid_argument);
    Limits tight;
    tight.ehrhart_max_n = 4;
    CHECK_THROWS_AS(lattice_points(p, 2, tight), GuardError);
  }
}

TEST_CASE("LP and facet paths agree on membership and interior queries") {
  SplitMix64 rng(555);
  for (const int n : {4, 5, 6}) {
    for (int trial = 0; trial < 8; ++trial) {
      const Graph g = Graph::random(n, Rational(1, 2),
                                    1000 * n + static_cast<std::uint64_t>(trial));
      const VPolytope p = stable_set_polytope(g);
      p.facets();
      for (int k = 1; k <= 3; ++k) {
        CHECK(contains_lp(p, k, Point(n, 1)) == contains_facet(p, k, Point(n, 1)));
        CHECK(interior_contains_lp(p, k, Point(n, 1)) ==
              interior_contains_facet(p, k, Point(n, 1)));
        for (int probe = 0; probe < 6; ++probe) {
          Point x(n);
          for (auto& c : x)
            c = static_cast<std::int64_t>(rng.next() % (k + 2));
          CHECK(contains_lp(p, k, x) == contains_facet(p, k, x));
          CHECK(interior_contains_lp(p, k, x) ==
                interior_contains_facet(p, k, x));
        }
      }
    }
  }
}
