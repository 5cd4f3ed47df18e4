#include <doctest.h>

#include "stabset/graph.hpp"
#include "stabset/regularity.hpp"

using namespace stabset;

TEST_CASE("perfect graph: bounds collapse to an exact value") {
  const RegularityReport r = regularity_bounds(Graph::complete(4));
  CHECK(r.perfect);
  CHECK(r.omega == 4);
  CHECK(r.chi == 4);
  CHECK(r.lower_bound == 0);
  CHECK(r.conditional_upper == 0);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 0);
  CHECK(r.spanning);
  CHECK(r.idp_status == "pass");
  CHECK(r.degree == 0);
}

TEST_CASE("path: exact regularity n - chi with positive value") {
  const RegularityReport r = regularity_bounds(Graph::path(5));
  CHECK(r.perfect);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 3);  // n=5, chi=2
  CHECK(r.lower_bound == 3);
  CHECK(r.conditional_upper == 3);
}

TEST_CASE("5-cycle: strict window, no exact value") {
  const RegularityReport r = regularity_bounds(Graph::cycle(5));
  CHECK_FALSE(r.perfect);
  CHECK(r.lower_bound == 2);       // n - chi = 5 - 3
  CHECK(r.conditional_upper == 3); // n - omega = 5 - 2
  CHECK_FALSE(r.exact.has_value());
  CHECK(r.spanning);
  CHECK(r.idp_status == "pass");  // bounded window only
  CHECK(r.degree == 3);
  CHECK(r.lower_bound <= r.degree);
  CHECK(r.degree <= r.conditional_upper);
}

TEST_CASE("degree sits inside the window whenever the polytope spans") {
  for (const Graph& g : {Graph::cycle(7), Graph::complete(3), Graph::empty(4),
                         Graph::disjoint_union(Graph::cycle(5), Graph::complete(2))}) {
    const RegularityReport r = regularity_bounds(g);
    CHECK(r.spanning);
    CHECK(r.lower_bound <= r.conditional_upper);
    CHECK(r.lower_bound <= r.degree);
    CHECK(r.degree <= r.conditional_upper);
    CHECK(r.degree == r.n + 1 - r.codeg_report.codeg);
  }
}

TEST_CASE("large imperfect join: IDP evidence inconclusive at default guards") {
  // 10 dimensions exceeds the default lattice-point guard, so the bounded
  // decomposition check cannot run; the report must say so rather than
  // assert an upper bound unconditionally.
  const Graph g = Graph::disjoint_union(Graph::cycle(5), Graph::cycle(5)).complemented();
  const RegularityReport r = regularity_bounds(g);
  CHECK_FALSE(r.perfect);
  CHECK(r.lower_bound == 4);        // n - chi = 10 - 6
  CHECK(r.conditional_upper == 6);  // n - omega = 10 - 4
  CHECK(r.idp_status == "inconclusive");
  CHECK_FALSE(r.idp_detail.empty());
  CHECK_FALSE(r.exact.has_value());
}
