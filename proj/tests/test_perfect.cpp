#include <doctest.h>

#include "oracle.hpp"
#include "stabset/graph.hpp"
#include "stabset/perfect.hpp"
#include "stabset/sweep.hpp"

using namespace stabset;

TEST_CASE("odd holes are found and validated") {
  Limits limits;
  for (int len : {5, 7, 9}) {
    const Graph g = Graph::cycle(len);
    const auto hole = find_odd_hole(g, limits);
    REQUIRE(static_cast<int>(hole.size()) == len);
    CHECK(is_odd_hole(g, hole));
  }
  // Even cycles and chorded cycles have no odd hole.
  CHECK(find_odd_hole(Graph::cycle(6), limits).empty());
  CHECK(find_odd_hole(Graph::cycle(4), limits).empty());
  Graph chorded(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}});
  CHECK(find_odd_hole(chorded, limits).empty());
}

TEST_CASE("holes inside larger graphs are located") {
  Limits limits;
  // C5 with a pendant and an apex vertex dominating everything keeps the
  // hole induced.
  Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {5, 6},
              {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7}});
  const auto hole = find_odd_hole(g, limits);
  REQUIRE(hole.size() == 5);
  CHECK(is_odd_hole(g, hole));
}

TEST_CASE("antiholes are reported on the complement side") {
  Limits limits;
  const auto cert = is_perfect(Graph::cycle(7).complemented(), limits);
  CHECK(!cert.perfect);
  CHECK(cert.odd_hole.empty());
  REQUIRE(cert.odd_antihole.size() == 7);
  CHECK(is_odd_hole(Graph::cycle(7).complemented().complemented(),
                    cert.odd_antihole));
}

TEST_CASE("classic perfect families pass the recognizer") {
  Limits limits;
  CHECK(is_perfect(Graph::complete(7), limits).perfect);
  CHECK(is_perfect(Graph::cycle(6), limits).perfect);
  CHECK(is_perfect(Graph::path(8), limits).perfect);
  CHECK(is_perfect(Graph::complete_multipartite({3, 2, 2}), limits).perfect);
  CHECK(is_perfect(Graph::empty(5), limits).perfect);
  // Line graph of a bipartite-ish small graph: L(P5) is a path, perfect.
  CHECK(is_perfect(Graph::path(5).line_graph(), limits).perfect);
}

TEST_CASE("recognizer matches the induced-subgraph definition") {
  Limits limits;
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      // No room for a hole or antihole below 5 vertices.
      CHECK(is_perfect(g, limits).perfect);
      CHECK(oracle::perfect_by_definition(g));
    }
  for (int n = 5; n <= 6; ++n)
    for (const auto& g : random_graph_family(n, 60, 999 + n)) {
      const auto cert = is_perfect(g, limits);
      CHECK(cert.perfect == oracle::perfect_by_definition(g));
      if (!cert.perfect) {
        if (!cert.odd_hole.empty()) CHECK(is_odd_hole(g, cert.odd_hole));
        if (!cert.odd_antihole.empty())
          CHECK(is_odd_hole(g.complemented(), cert.odd_antihole));
      }
    }
}

TEST_CASE("hole validator rejects non-holes") {
  const Graph g = Graph::cycle(6);
  CHECK(!is_odd_hole(g, {1, 2, 3, 4, 5, 6}));  // even
  CHECK(!is_odd_hole(g, {1, 2, 3}));           // too short
  CHECK(!is_odd_hole(g, {1, 2, 3, 4, 6}));     // not a cycle
}
