#include <doctest.h>

#include <cstdint>
#include <vector>

#include "oracle.hpp"
#include "stabset/codegree.hpp"
#include "stabset/graph.hpp"
#include "stabset/invariants.hpp"
#include "stabset/polytope.hpp"
#include "stabset/sweep.hpp"

using namespace stabset;

namespace {

Limits lp_only() {
  Limits l;
  l.facet_max_n = -1;  // force the directional-LP scan inside codegree_exact
  return l;
}

}  // namespace

TEST_CASE("fixed graphs") {
  SUBCASE("5-cycle") {
    const CodegreeReport r = codegree_exact(Graph::cycle(5));
    CHECK(r.codeg == 3);
    CHECK(r.omega_plus_1 == 3);
    CHECK(r.chi_plus_1 == 4);
    CHECK(r.degree == 3);
    CHECK(r.triple_class == TripleClass::iii);
    CHECK(r.witness_k == 3);
  }
  SUBCASE("complete graphs: codeg n+1, degree 0") {
    for (int n = 1; n <= 6; ++n) {
      const CodegreeReport r = codegree_exact(Graph::complete(n));
      CHECK(r.codeg == n + 1);
      CHECK(r.degree == 0);
      CHECK(r.triple_class == TripleClass::i);
    }
  }
  SUBCASE("line graph of K5") {
    const Graph g = Graph::complete(5).line_graph();
    const CodegreeReport r = codegree_exact(g);
    CHECK(r.n == 10);
    CHECK(r.omega_plus_1 == 5);
    CHECK(r.codeg == 6);
    CHECK(r.chi_plus_1 == 6);
    CHECK(r.triple_class == TripleClass::ii);
  }
  SUBCASE("join of two 5-cycles: both additivity patterns break") {
    const Graph g = Graph::join(Graph::cycle(5), Graph::cycle(5));
    const CodegreeReport r = codegree_exact(g);
    CHECK(r.omega_plus_1 == 5);
    CHECK(r.codeg == 6);
    CHECK(r.chi_plus_1 == 7);
    CHECK(r.degree == 5);  // not 3 + 3; codeg is not 3 + 3 - 1 either
    CHECK(r.triple_class == TripleClass::iv);
  }
}

TEST_CASE("sandwich and degree identities on all labeled graphs up to 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      const CodegreeReport r = codegree_exact(g);
      CHECK(r.omega_plus_1 <= r.codeg);
      CHECK(r.codeg <= r.chi_plus_1);
      CHECK(r.degree == n + 1 - r.codeg);
      CHECK(0 <= r.degree);
      CHECK(r.degree <= n - 1);
      CHECK(classify_triple(r.omega_plus_1, r.codeg, r.chi_plus_1) ==
            r.triple_class);
    }
  }
}

TEST_CASE("facet and LP scans agree") {
  for (const Graph& g : {Graph::cycle(5), Graph::cycle(7), Graph::complete(4),
                         Graph::complete(4).line_graph(),
                         Graph::join(Graph::cycle(5), Graph::complete(2))}) {
    const CodegreeReport lp = codegree_exact(g, lp_only());
    const CodegreeReport facet = codegree_exact(g);
    CHECK(lp.codeg == facet.codeg);
    CHECK(lp.method == CodegreeMethod::exact_lp);
    CHECK(facet.method == CodegreeMethod::exact_facet);
    // LP path records the 2n positive directional steps at the witness k.
    CHECK(lp.interior_steps.size() == 2u * static_cast<unsigned>(lp.n));
    for (const Rational& s : lp.interior_steps) CHECK(s > 0);
  }
}

TEST_CASE("matching formula and the odd-set oracle") {
  SUBCASE("complete graphs") {
    // K5: max degree 4 (even), the attaining component is complete: 6.
    CHECK(codegree_matching_formula(Graph::complete(5)).codeg == 6);
    CHECK(codegree_matching_edmonds(Graph::complete(5)).codeg == 6);
    // K4: max degree 3 (odd): 4.
    CHECK(codegree_matching_formula(Graph::complete(4)).codeg == 4);
  }
  SUBCASE("even cycle") {
    CHECK(codegree_matching_formula(Graph::cycle(6)).codeg == 3);
    CHECK(codegree_matching_edmonds(Graph::cycle(6)).codeg == 3);
  }
  SUBCASE("triangle plus a path: only one max-degree component is complete") {
    // Both components have max degree 2, the triangle is complete, so the
    // bump applies even though the path is not complete.
    const Graph g = Graph::disjoint_union(Graph::complete(3), Graph::path(3));
    CHECK(codegree_matching_formula(g).codeg == 4);
    CHECK(codegree_matching_edmonds(g).codeg == 4);
    CHECK(codegree_exact(g.line_graph(), lp_only()).codeg == 4);
    CHECK(codegree_exact(g.line_graph()).codeg == 4);
  }
  SUBCASE("disjoint complete graphs take the larger value") {
    const Graph g = Graph::disjoint_union(Graph::complete(5), Graph::complete(4));
    CHECK(codegree_matching_formula(g).codeg == 6);
    CHECK(codegree_matching_edmonds(g).codeg == 6);
  }
  SUBCASE("three-way agreement on small graphs with edges") {
    for (int n = 2; n <= 4; ++n) {
      for (const Graph& g : all_labeled_graphs(n)) {
        if (g.edge_count() == 0) continue;
        const int formula = codegree_matching_formula(g).codeg;
        const int edmonds = codegree_matching_edmonds(g).codeg;
        const int exact = codegree_exact(g.line_graph(), lp_only()).codeg;
        CHECK(formula == edmonds);
        CHECK(formula == exact);
      }
    }
  }
}

TEST_CASE("codegree of a disjoint union is the maximum over components") {
  // The stable set polytope of a disjoint union is a product, so the
  // all-ones point is interior to k * P exactly when it is interior on
  // every factor.
  for (const auto& [a, b] : std::vector<std::pair<Graph, Graph>>{
           {Graph::cycle(3), Graph::path(2)},
           {Graph::complete(4), Graph::empty(2)},
           {Graph::cycle(4), Graph::complete(3)}}) {
    const int whole = codegree_exact(Graph::disjoint_union(a, b)).codeg;
    const int parts = std::max(codegree_exact(a).codeg, codegree_exact(b).codeg);
    CHECK(whole == parts);
  }
}

TEST_CASE("auto dispatch") {
  SUBCASE("perfect graph") {
    const CodegreeReport r = codegree_auto(Graph::complete(4));
    CHECK(r.method == CodegreeMethod::perfect_formula);
    CHECK(r.codeg == 5);
  }
  SUBCASE("h-perfect odd cycle") {
    const CodegreeReport r = codegree_auto(Graph::cycle(5));
    CHECK(r.method == CodegreeMethod::h_perfect_formula);
    CHECK(r.codeg == 3);
  }
  SUBCASE("declared h-perfect skips the census") {
    const CodegreeReport r = codegree_auto(Graph::cycle(7), {}, true);
    CHECK(r.method == CodegreeMethod::h_perfect_formula);
    CHECK(r.codeg == 3);
  }
  SUBCASE("line graph routes to the matching formula") {
    const CodegreeReport r = codegree_auto(Graph::complete(5).line_graph());
    CHECK(r.method == CodegreeMethod::matching_formula);
    CHECK(r.codeg == 6);
  }
  SUBCASE("auto equals exact on sampled graphs") {
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 4 + trial % 3;
      const Graph g = Graph::random(n, Rational(1, 2),
                                    4100 + static_cast<std::uint64_t>(trial));
      CHECK(codegree_auto(g).codeg == codegree_exact(g, lp_only()).codeg);
    }
  }
}

TEST_CASE("blocking certificate explains k = codeg - 1") {
  SUBCASE("facet path: odd cycle blocked by a tight valid inequality") {
    const CodegreeReport r = codegree_exact(Graph::cycle(5));
    CHECK(r.blocking.k == 2);
    REQUIRE((r.blocking.kind == BlockKind::facet ||
             r.blocking.kind == BlockKind::valid_inequality ||
             r.blocking.kind == BlockKind::outside));
    if (r.blocking.kind == BlockKind::facet ||
        r.blocking.kind == BlockKind::valid_inequality) {
      // Validity over all vertices and tightness/violation at all-ones.
      const VPolytope p = stable_set_polytope(Graph::cycle(5));
      const auto& ineq = r.blocking.inequality;
      for (const Point& v : p.vertices()) {
        Int lhs = 0;
        for (int j = 0; j < 5; ++j) lhs += ineq.coeffs[j] * v[j];
        CHECK(lhs <= ineq.rhs);
      }
      Int at_ones = 0;
      for (int j = 0; j < 5; ++j) at_ones += ineq.coeffs[j];
      CHECK(at_ones >= Int(2) * ineq.rhs);
    }
  }
  SUBCASE("LP path on complete graphs") {
    const CodegreeReport r = codegree_exact(Graph::complete(3), lp_only());
    CHECK(r.blocking.k == 3);
    CHECK((r.blocking.kind == BlockKind::zero_direction ||
           r.blocking.kind == BlockKind::outside));
  }
}

TEST_CASE("triple classification") {
  CHECK(classify_triple(4, 4, 4) == TripleClass::i);
  CHECK(classify_triple(5, 6, 6) == TripleClass::ii);
  CHECK(classify_triple(3, 3, 4) == TripleClass::iii);
  CHECK(classify_triple(5, 6, 7) == TripleClass::iv);
  CHECK(triple_class_name(TripleClass::iii) == "iii");
  CHECK(method_name(CodegreeMethod::matching_formula) == "matching_formula");
}
