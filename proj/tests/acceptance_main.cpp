// Acceptance gate: one line per criterion, exit code = number of failures.
// Every asserted quantity is integer-valued and computed exactly, so each
// comparison is == with zero tolerance.

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stabset/codegree.hpp"
#include "stabset/ehrhart.hpp"
#include "stabset/graph.hpp"
#include "stabset/hperfect.hpp"
#include "stabset/idp.hpp"
#include "stabset/invariants.hpp"
#include "stabset/perfect.hpp"
#include "stabset/polytope.hpp"
#include "stabset/regularity.hpp"
#include "stabset/sweep.hpp"

using namespace stabset;

namespace {

using Failures = std::vector<std::string>;

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

Limits lp_only() {
  Limits l;
  l.facet_max_n = -1;
  return l;
}

std::string point_str(const Point& x) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i];
  out << ")";
  return out.str();
}

// Deterministic supply of recognizer-verified perfect graphs on 4..7
// vertices (criteria 6 and 7 share it).
std::vector<Graph> seeded_perfect_graphs(int count) {
  std::vector<Graph> out;
  std::uint64_t seed = 1;
  while (static_cast<int>(out.size()) < count && seed < 4000) {
    const int n = 4 + static_cast<int>(seed % 4);
    const Graph g = Graph::random(n, Rational(1, 2), 60000 + seed);
    ++seed;
    if (is_perfect(g).perfect) out.push_back(g);
  }
  return out;
}

// --- criterion 1: fixed examples ---------------------------------------

Failures criterion_fixtures() {
  Failures f;

  const CodegreeReport c5 = codegree_exact(Graph::cycle(5));
  expect(f, c5.codeg == 3, "C5: codeg != 3");
  expect(f, c5.degree == 3, "C5: degree != 3");

  const Graph lk5 = Graph::complete(5).line_graph();
  const CodegreeReport lk5r = codegree_exact(lk5);
  expect(f, lk5r.codeg == 6, "L(K5): codeg != 6");
  expect(f, lk5r.omega_plus_1 == 5, "L(K5): omega+1 != 5");
  expect(f, lk5r.chi_plus_1 == 6, "L(K5): chi+1 != 6");

  const Graph big = Graph::join(Graph::cycle(5), lk5);
  expect(f, big.vertex_count() == 15, "join(C5,L(K5)): n != 15");
  const CodegreeReport bigr = codegree_exact(big);
  expect(f, bigr.codeg == 8, "join(C5,L(K5)): codeg != 8");
  expect(f, bigr.omega_plus_1 == 7, "join(C5,L(K5)): omega != 6");
  expect(f, bigr.chi_plus_1 == 9, "join(C5,L(K5)): chi != 8");

  const CodegreeReport jj = codegree_exact(Graph::join(Graph::cycle(5), Graph::cycle(5)));
  expect(f, jj.degree == 5, "join(C5,C5): degree != 5");
  expect(f, jj.codeg == 6, "join(C5,C5): codeg != 6");
  expect(f, jj.omega_plus_1 == 5, "join(C5,C5): omega != 4");
  expect(f, jj.chi_plus_1 == 7, "join(C5,C5): chi != 6");
  // Additivity failure under join: neither invariant is additive here.
  expect(f, jj.degree != 3 + 3, "join(C5,C5): degree accidentally additive");
  expect(f, jj.codeg != 3 + 3 - 1, "join(C5,C5): codeg accidentally 3+3-1");

  return f;
}

// --- criterion 2: sandwich sweep ----------------------------------------

Failures criterion_sandwich() {
  Failures f;
  auto check_one = [&](const Graph& g) {
    const CodegreeReport r = codegree_exact(g);
    if (!(r.omega_plus_1 <= r.codeg && r.codeg <= r.chi_plus_1)) {
      f.push_back("sandwich violated on " + g.label());
      return;
    }
    if (is_perfect(g).perfect &&
        !(r.omega_plus_1 == r.codeg && r.codeg == r.chi_plus_1))
      f.push_back("perfect graph without equality: " + g.label());
  };
  for (const Graph& g : all_labeled_graphs(5)) check_one(g);
  for (const Graph& g : random_graph_family(6, 250, 20000)) check_one(g);
  for (const Graph& g : random_graph_family(7, 250, 30000)) check_one(g);
  return f;
}

// --- criterion 3: matching three-way agreement ---------------------------

Failures criterion_matching() {
  Failures f;
  const std::vector<std::pair<Graph, int>> named = {
      {Graph::complete(3), 4},
      {Graph::complete(4), 4},
      {Graph::complete(5), 6},
      {Graph::cycle(6), 3},
      {Graph::disjoint_union(Graph::complete(5), Graph::complete(4)), 6},
  };
  for (const auto& [g, want] : named)
    expect(f, codegree_matching_formula(g).codeg == want,
           "matching codeg of " + g.label() + " != " + std::to_string(want));

  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      if (g.edge_count() == 0) continue;
      const int formula = codegree_matching_formula(g).codeg;
      const int edmonds = codegree_matching_edmonds(g).codeg;
      const int exact = codegree_exact(g.line_graph(), lp_only()).codeg;
      if (formula != edmonds || formula != exact) {
        std::ostringstream o;
        o << "disagreement on " << g.label() << ": formula " << formula
          << ", odd-set oracle " << edmonds << ", exact " << exact;
        f.push_back(o.str());
      }
    }
  }
  return f;
}

// --- criterion 4: h-perfect odd cycles ------------------------------------

Failures criterion_h_perfect() {
  Failures f;
  for (const int n : {5, 7, 9}) {
    const Graph g = Graph::cycle(n);
    const HPerfectCertificate cert = is_h_perfect(g);
    expect(f, cert.verdict == HPerfectVerdict::h_perfect,
           "C" + std::to_string(n) + " not classified h_perfect");
    const CodegreeReport r = codegree_auto(g);
    expect(f, r.codeg == 3 && r.omega_plus_1 == 3,
           "C" + std::to_string(n) + ": codeg != 3 = omega+1");
  }
  const HPerfectCertificate c5 = is_h_perfect(Graph::cycle(5));
  int trivial = 0, clique = 0, odd = 0, other = 0;
  for (const FacetTag& t : c5.facets) {
    switch (t.kind) {
      case FacetKind::trivial: ++trivial; break;
      case FacetKind::clique: ++clique; break;
      case FacetKind::odd_cycle: ++odd; break;
      case FacetKind::other: ++other; break;
    }
  }
  expect(f, c5.facets.size() == 11, "P_C5: facet count != 11");
  expect(f, trivial == 5 && clique == 5 && odd == 1 && other == 0,
         "P_C5: facet census != (5 trivial, 5 clique, 1 odd-cycle)");
  return f;
}

// --- criterion 5: Ehrhart linkage ----------------------------------------

Failures criterion_ehrhart() {
  Failures f;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      const VPolytope p = stable_set_polytope(g);
      const EhrhartData e = ehrhart_h_star(p);
      const CodegreeReport r = codegree_exact(g);
      if (e.degree != n + 1 - r.codeg) {
        f.push_back("degree(h*) != n+1-codeg on " + g.label());
        continue;
      }
      if (e.h_star[0] != 1) f.push_back("h*_0 != 1 on " + g.label());
      for (const Int& h : e.h_star)
        if (h < 0) f.push_back("negative h* entry on " + g.label());
      if (e.values[1] != Int(stable_set_indicators(g).size()))
        f.push_back("L(1) != number of stable sets on " + g.label());
      const Int sign = n % 2 == 0 ? 1 : -1;
      for (int k = 1; k <= n; ++k) {
        if (ehrhart_eval(e.coefficients, -Int(k)) * sign !=
            Rational(interior_lattice_point_count(p, k))) {
          f.push_back("reciprocity fails at k=" + std::to_string(k) + " on " +
                      g.label());
          break;
        }
      }
    }
  }
  return f;
}

// --- criterion 6: perfect facet structure ---------------------------------

Failures criterion_perfect_facets() {
  Failures f;
  const std::vector<Graph> family = seeded_perfect_graphs(50);
  if (family.size() != 50) {
    f.push_back("could not assemble 50 perfect samples");
    return f;
  }
  for (const Graph& g : family) {
    const int n = g.vertex_count();
    std::set<Inequality> expected;
    for (int i = 1; i <= n; ++i) {
      Inequality t;
      t.coeffs.assign(n, 0);
      t.coeffs[i - 1] = -1;
      t.rhs = 0;
      expected.insert(t);
    }
    for (const auto& q : maximal_cliques(g)) {
      Inequality c;
      c.coeffs.assign(n, 0);
      for (const int v : q) c.coeffs[v - 1] = 1;
      c.rhs = 1;
      expected.insert(c);
    }
    const VPolytope p = stable_set_polytope(g);
    const auto& facets = p.facets();
    const std::set<Inequality> actual(facets.begin(), facets.end());
    if (actual != expected)
      f.push_back("facet set != trivial + maximal cliques on " + g.label());
  }
  return f;
}

// --- criterion 7: IDP and regularity --------------------------------------

Failures criterion_idp_regularity() {
  Failures f;

  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      if (!is_perfect(g).perfect) continue;
      const IdpReport r = is_idp_up_to(stable_set_polytope(g), 3);
      if (!r.pass)
        f.push_back("decomposition failure on perfect graph " + g.label());
    }
  }

  // The join of two 5-cycle complements must fail, with a witness point.
  const Graph bad =
      Graph::disjoint_union(Graph::cycle(5), Graph::cycle(5)).complemented();
  Limits wide;
  wide.ehrhart_max_n = 10;
  wide.idp_k_max = 5;
  const IdpReport r = is_idp_up_to(stable_set_polytope(bad, wide), 5, wide);
  expect(f, !r.pass, "complement of 2xC5: decomposition did not fail");
  expect(f, r.failing_k.has_value() && r.failing_point.has_value(),
         "complement of 2xC5: failure carries no witness");
  if (r.failing_k && r.failing_point) {
    expect(f, *r.failing_k == 5,
           "complement of 2xC5: first failure not at k=5");
    expect(f, *r.failing_point == Point(10, 1),
           "complement of 2xC5: witness " + point_str(*r.failing_point) +
               " != all-ones");
  }

  // Regularity reports on perfect graphs pin the exact value n - chi.
  std::vector<Graph> battery = all_labeled_graphs(4);
  const auto sampled = seeded_perfect_graphs(30);
  battery.insert(battery.end(), sampled.begin(), sampled.end());
  for (const Graph& g : battery) {
    if (!is_perfect(g).perfect) continue;
    const RegularityReport rep = regularity_bounds(g);
    const bool ok = rep.exact.has_value() &&
                    *rep.exact == rep.n - rep.chi &&
                    *rep.exact == rep.n - rep.omega &&
                    rep.lower_bound == rep.conditional_upper;
    if (!ok) f.push_back("regularity not pinned exactly on " + g.label());
  }
  return f;
}

// --- criterion 8: certificate re-evaluation -------------------------------

void check_certificates(const Graph& g, const Limits& limits, Failures& f) {
  const CodegreeReport r = codegree_exact(g, limits);
  const VPolytope p = stable_set_polytope(g);
  const Point ones(p.dim(), 1);
  const int kb = r.codeg - 1;

  if (r.blocking.k != kb) {
    f.push_back("blocking k != codeg-1 on " + g.label());
    return;
  }
  switch (r.blocking.kind) {
    case BlockKind::facet:
    case BlockKind::valid_inequality: {
      const Inequality& q = r.blocking.inequality;
      for (const Point& v : p.vertices())
        if (dot(q.coeffs, v) > q.rhs) {
          f.push_back("blocking inequality invalid on " + g.label());
          return;
        }
      if (dot(q.coeffs, ones) < Int(kb) * q.rhs) {
        f.push_back("blocking inequality slack at all-ones on " + g.label());
        return;
      }
      break;
    }
    case BlockKind::zero_direction:
      if (interior_contains_lp(p, kb, ones)) {
        f.push_back("zero-direction certificate refuted on " + g.label());
        return;
      }
      break;
    case BlockKind::outside:
      if (contains_lp(p, kb, ones)) {
        f.push_back("outside certificate refuted on " + g.label());
        return;
      }
      break;
  }

  InteriorCertificate cert;
  if (!interior_contains_lp(p, r.codeg, ones, &cert)) {
    f.push_back("all-ones not interior at codeg on " + g.label());
    return;
  }
  if (cert.steps.size() != 2u * static_cast<unsigned>(p.dim()))
    f.push_back("directional step count != 2n on " + g.label());
  for (const Rational& s : cert.steps)
    if (!(s > 0)) {
      f.push_back("nonpositive directional step on " + g.label());
      return;
    }
}

Failures criterion_certificates() {
  Failures f;
  for (const Graph& g : all_labeled_graphs(4)) {
    check_certificates(g, {}, f);       // facet-path blocking
    check_certificates(g, lp_only(), f);  // LP-path blocking kinds
  }
  for (const Graph& g : random_graph_family(5, 80, 50000))
    check_certificates(g, {}, f);
  for (const Graph& g : random_graph_family(6, 80, 51000))
    check_certificates(g, {}, f);
  for (const Graph& g : random_graph_family(7, 40, 52000))
    check_certificates(g, {}, f);
  for (const Graph& g :
       {Graph::cycle(5), Graph::complete(5).line_graph(),
        Graph::join(Graph::cycle(5), Graph::cycle(5)),
        Graph::join(Graph::cycle(5), Graph::complete(5).line_graph())})
    check_certificates(g, {}, f);
  return f;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Failures()> run;
  };
  const std::vector<Criterion> criteria = {
      {"fixed examples and join additivity failure", criterion_fixtures},
      {"sandwich sweep with perfect equality", criterion_sandwich},
      {"matching three-way agreement", criterion_matching},
      {"h-perfect odd cycles and facet census", criterion_h_perfect},
      {"Ehrhart degree linkage and reciprocity", criterion_ehrhart},
      {"perfect facet structure", criterion_perfect_facets},
      {"bounded IDP and regularity pinning", criterion_idp_regularity},
      {"certificate re-evaluation", criterion_certificates},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Failures f;
    try {
      f = criteria[i].run();
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    if (f.empty()) {
      std::printf("criterion %zu: PASS  %s\n", i + 1, criteria[i].title);
    } else {
      ++failed;
      std::printf("criterion %zu: FAIL  %s: %s", i + 1, criteria[i].title,
                  f.front().c_str());
      if (f.size() > 1) std::printf(" (+%zu more)", f.size() - 1);
      std::printf("\n");
    }
    std::fflush(stdout);
  }
  return failed;
}
