#include "stabset/sweep.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "stabset/codegree.hpp"
#include "stabset/ehrhart.hpp"
#include "stabset/hperfect.hpp"
#include "stabset/invariants.hpp"
#include "stabset/perfect.hpp"
#include "stabset/polytope.hpp"

namespace stabset {

Graph labeled_graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (mask >> bit & 1) edges.push_back({i, j});
      ++bit;
    }
  std::ostringstream label;
  label << "labeled(" << n << "," << mask << ")";
  return Graph(n, std::move(edges), label.str());
}

std::vector<Graph> all_labeled_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  if (pairs > 30)
    throw std::invalid_argument("all_labeled_graphs: family too large");
  std::vector<Graph> out;
  out.reserve(1ull << pairs);
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask)
    out.push_back(labeled_graph_from_mask(n, mask));
  return out;
}

std::vector<Graph> random_graph_family(int n, int count, std::uint64_t seed) {
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(Graph::random(n, Rational(1, 2), seed + i));
  return out;
}

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

namespace {

std::string point_str(const Point& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out << ",";
    out << x[j];
  }
  out << ")";
  return out.str();
}

// Valid for P and tight-or-violated at the all-ones point of kP: that is
// what a blocking inequality must re-verify to.
bool blocks_all_ones(const Inequality& ineq, const VPolytope& p, int k) {
  for (const auto& v : p.vertices())
    if (dot(ineq.coeffs, v) > ineq.rhs) return false;
  const Point ones(p.dim(), 1);
  return dot(ineq.coeffs, ones) >= Int(k) * ineq.rhs;
}

}  // namespace

std::vector<std::string> verify_graph(const Graph& g, const Limits& limits,
                                      const VerifyOptions& opt) {
  std::vector<std::string> bad;
  const auto fail = [&](const std::string& what) {
    bad.push_back(g.label() + ": " + what);
  };

  const InvariantBundle inv = graph_invariants(g, limits);
  if (inv.clique_number > inv.chromatic_number)
    fail("clique number exceeds chromatic number");
  if (!is_clique(g, inv.max_clique) ||
      static_cast<int>(inv.max_clique.size()) != inv.clique_number)
    fail("clique witness invalid");
  if (!is_proper_coloring(g, inv.coloring))
    fail("coloring witness not proper");
  if (inv.n > 0) {
    std::vector<bool> used(inv.chromatic_number + 1, false);
    int maxc = 0;
    for (int c : inv.coloring) {
      maxc = std::max(maxc, c);
      if (c >= 1 && c <= inv.chromatic_number) used[c] = true;
    }
    if (maxc != inv.chromatic_number ||
        !std::all_of(used.begin() + 1, used.end(), [](bool b) { return b; }))
      fail("coloring witness does not use exactly chi colors");
  }

  const PerfectnessCertificate perfect = is_perfect(g, limits);
  if (!perfect.perfect) {
    if (!perfect.odd_hole.empty() && !is_odd_hole(g, perfect.odd_hole))
      fail("odd hole witness invalid");
    if (!perfect.odd_antihole.empty() &&
        !is_odd_hole(g.complemented(), perfect.odd_antihole))
      fail("odd antihole witness invalid");
    if (perfect.odd_hole.empty() && perfect.odd_antihole.empty())
      fail("imperfect verdict without witness");
  }

  const CodegreeReport report = codegree_exact(g, limits);
  if (!(report.omega_plus_1 <= report.codeg && report.codeg <= report.chi_plus_1))
    fail("sandwich violated");
  if (perfect.perfect &&
      !(report.omega_plus_1 == report.codeg && report.codeg == report.chi_plus_1))
    fail("perfect graph without sandwich equality");

  const VPolytope p = stable_set_polytope(g, limits);
  const Point ones(g.vertex_count(), 1);

  if (opt.check_certificates) {
    InteriorCertificate cert;
    if (!interior_contains_lp(p, report.codeg, ones, &cert))
      fail("all-ones not interior at the reported codegree");
    else if (static_cast<int>(cert.steps.size()) != 2 * g.vertex_count() ||
             !std::all_of(cert.steps.begin(), cert.steps.end(),
                          [](const Rational& s) { return s > 0; }))
      fail("interior certificate missing positive steps");
    const auto& blocking = report.blocking;
    if (blocking.k != report.codeg - 1) fail("blocking certificate at wrong k");
    switch (blocking.kind) {
      case BlockKind::facet:
      case BlockKind::valid_inequality:
        if (!blocks_all_ones(blocking.inequality, p, blocking.k))
          fail("blocking inequality does not block");
        break;
      case BlockKind::zero_direction: {
        InteriorCertificate c2;
        if (interior_contains_lp(p, blocking.k, ones, &c2))
          fail("zero-direction certificate at an interior point");
        break;
      }
      case BlockKind::outside:
        if (contains_lp(p, blocking.k, ones))
          fail("outside certificate but membership holds");
        break;
    }
  }

  if (opt.check_ehrhart && g.vertex_count() <= limits.ehrhart_max_n) {
    const EhrhartData eh = ehrhart_h_star(p, limits);
    if (eh.degree != report.degree)
      fail("h* degree disagrees with n+1-codeg");
    if (eh.values[0] != 1) fail("L(0) != 1");
    if (g.vertex_count() >= 1 &&
        eh.values[1] != Int(static_cast<long>(p.vertices().size())))
      fail("L(1) != number of stable sets");
    for (int k = 1; k <= g.vertex_count(); ++k) {
      const Rational rhs = ehrhart_eval(eh.coefficients, -Int(k));
      const Rational sign = g.vertex_count() % 2 == 0 ? 1 : -1;
      if (Rational(interior_lattice_point_count(p, k, limits)) != sign * rhs)
        fail("reciprocity failed at k=" + std::to_string(k));
    }
  }

  if (opt.check_dual_path && g.vertex_count() <= limits.facet_max_n) {
    p.facets(limits);
    SplitMix64 rng(opt.seed);
    for (int k = 1; k <= inv.chromatic_number + 1; ++k) {
      std::vector<Point> probes{ones};
      for (int t = 0; t < opt.random_points; ++t) {
        Point x(g.vertex_count());
        for (auto& coord : x)
          coord = static_cast<std::int64_t>(rng.next() % (k + 1));
        probes.push_back(std::move(x));
      }
      for (const auto& x : probes) {
        if (contains_lp(p, k, x) != contains_facet(p, k, x, limits))
          fail("membership dual-path mismatch at k=" + std::to_string(k) +
               " x=" + point_str(x));
        if (interior_contains_lp(p, k, x) !=
            interior_contains_facet(p, k, x, nullptr, limits))
          fail("interior dual-path mismatch at k=" + std::to_string(k) +
               " x=" + point_str(x));
      }
    }
  }

  if (opt.check_matching && g.edge_count() >= 1 &&
      g.edge_count() <= limits.codegree_max_n) {
    const CodegreeReport formula = codegree_matching_formula(g, limits);
    const CodegreeReport edmonds = codegree_matching_edmonds(g, limits);
    const CodegreeReport exact = codegree_exact(g.line_graph(), limits);
    if (formula.codeg != edmonds.codeg || edmonds.codeg != exact.codeg)
      fail("matching paths disagree: formula=" + std::to_string(formula.codeg) +
           " edmonds=" + std::to_string(edmonds.codeg) +
           " exact=" + std::to_string(exact.codeg));
  }

  if (opt.check_h_perfect && g.vertex_count() <= limits.facet_max_n) {
    const HPerfectCertificate hp = is_h_perfect(g, limits);
    if (hp.verdict == HPerfectVerdict::h_perfect &&
        report.codeg != report.omega_plus_1)
      fail("h-perfect graph with codeg != omega+1");
  }

  return bad;
}

}  // namespace stabset
