#include "stabset/codegree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "stabset/hperfect.hpp"
#include "stabset/perfect.hpp"

namespace stabset {

TripleClass classify_triple(int omega_plus_1, int codeg, int chi_plus_1) {
  const bool left = omega_plus_1 == codeg;
  const bool right = codeg == chi_plus_1;
  if (left && right) return TripleClass::i;
  if (!left && right) return TripleClass::ii;
  if (left && !right) return TripleClass::iii;
  return TripleClass::iv;
}

namespace {

void finish_report(CodegreeReport& r) {
  r.degree = r.n + 1 - r.codeg;
  r.witness_k = r.codeg;
  r.triple_class = classify_triple(r.omega_plus_1, r.codeg, r.chi_plus_1);
  if (!(r.omega_plus_1 <= r.codeg && r.codeg <= r.chi_plus_1))
    throw std::logic_error("codegree: sandwich violated by computed values");
}

// Clique inequality sum_{v in Q} x_v <= 1; a facet whenever Q is maximal.
Inequality clique_inequality(int n, const std::vector<int>& clique) {
  Inequality ineq;
  ineq.coeffs.assign(n, 0);
  for (int v : clique) ineq.coeffs[v - 1] = 1;
  ineq.rhs = 1;
  return ineq;
}

// The blocking certificate shared by the perfect and h-perfect formulas:
// at k = omega, a maximum clique inequality is tight at the all-ones
// point. Maximum cliques are maximal, so this is a facet.
BlockingCertificate clique_blocking(const Graph& g, const InvariantBundle& inv) {
  BlockingCertificate cert;
  cert.k = inv.clique_number;
  cert.kind = BlockKind::facet;
  cert.inequality = clique_inequality(g.vertex_count(), inv.max_clique);
  return cert;
}

}  // namespace

CodegreeReport codegree_exact(const Graph& g, const Limits& limits) {
  const int n = g.vertex_count();
  check_guard(n <= limits.codegree_max_n,
              "codegree: dimension exceeds codegree_max_n=" +
                  std::to_string(limits.codegree_max_n));
  const InvariantBundle inv = graph_invariants(g, limits);
  const VPolytope p = stable_set_polytope(g, limits);
  const bool facet_path = n <= limits.facet_max_n;
  if (facet_path) p.facets(limits);

  const Point ones(n, 1);
  CodegreeReport r;
  r.n = n;
  r.omega_plus_1 = inv.clique_number + 1;
  r.chi_plus_1 = inv.chromatic_number + 1;
  r.method = facet_path ? CodegreeMethod::exact_facet : CodegreeMethod::exact_lp;

  r.codeg = 0;
  InteriorCertificate success;
  for (int k = r.omega_plus_1; k <= r.chi_plus_1; ++k) {
    const bool inside = facet_path
                            ? interior_contains_facet(p, k, ones, nullptr, limits)
                            : interior_contains_lp(p, k, ones, &success);
    if (inside) {
      r.codeg = k;
      break;
    }
  }
  if (r.codeg == 0)
    throw std::logic_error(
        "codegree: all-ones point not interior by k = chi+1; sandwich broken");
  if (!facet_path) r.interior_steps = std::move(success.steps);

  // Blocking certificate at k = codeg - 1 (that k may sit below the scan
  // window when codeg = omega + 1; non-interiority there is guaranteed).
  const int kb = r.codeg - 1;
  r.blocking.k = kb;
  if (facet_path) {
    InteriorCertificate cert;
    if (interior_contains_facet(p, kb, ones, &cert, limits))
      throw std::logic_error("codegree: interior below the reported codegree");
    r.blocking.kind = BlockKind::facet;
    r.blocking.inequality = *cert.tight_facet;
  } else {
    InteriorCertificate cert;
    if (interior_contains_lp(p, kb, ones, &cert))
      throw std::logic_error("codegree: interior below the reported codegree");
    if (cert.outside) {
      r.blocking.kind = BlockKind::outside;
    } else {
      r.blocking.kind = BlockKind::zero_direction;
      r.blocking.direction = cert.blocked_direction;
    }
  }
  finish_report(r);
  return r;
}

namespace {

// Shared scaffolding of the two matching paths: line-graph invariants
// give the triple bounds; the ambient space is R^{E(g)}.
CodegreeReport matching_report_base(const Graph& g, const Limits& limits) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("matching codegree: graph has no edges");
  check_guard(g.edge_count() <= limits.max_n,
              "matching codegree: line graph exceeds max_n=" +
                  std::to_string(limits.max_n));
  const InvariantBundle inv = graph_invariants(g.line_graph(), limits);
  CodegreeReport r;
  r.n = g.edge_count();
  r.omega_plus_1 = inv.clique_number + 1;
  r.chi_plus_1 = inv.chromatic_number + 1;
  return r;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// Degree inequality sum_{e incident to v} x_e <= 1 in matching coordinates.
Inequality degree_inequality(const Graph& g, int v) {
  Inequality ineq;
  ineq.coeffs.assign(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edges()[e].first == v || g.edges()[e].second == v)
      ineq.coeffs[e] = 1;
  ineq.rhs = 1;
  return ineq;
}

// Odd-set inequality sum_{e inside U} x_e <= (|U|-1)/2.
Inequality odd_set_inequality(const Graph& g, const std::vector<int>& u) {
  std::uint64_t mask = 0;
  for (int v : u) mask |= 1ull << (v - 1);
  Inequality ineq;
  ineq.coeffs.assign(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [a, b] = g.edges()[e];
    if ((mask >> (a - 1) & 1) && (mask >> (b - 1) & 1)) ineq.coeffs[e] = 1;
  }
  ineq.rhs = (static_cast<int>(u.size()) - 1) / 2;
  return ineq;
}

}  // namespace

CodegreeReport codegree_matching_formula(const Graph& g, const Limits& limits) {
  CodegreeReport r = matching_report_base(g, limits);
  const int delta = max_degree(g);
  const auto comps = connected_components(g);
  // The matching polytope of a disjoint union is the product, so the
  // codegree is the componentwise maximum: delta+2 for a complete
  // component on delta+1 vertices with delta even, delta+1 otherwise.
  // Hence the bump happens iff some component attaining the maximum
  // degree is complete.
  std::vector<int> witness_component;
  for (const auto& comp : comps) {
    int comp_delta = 0;
    for (int v : comp) comp_delta = std::max(comp_delta, g.degree(v));
    if (comp_delta != delta) continue;
    const bool complete =
        std::all_of(comp.begin(), comp.end(), [&](int v) {
          return g.degree(v) == static_cast<int>(comp.size()) - 1;
        });
    if (complete) {
      witness_component = comp;
      break;
    }
  }
  const bool bump = delta % 2 == 0 && !witness_component.empty();
  r.codeg = bump ? delta + 2 : delta + 1;
  r.method = CodegreeMethod::matching_formula;

  r.blocking.k = r.codeg - 1;
  r.blocking.kind = BlockKind::valid_inequality;
  if (bump) {
    // At k = delta + 1 the odd-set inequality of a complete attaining
    // component is tight at the all-ones point.
    r.blocking.inequality = odd_set_inequality(g, witness_component);
  } else {
    int v = 1;
    while (g.degree(v) != delta) ++v;
    r.blocking.inequality = degree_inequality(g, v);
  }
  finish_report(r);
  return r;
}

CodegreeReport codegree_matching_edmonds(const Graph& g, const Limits& limits) {
  CodegreeReport r = matching_report_base(g, limits);
  check_guard(g.vertex_count() <= limits.odd_subset_max_n,
              "matching oracle: vertex count exceeds odd_subset_max_n=" +
                  std::to_string(limits.odd_subset_max_n));

  // Smallest k with deg(v) < k everywhere and |E(U)| < k(|U|-1)/2 for all
  // odd U with |U| >= 3. Components are independent (the matching
  // polytope of a disjoint union is the product), so subsets are
  // enumerated per component.
  int best_k = max_degree(g) + 1;
  enum class Why { degree, odd_set } why = Why::degree;
  std::vector<int> blocking_set;
  for (const auto& comp : connected_components(g)) {
    const int s = static_cast<int>(comp.size());
    if (s < 3) continue;
    for (std::uint64_t mask = 0; mask < (1ull << s); ++mask) {
      const int size = std::popcount(mask);
      if (size < 3 || size % 2 == 0) continue;
      std::uint64_t vmask = 0;
      for (int i = 0; i < s; ++i)
        if (mask >> i & 1) vmask |= 1ull << (comp[i] - 1);
      int inner_edges = 0;
      for (int i = 0; i < s; ++i)
        if (mask >> i & 1)
          inner_edges += std::popcount(g.neighbor_mask(comp[i]) & vmask);
      inner_edges /= 2;
      const int k_req = 2 * inner_edges / (size - 1) + 1;
      if (k_req > best_k) {
        best_k = k_req;
        why = Why::odd_set;
        blocking_set.clear();
        for (int i = 0; i < s; ++i)
          if (mask >> i & 1) blocking_set.push_back(comp[i]);
      }
    }
  }
  r.codeg = best_k;
  r.method = CodegreeMethod::matching_edmonds;
  r.blocking.k = r.codeg - 1;
  r.blocking.kind = BlockKind::valid_inequality;
  if (why == Why::odd_set) {
    r.blocking.inequality = odd_set_inequality(g, blocking_set);
  } else {
    const int delta = max_degree(g);
    int v = 1;
    while (g.degree(v) != delta) ++v;
    r.blocking.inequality = degree_inequality(g, v);
  }
  finish_report(r);
  return r;
}

CodegreeReport codegree_auto(const Graph& g, const Limits& limits,
                             bool declared_h_perfect) {
  const PerfectnessCertificate perfect = is_perfect(g, limits);
  if (perfect.perfect) {
    const InvariantBundle inv = graph_invariants(g, limits);
    CodegreeReport r;
    r.n = g.vertex_count();
    r.omega_plus_1 = inv.clique_number + 1;
    r.chi_plus_1 = inv.chromatic_number + 1;
    r.codeg = r.omega_plus_1;
    r.method = CodegreeMethod::perfect_formula;
    r.blocking = clique_blocking(g, inv);
    finish_report(r);
    return r;
  }
  bool h_perfect = declared_h_perfect;
  if (!h_perfect) {
    const HPerfectCertificate hp = is_h_perfect(g, limits);
    h_perfect = hp.verdict == HPerfectVerdict::h_perfect;
  }
  if (h_perfect) {
    const InvariantBundle inv = graph_invariants(g, limits);
    CodegreeReport r;
    r.n = g.vertex_count();
    r.omega_plus_1 = inv.clique_number + 1;
    r.chi_plus_1 = inv.chromatic_number + 1;
    r.codeg = r.omega_plus_1;
    r.method = CodegreeMethod::h_perfect_formula;
    r.blocking = clique_blocking(g, inv);
    finish_report(r);
    return r;
  }
  if (const auto preimage = g.line_preimage())
    return codegree_matching_formula(*preimage, limits);
  return codegree_exact(g, limits);
}

std::string method_name(CodegreeMethod m) {
  switch (m) {
    case CodegreeMethod::exact_lp: return "exact_lp";
    case CodegreeMethod::exact_facet: return "exact_facet";
    case CodegreeMethod::perfect_formula: return "perfect_formula";
    case CodegreeMethod::matching_formula: return "matching_formula";
    case CodegreeMethod::matching_edmonds: return "matching_edmonds";
    case CodegreeMethod::h_perfect_formula: return "h_perfect_formula";
  }
  return "exact_lp";
}

std::string triple_class_name(TripleClass c) {
  switch (c) {
    case TripleClass::i: return "i";
    case TripleClass::ii: return "ii";
    case TripleClass::iii: return "iii";
    case TripleClass::iv: return "iv";
  }
  return "i";
}

}  // namespace stabset
