#include "stabset/report.hpp"

namespace stabset {

namespace {

Json int_vector_json(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(to_string(x));
  return arr;
}

Json rational_vector_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const Rational& x : v) arr.push_back(to_string(x));
  return arr;
}

}  // namespace

Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["label"] = g.label();
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

Json invariants_json(const InvariantBundle& inv) {
  Json j;
  j["n"] = inv.n;
  j["m"] = inv.m;
  j["max_degree"] = inv.max_degree;
  j["clique_number"] = inv.clique_number;
  j["chromatic_number"] = inv.chromatic_number;
  j["max_clique"] = inv.max_clique;
  j["coloring"] = inv.coloring;
  j["components"] = inv.components;
  return j;
}

Json perfect_json(const PerfectnessCertificate& cert) {
  Json j;
  j["perfect"] = cert.perfect;
  if (!cert.odd_hole.empty()) j["odd_hole"] = cert.odd_hole;
  if (!cert.odd_antihole.empty()) j["odd_antihole"] = cert.odd_antihole;
  return j;
}

Json inequality_json(const Inequality& ineq) {
  Json j;
  j["coeffs"] = int_vector_json(ineq.coeffs);
  j["rhs"] = to_string(ineq.rhs);
  return j;
}

Json codegree_json(const CodegreeReport& r) {
  Json j;
  j["n"] = r.n;
  j["omega_plus_1"] = r.omega_plus_1;
  j["codeg"] = r.codeg;
  j["chi_plus_1"] = r.chi_plus_1;
  j["degree"] = r.degree;
  j["method"] = method_name(r.method);
  j["triple_class"] = triple_class_name(r.triple_class);
  j["witness_k"] = r.witness_k;
  Json blocking;
  blocking["k"] = r.blocking.k;
  switch (r.blocking.kind) {
    case BlockKind::facet:
      blocking["kind"] = "facet";
      blocking["inequality"] = inequality_json(r.blocking.inequality);
      break;
    case BlockKind::valid_inequality:
      blocking["kind"] = "valid_inequality";
      blocking["inequality"] = inequality_json(r.blocking.inequality);
      break;
    case BlockKind::zero_direction:
      blocking["kind"] = "zero_direction";
      blocking["direction"] = r.blocking.direction;
      break;
    case BlockKind::outside:
      blocking["kind"] = "outside";
      break;
  }
  j["blocking_certificate"] = std::move(blocking);
  if (!r.interior_steps.empty())
    j["interior_steps"] = rational_vector_json(r.interior_steps);
  return j;
}

Json hperfect_json(const HPerfectCertificate& cert) {
  Json j;
  j["verdict"] = h_perfect_verdict_name(cert.verdict);
  if (cert.verdict == HPerfectVerdict::inconclusive) {
    j["note"] = cert.note;
    return j;
  }
  Json facets = Json::array();
  for (const auto& tag : cert.facets) {
    Json f = inequality_json(tag.facet);
    f["kind"] = facet_kind_name(tag.kind);
    if (!tag.witness.empty()) f["witness"] = tag.witness;
    facets.push_back(std::move(f));
  }
  j["facets"] = std::move(facets);
  if (cert.offender) j["offender"] = inequality_json(*cert.offender);
  return j;
}

Json ehrhart_json(const EhrhartData& data) {
  Json j;
  j["values"] = int_vector_json(data.values);
  j["coefficients"] = rational_vector_json(data.coefficients);
  j["h_star"] = int_vector_json(data.h_star);
  j["degree"] = data.degree;
  return j;
}

Json regularity_json(const RegularityReport& r) {
  Json j;
  j["n"] = r.n;
  j["omega"] = r.omega;
  j["chi"] = r.chi;
  j["lower_bound"] = r.lower_bound;
  j["lower_bound_note"] = "n - chi; unconditional (stable set polytopes are spanning)";
  j["conditional_upper_bound"] = r.conditional_upper;
  j["conditional_upper_note"] = "n - omega; valid if the toric ring is normal (IDP)";
  j["perfect"] = r.perfect;
  if (r.exact) j["exact"] = *r.exact;
  j["degree"] = r.degree;
  j["degree_note"] = "deg P = n+1-codeg; reg >= deg P (spanning), = deg P when IDP";
  j["spanning"] = r.spanning;
  j["idp_status"] = r.idp_status;
  j["idp_detail"] = r.idp_detail;
  j["codegree"] = codegree_json(r.codeg_report);
  return j;
}

Json triples_json(const TripleSearchResult& r) {
  Json j;
  j["graphs_processed"] = r.graphs_processed;
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json item;
    item["triple"] = rec.triple;
    item["class"] = triple_class_name(rec.cls);
    item["count"] = rec.count;
    item["witness_label"] = rec.witness_label;
    item["witness_edge_list"] = rec.witness_edge_list;
    records.push_back(std::move(item));
  }
  j["records"] = std::move(records);
  return j;
}

}  // namespace stabset
