#include "stabset/regularity.hpp"

#include <sstream>

#include "stabset/perfect.hpp"
#include "stabset/polytope.hpp"

namespace stabset {

RegularityReport regularity_bounds(const Graph& g, const Limits& limits) {
  const InvariantBundle inv = graph_invariants(g, limits);
  RegularityReport r;
  r.n = inv.n;
  r.omega = inv.clique_number;
  r.chi = inv.chromatic_number;
  r.lower_bound = r.n - r.chi;
  r.conditional_upper = r.n - r.omega;
  r.perfect = is_perfect(g, limits).perfect;
  if (r.perfect) r.exact = r.lower_bound;
  r.codeg_report = codegree_auto(g, limits);
  r.degree = r.codeg_report.degree;

  const VPolytope p = stable_set_polytope(g, limits);
  r.spanning = lattice_spanning(p);

  try {
    r.idp = is_idp_up_to(p, limits.idp_k_max, limits);
    if (r.idp.pass) {
      r.idp_status = "pass";
      r.idp_detail =
          "no decomposition failure up to k=" + std::to_string(r.idp.checked_up_to);
    } else {
      r.idp_status = "fail";
      std::ostringstream detail;
      detail << "lattice point of " << *r.idp.failing_k
             << "P with no decomposition: (";
      for (std::size_t j = 0; j < r.idp.failing_point->size(); ++j) {
        if (j) detail << ",";
        detail << (*r.idp.failing_point)[j];
      }
      detail << ")";
      r.idp_detail = detail.str();
    }
  } catch (const GuardError& e) {
    r.idp_status = "inconclusive";
    r.idp_detail = e.what();
  }
  return r;
}

}  // namespace stabset
