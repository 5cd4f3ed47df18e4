#pragma once

#include <optional>
#include <string>

#include "stabset/codegree.hpp"
#include "stabset/graph.hpp"
#include "stabset/idp.hpp"
#include "stabset/limits.hpp"

namespace stabset {

// Bounds on the regularity of the toric ring of the stable set polytope.
// The ring invariant itself is never computed here; the report assembles
// the combinatorial bounds and the evidence they are conditioned on.
struct RegularityReport {
  int n = 0;
  int omega = 0;
  int chi = 0;
  int lower_bound = 0;        // n - chi, unconditional (the polytope is spanning)
  int conditional_upper = 0;  // n - omega, valid when the toric ring is normal (IDP)
  bool perfect = false;
  std::optional<int> exact;   // n - chi = n - omega when perfect
  int degree = 0;             // deg P = n + 1 - codeg; reg >= deg for spanning,
                              // reg = deg under IDP
  CodegreeReport codeg_report;
  bool spanning = false;
  // IDP evidence: "pass", "fail", or "inconclusive"; bounded check only.
  std::string idp_status;
  std::string idp_detail;
  IdpReport idp;
};

RegularityReport regularity_bounds(const Graph& g, const Limits& limits = {});

}  // namespace stabset
