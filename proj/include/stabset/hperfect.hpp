#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabset/graph.hpp"
#include "stabset/limits.hpp"
#include "stabset/lp.hpp"

namespace stabset {

enum class FacetKind { trivial, clique, odd_cycle, other };

struct FacetTag {
  Inequality facet;
  FacetKind kind = FacetKind::other;
  // Clique vertex set, or odd cycle in cycle order; empty for trivial/other.
  std::vector<int> witness;
};

enum class HPerfectVerdict { h_perfect, not_h_perfect, inconclusive };

// Facet-by-facet classification of the stable set polytope against the
// nonnegativity / clique / odd-cycle catalogue. h-perfect iff every facet
// matches; inconclusive when facet enumeration is out of budget.
struct HPerfectCertificate {
  HPerfectVerdict verdict = HPerfectVerdict::inconclusive;
  std::vector<FacetTag> facets;
  std::optional<Inequality> offender;  // first facet tagged other
  std::string note;                    // budget detail when inconclusive
};

HPerfectCertificate is_h_perfect(const Graph& g, const Limits& limits = {});

std::string facet_kind_name(FacetKind k);
std::string h_perfect_verdict_name(HPerfectVerdict v);

}  // namespace stabset
