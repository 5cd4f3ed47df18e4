#include "stabset/hperfect.hpp"

#include <algorithm>

#include "stabset/invariants.hpp"
#include "stabset/polytope.hpp"

namespace stabset {

namespace {

// Support of a 0/1 coefficient vector, or empty if any coefficient is
// outside {0,1}.
std::vector<int> unit_support(const std::vector<Int>& coeffs) {
  std::vector<int> support;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 1)
      support.push_back(static_cast<int>(j) + 1);
    else if (coeffs[j] != 0)
      return {};
  }
  return support;
}

bool is_trivial_facet(const Inequality& f) {
  if (f.rhs != 0) return false;
  int negatives = 0;
  for (const Int& c : f.coeffs) {
    if (c == -1)
      ++negatives;
    else if (c != 0)
      return false;
  }
  return negatives == 1;
}

// Hamiltonian cycle of g restricted to `support`, returned in cycle
// order starting at the smallest vertex; empty when none exists.
std::vector<int> hamiltonian_cycle_on(const Graph& g, const std::vector<int>& support) {
  const int s = static_cast<int>(support.size());
  std::vector<int> path{support[0]};
  std::vector<bool> used(s, false);
  used[0] = true;
  std::vector<int> result;
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == s) {
      if (g.adjacent(path.back(), path.front())) {
        result = path;
        return true;
      }
      return false;
    }
    for (int i = 1; i < s; ++i) {
      if (used[i] || !g.adjacent(path.back(), support[i])) continue;
      used[i] = true;
      path.push_back(support[i]);
      if (self(self)) return true;
      path.pop_back();
      used[i] = false;
    }
    return false;
  };
  dfs(dfs);
  return result;
}

FacetTag classify_facet(const Graph& g, const Inequality& f) {
  FacetTag tag;
  tag.facet = f;
  if (is_trivial_facet(f)) {
    tag.kind = FacetKind::trivial;
    return tag;
  }
  const std::vector<int> support = unit_support(f.coeffs);
  if (!support.empty()) {
    if (f.rhs == 1 && is_clique(g, support)) {
      tag.kind = FacetKind::clique;
      tag.witness = support;
      return tag;
    }
    const int s = static_cast<int>(support.size());
    if (s >= 5 && s % 2 == 1 && f.rhs == (s - 1) / 2) {
      const std::vector<int> cycle = hamiltonian_cycle_on(g, support);
      if (!cycle.empty()) {
        tag.kind = FacetKind::odd_cycle;
        tag.witness = cycle;
        return tag;
      }
    }
  }
  tag.kind = FacetKind::other;
  return tag;
}

}  // namespace

HPerfectCertificate is_h_perfect(const Graph& g, const Limits& limits) {
  HPerfectCertificate cert;
  std::vector<Inequality> facets;
  try {
    facets = stable_set_polytope(g, limits).facets(limits);
  } catch (const GuardError& e) {
    cert.verdict = HPerfectVerdict::inconclusive;
    cert.note = e.what();
    return cert;
  }
  cert.verdict = HPerfectVerdict::h_perfect;
  for (const auto& f : facets) {
    FacetTag tag = classify_facet(g, f);
    if (tag.kind == FacetKind::other) {
      cert.verdict = HPerfectVerdict::not_h_perfect;
      if (!cert.offender) cert.offender = f;
    }
    cert.facets.push_back(std::move(tag));
  }
  return cert;
}

std::string facet_kind_name(FacetKind k) {
  switch (k) {
    case FacetKind::trivial: return "trivial";
    case FacetKind::clique: return "clique";
    case FacetKind::odd_cycle: return "odd_cycle";
    case FacetKind::other: return "other";
  }
  return "other";
}

std::string h_perfect_verdict_name(HPerfectVerdict v) {
  switch (v) {
    case HPerfectVerdict::h_perfect: return "h_perfect";
    case HPerfectVerdict::not_h_perfect: return "not_h_perfect";
    case HPerfectVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace stabset
