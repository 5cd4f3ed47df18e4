#pragma once

#include <vector>

#include "stabset/graph.hpp"
#include "stabset/limits.hpp"

namespace stabset {

// Perfection verdict with an explicit obstruction when imperfect: an odd
// hole (induced cycle of odd length >= 5, in cycle order) or, failing
// that, an odd antihole (same structure in the complement). At most one
// witness is populated; one obstruction already decides the verdict.
struct PerfectnessCertificate {
  bool perfect = false;
  std::vector<int> odd_hole;      // cycle order in the graph
  std::vector<int> odd_antihole;  // cycle order in the complement
};

PerfectnessCertificate is_perfect(const Graph& g, const Limits& limits = {});

// First odd hole in the deterministic search order, or empty. Every hole
// is reported with its minimum vertex first.
std::vector<int> find_odd_hole(const Graph& g, const Limits& limits = {});

// Validates a claimed hole: odd length >= 5, consecutive vertices adjacent
// (cyclically), all other pairs non-adjacent.
bool is_odd_hole(const Graph& g, const std::vector<int>& cycle);

}  // namespace stabset
