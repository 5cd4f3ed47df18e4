#pragma once

#include <cstdint>
#include <vector>

#include "stabset/graph.hpp"
#include "stabset/limits.hpp"

namespace stabset {

// Clique number, chromatic number, max degree, and witnesses for each.
// Witnesses are verified on construction paths: the clique is pairwise
// adjacent of size omega, the coloring is proper and uses exactly chi colors.
struct InvariantBundle {
  int n = 0;
  int m = 0;
  int clique_number = 0;
  int chromatic_number = 0;
  int max_degree = 0;
  std::vector<int> max_clique;   // vertex list, increasing
  std::vector<int> coloring;     // coloring[v-1] in 1..chi
  std::vector<std::vector<int>> components;  // each increasing, ordered by min vertex
};

InvariantBundle graph_invariants(const Graph& g, const Limits& limits = {});

// Omega alone, without the coloring search.
int clique_number(const Graph& g, const Limits& limits = {});
std::vector<int> max_clique(const Graph& g, const Limits& limits = {});

// Chi with a proper coloring using exactly chi colors.
int chromatic_number(const Graph& g, std::vector<int>* coloring_out,
                     const Limits& limits = {});

std::vector<std::vector<int>> connected_components(const Graph& g);

// All inclusion-maximal cliques, each sorted increasing, list sorted
// lexicographically. Bron-Kerbosch with pivoting; deterministic.
std::vector<std::vector<int>> maximal_cliques(const Graph& g,
                                              const Limits& limits = {});

// All stable sets (including the empty set) as 0/1 indicator vectors of
// length n, in lexicographic order of the indicator vector.
std::vector<std::vector<std::int64_t>> stable_set_indicators(
    const Graph& g, const Limits& limits = {});

bool is_stable_set(const Graph& g, const std::vector<int>& vertices);
bool is_clique(const Graph& g, const std::vector<int>& vertices);
bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring);

}  // namespace stabset
