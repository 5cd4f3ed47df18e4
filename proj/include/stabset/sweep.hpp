#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stabset/graph.hpp"
#include "stabset/limits.hpp"

namespace stabset {

// Graph on n vertices whose edge set is the binary expansion of `mask`
// over vertex pairs in lexicographic order (1,2),(1,3),...,(n-1,n).
Graph labeled_graph_from_mask(int n, std::uint64_t mask);

// All 2^C(n,2) labeled graphs on n vertices, in mask order.
std::vector<Graph> all_labeled_graphs(int n);

// `count` seeded G(n, 1/2) samples; sample i uses seed + i.
std::vector<Graph> random_graph_family(int n, int count, std::uint64_t seed);

// Runs fn(i) for i in [0, count) across `workers` threads; worker w takes
// the indices congruent to w. Results ordering is the caller's problem;
// with workers <= 1 this is a plain loop.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

struct VerifyOptions {
  int random_points = 20;      // random membership points per dual-path check
  std::uint64_t seed = 1;
  bool check_certificates = true;
  bool check_ehrhart = true;   // degree link, h* shape, reciprocity
  bool check_dual_path = true;
  bool check_matching = true;  // three-way agreement on the line graph
  bool check_h_perfect = true;
};

// Invariant battery for one graph. Every returned string is a violated
// property with enough detail to reproduce; empty means all hold.
std::vector<std::string> verify_graph(const Graph& g, const Limits& limits = {},
                                      const VerifyOptions& opt = {});

}  // namespace stabset
