#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stabset/codegree.hpp"
#include "stabset/limits.hpp"

namespace stabset {

// One realized (omega+1, codeg, chi+1) value with its first witness in
// the sweep order and the number of graphs realizing it.
struct TripleRecord {
  std::array<int, 3> triple{};
  TripleClass cls = TripleClass::i;
  std::string witness_label;
  std::string witness_edge_list;
  long count = 0;
};

struct TripleSearchResult {
  std::vector<TripleRecord> records;  // sorted by triple
  long graphs_processed = 0;
};

// Exhaustive over all labeled graphs on 1..n_max vertices.
TripleSearchResult triple_search_all_labeled(int n_max, const Limits& limits = {});

// Seeded G(n_max, 1/2) sample of the given size.
TripleSearchResult triple_search_random(int n_max, int samples,
                                        std::uint64_t seed,
                                        const Limits& limits = {});

// Shared core: aggregates codegree_exact triples over an explicit family.
TripleSearchResult triple_search_family(const std::vector<Graph>& family,
                                        const Limits& limits = {});

}  // namespace stabset
