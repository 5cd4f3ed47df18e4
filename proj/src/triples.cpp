#include "stabset/triples.hpp"

#include <algorithm>
#include <map>

#include "stabset/sweep.hpp"

namespace stabset {

TripleSearchResult triple_search_family(const std::vector<Graph>& family,
                                        const Limits& limits) {
  std::map<std::array<int, 3>, TripleRecord> seen;
  TripleSearchResult result;
  for (const Graph& g : family) {
    const CodegreeReport r = codegree_exact(g, limits);
    const std::array<int, 3> triple{r.omega_plus_1, r.codeg, r.chi_plus_1};
    auto [it, fresh] = seen.try_emplace(triple);
    if (fresh) {
      it->second.triple = triple;
      it->second.cls = r.triple_class;
      it->second.witness_label = g.label();
      it->second.witness_edge_list = g.to_edge_list();
    }
    ++it->second.count;
    ++result.graphs_processed;
  }
  for (auto& [key, rec] : seen) result.records.push_back(std::move(rec));
  return result;
}

TripleSearchResult triple_search_all_labeled(int n_max, const Limits& limits) {
  check_guard(n_max <= limits.sweep_max_n,
              "triple search: n_max exceeds sweep_max_n=" +
                  std::to_string(limits.sweep_max_n));
  std::vector<Graph> family;
  for (int n = 1; n <= n_max; ++n) {
    auto graphs = all_labeled_graphs(n);
    std::move(graphs.begin(), graphs.end(), std::back_inserter(family));
  }
  return triple_search_family(family, limits);
}

TripleSearchResult triple_search_random(int n_max, int samples,
                                        std::uint64_t seed, const Limits& limits) {
  check_guard(n_max <= limits.codegree_max_n,
              "triple search: n_max exceeds codegree_max_n=" +
                  std::to_string(limits.codegree_max_n));
  return triple_search_family(random_graph_family(n_max, samples, seed), limits);
}

}  // namespace stabset
