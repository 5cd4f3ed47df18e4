#include "stabset/perfect.hpp"

#include <bit>

namespace stabset {

namespace {

// DFS over chordless paths rooted at v1, restricted to vertices > v1 so
// each hole is discovered exactly once, at its minimum vertex. The path
// invariant: consecutive vertices adjacent, all other pairs non-adjacent.
// A candidate adjacent to v1 either closes an odd cycle of length >= 5 or
// is discarded (any longer path through it would carry a chord to v1).
struct HoleSearch {
  const Graph& g;
  std::vector<int> path;
  std::uint64_t on_path = 0;
  std::vector<int> found;

  bool dfs() {
    const int last = path.back();
    // Vertices whose addition keeps the path chordless: adjacent to the
    // last vertex, non-adjacent to every earlier vertex except v1.
    std::uint64_t middle = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      middle |= 1ull << (path[i] - 1);
    const std::uint64_t v1_bit = 1ull << (path[0] - 1);
    std::uint64_t cand = g.neighbor_mask(last) & ~on_path;
    // Only vertices above the root.
    cand &= ~((v1_bit << 1) - 1);
    while (cand) {
      const int u = std::countr_zero(cand) + 1;
      const std::uint64_t bit = 1ull << (u - 1);
      cand &= cand - 1;
      if (g.neighbor_mask(u) & middle) continue;
      // Adjacency to the root is the path edge itself while the path is a
      // single vertex; it only closes (or chords) from length two on.
      if (path.size() >= 2 && (g.neighbor_mask(u) & v1_bit)) {
        const std::size_t len = path.size() + 1;
        if (len >= 5 && len % 2 == 1) {
          found = path;
          found.push_back(u);
          return true;
        }
        continue;  // chord to v1 blocks any extension through u
      }
      path.push_back(u);
      on_path |= bit;
      if (dfs()) return true;
      on_path &= ~bit;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<int> find_odd_hole(const Graph& g, const Limits& limits) {
  check_guard(g.vertex_count() <= limits.max_n,
              "odd hole search: graph exceeds max_n=" + std::to_string(limits.max_n));
  const int n = g.vertex_count();
  for (int v1 = 1; v1 + 4 <= n; ++v1) {
    HoleSearch search{g};
    search.path = {v1};
    search.on_path = 1ull << (v1 - 1);
    // Second vertex fixed above v1; the closing vertex is also above v1,
    // so each hole appears under both orientations and either is fine.
    if (search.dfs()) return search.found;
  }
  return {};
}

bool is_odd_hole(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 5 || len % 2 == 0) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

PerfectnessCertificate is_perfect(const Graph& g, const Limits& limits) {
  PerfectnessCertificate cert;
  cert.odd_hole = find_odd_hole(g, limits);
  if (!cert.odd_hole.empty()) return cert;
  cert.odd_antihole = find_odd_hole(g.complemented(), limits);
  if (!cert.odd_antihole.empty()) return cert;
  cert.perfect = true;
  return cert;
}

}  // namespace stabset
