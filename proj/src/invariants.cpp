#include "stabset/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace stabset {

namespace {

int popcount(std::uint64_t m) { return std::popcount(m); }

// Branch and bound over candidate bitmasks. Candidates are scanned in
// ascending vertex order, so ties resolve to the lexicographically
// smallest maximum clique.
struct CliqueSearch {
  const Graph& g;
  std::uint64_t best_mask = 0;
  int best_size = 0;

  void dfs(std::uint64_t cur, int cur_size, std::uint64_t cand) {
    if (cur_size + popcount(cand) <= best_size) return;
    if (!cand) {
      best_size = cur_size;
      best_mask = cur;
      return;
    }
    while (cand) {
      if (cur_size + popcount(cand) <= best_size) return;
      const int v = std::countr_zero(cand) + 1;
      const std::uint64_t bit = 1ull << (v - 1);
      cand &= ~bit;
      dfs(cur | bit, cur_size + 1, cand & g.neighbor_mask(v));
    }
  }
};

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

// Feasibility of a proper coloring with at most k colors. Vertices are
// colored in the given order; a vertex may open color c only if colors
// 1..c-1 are already in use (symmetry break).
bool color_with(const Graph& g, const std::vector<int>& order, int k,
                std::vector<int>& coloring) {
  const int n = g.vertex_count();
  std::vector<int> assigned(n + 1, 0);
  // One past the end: both stacks are touched at idx after the final
  // advance, just before the full-assignment check.
  std::vector<int> pos_color(order.size() + 1, 0);
  int idx = 0, max_used = 0;
  std::vector<int> max_used_at(order.size() + 1, 0);
  while (idx >= 0) {
    if (idx == static_cast<int>(order.size())) {
      coloring.assign(n, 0);
      for (int v = 1; v <= n; ++v) coloring[v - 1] = assigned[v];
      return true;
    }
    const int v = order[idx];
    std::uint64_t forbidden = 0;
    std::uint64_t nb = g.neighbor_mask(v);
    while (nb) {
      const int u = std::countr_zero(nb) + 1;
      nb &= nb - 1;
      if (assigned[u]) forbidden |= 1ull << (assigned[u] - 1);
    }
    const int cap = std::min(k, max_used_at[idx] + 1);
    int c = pos_color[idx] + 1;
    while (c <= cap && ((forbidden >> (c - 1)) & 1u)) ++c;
    if (c > cap) {
      pos_color[idx] = 0;
      assigned[v] = 0;
      --idx;
      if (idx >= 0) assigned[order[idx]] = 0;
      continue;
    }
    pos_color[idx] = c;
    assigned[v] = c;
    max_used = std::max(max_used_at[idx], c);
    ++idx;
    max_used_at[idx] = max_used;
    pos_color[idx] = 0;
  }
  return false;
}

}  // namespace

std::vector<int> max_clique(const Graph& g, const Limits& limits) {
  check_guard(g.vertex_count() <= limits.max_n,
              "clique search: graph exceeds max_n=" + std::to_string(limits.max_n));
  if (g.vertex_count() == 0) return {};
  CliqueSearch search{g};
  const std::uint64_t all =
      g.vertex_count() == 64 ? ~0ull : (1ull << g.vertex_count()) - 1;
  search.dfs(0, 0, all);
  return mask_to_vertices(search.best_mask);
}

int clique_number(const Graph& g, const Limits& limits) {
  return static_cast<int>(max_clique(g, limits).size());
}

int chromatic_number(const Graph& g, std::vector<int>* coloring_out,
                     const Limits& limits) {
  check_guard(g.vertex_count() <= limits.max_n,
              "coloring search: graph exceeds max_n=" + std::to_string(limits.max_n));
  const int n = g.vertex_count();
  if (n == 0) {
    if (coloring_out) coloring_out->clear();
    return 0;
  }
  // Descending degree order (ties to lower index) tightens the search.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  const int lower = clique_number(g, limits);
  std::vector<int> coloring;
  for (int k = std::max(lower, 1); k <= n; ++k) {
    if (color_with(g, order, k, coloring)) {
      if (coloring_out) *coloring_out = coloring;
      return k;
    }
  }
  throw std::logic_error("chromatic number search failed to terminate by k=n");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      comp.push_back(v);
      std::uint64_t nb = g.neighbor_mask(v);
      while (nb) {
        const int u = std::countr_zero(nb) + 1;
        nb &= nb - 1;
        if (!seen[u]) {
          seen[u] = true;
          q.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

InvariantBundle graph_invariants(const Graph& g, const Limits& limits) {
  InvariantBundle b;
  b.n = g.vertex_count();
  b.m = g.edge_count();
  for (int v = 1; v <= b.n; ++v) b.max_degree = std::max(b.max_degree, g.degree(v));
  b.max_clique = max_clique(g, limits);
  b.clique_number = static_cast<int>(b.max_clique.size());
  b.chromatic_number = chromatic_number(g, &b.coloring, limits);
  b.components = connected_components(g);
  return b;
}

namespace {

struct BronKerbosch {
  const Graph& g;
  std::vector<std::vector<int>> out;

  void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (!p && !x) {
      out.push_back(mask_to_vertices(r));
      return;
    }
    // Pivot: vertex of P|X with most neighbors in P, lowest index on ties.
    int pivot = -1, best = -1;
    std::uint64_t px = p | x;
    while (px) {
      const int u = std::countr_zero(px) + 1;
      px &= px - 1;
      const int cnt = popcount(p & g.neighbor_mask(u));
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    std::uint64_t ext = p & ~g.neighbor_mask(pivot);
    while (ext) {
      const int v = std::countr_zero(ext) + 1;
      const std::uint64_t bit = 1ull << (v - 1);
      ext &= ext - 1;
      run(r | bit, p & g.neighbor_mask(v), x & g.neighbor_mask(v));
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, const Limits& limits) {
  check_guard(g.vertex_count() <= limits.max_n,
              "maximal cliques: graph exceeds max_n=" + std::to_string(limits.max_n));
  if (g.vertex_count() == 0) return {};
  BronKerbosch bk{g};
  const std::uint64_t all =
      g.vertex_count() == 64 ? ~0ull : (1ull << g.vertex_count()) - 1;
  bk.run(0, all, 0);
  std::sort(bk.out.begin(), bk.out.end());
  return bk.out;
}

std::vector<std::vector<std::int64_t>> stable_set_indicators(const Graph& g,
                                                             const Limits& limits) {
  check_guard(g.vertex_count() <= limits.max_n,
              "stable set enumeration: graph exceeds max_n=" +
                  std::to_string(limits.max_n));
  const int n = g.vertex_count();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(n, 0);
  // Branch 0 before 1 at each position: output arrives in lexicographic
  // order of the indicator vector.
  std::uint64_t chosen = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    cur[v - 1] = 0;
    self(self, v + 1);
    if (!(chosen & g.neighbor_mask(v))) {
      cur[v - 1] = 1;
      chosen |= 1ull << (v - 1);
      self(self, v + 1);
      chosen &= ~(1ull << (v - 1));
      cur[v - 1] = 0;
    }
  };
  dfs(dfs, 1);
  return out;
}

bool is_stable_set(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != g.vertex_count()) return false;
  for (const auto& [i, j] : g.edges())
    if (coloring[i - 1] == coloring[j - 1]) return false;
  for (int c : coloring)
    if (c < 1) return false;
  return true;
}

}  // namespace stabset
