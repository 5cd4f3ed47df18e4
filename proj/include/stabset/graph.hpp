#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stabset/rational.hpp"

namespace stabset {

using Edge = std::pair<int, int>;  // always i < j

// Simple undirected graph on vertices 1..n. Immutable after construction;
// all operations below are pure and safe to call concurrently.
class Graph {
 public:
  // Edges are validated (1 <= i < j <= n, no duplicates) and stored sorted.
  Graph(int n, std::vector<Edge> edges, std::string label = "");

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& label() const { return label_; }

  bool adjacent(int u, int v) const {
    return u != v && (adj_[u] >> (v - 1)) & 1u;
  }
  int degree(int v) const;
  // Bit (u-1) set iff u is a neighbor of v.
  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }

  // Set when this graph was produced by line_graph(); used by the codegree
  // dispatcher to reach the matching formula.
  std::shared_ptr<const Graph> line_preimage() const { return line_preimage_; }

  // Generators. Vertex numbering is deterministic and documented per
  // generator so polytope coordinates are reproducible.
  static Graph cycle(int k);      // vertices 1..k, edges {i,i+1} and {1,k}
  static Graph complete(int k);   // all pairs
  static Graph path(int k);       // k vertices, k-1 edges {i,i+1}
  static Graph empty(int k);      // k isolated vertices
  // Parts numbered consecutively: part 1 gets 1..k1, part 2 gets k1+1..k1+k2, ...
  static Graph complete_multipartite(const std::vector<int>& parts);
  // Erdos-Renyi G(n,p) with exact rational p and SplitMix64 draws, one per
  // vertex pair in lexicographic order. Reproducible within this
  // implementation; cross-implementation bit equality is a non-goal.
  static Graph random(int n, const Rational& p, std::uint64_t seed);

  // Transforms. All return new graphs; numbering documented per operation.
  Graph complemented() const;
  // Vertex k of the line graph is the k-th edge of this graph in
  // lexicographic order; two line-graph vertices are adjacent iff the
  // corresponding edges share an endpoint. Requires at least one edge.
  Graph line_graph() const;
  // g's vertices keep their numbers, h's are shifted by g.vertex_count().
  static Graph join(const Graph& g, const Graph& h);
  static Graph disjoint_union(const Graph& g, const Graph& h);
  // Keeps the listed vertices (nonempty, deduplicated), renumbered 1..|S|
  // in increasing order of their original labels.
  Graph induced(const std::vector<int>& vertices) const;

  // Edge-list document: first line "n <edge count>", then one "i j" line
  // per edge, 1-based. Blank lines and lines starting with '#' ignored.
  static Graph from_edge_list(const std::string& text);
  std::string to_edge_list() const;

  bool same_edges(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;  // index 0 unused
  std::string label_;
  std::shared_ptr<const Graph> line_preimage_;
};

// SplitMix64: the fixed PRNG behind Graph::random and every seeded sweep.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace stabset
