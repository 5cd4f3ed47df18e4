#include "stabset/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stabset {

namespace {

std::vector<std::uint64_t> build_adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::uint64_t> adj(n + 1, 0);
  for (const auto& [i, j] : edges) {
    adj[i] |= 1ull << (j - 1);
    adj[j] |= 1ull << (i - 1);
  }
  return adj;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::string label)
    : n_(n), edges_(std::move(edges)), label_(std::move(label)) {
  if (n_ < 0 || n_ > 64)
    throw std::invalid_argument("graph: vertex count must be in 0..64");
  for (auto& [i, j] : edges_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j)
      throw std::invalid_argument("graph: edge endpoints must satisfy 1 <= i < j <= n");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: duplicate edge");
  adj_ = build_adjacency(n_, edges_);
}

int Graph::degree(int v) const {
  return static_cast<int>(__builtin_popcountll(adj_[v]));
}

Graph Graph::cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
  std::vector<Edge> e;
  for (int i = 1; i < k; ++i) e.push_back({i, i + 1});
  e.push_back({1, k});
  return Graph(k, std::move(e), "cycle(" + std::to_string(k) + ")");
}

Graph Graph::complete(int k) {
  if (k < 1) throw std::invalid_argument("complete: need k >= 1");
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) e.push_back({i, j});
  return Graph(k, std::move(e), "complete(" + std::to_string(k) + ")");
}

Graph Graph::path(int k) {
  if (k < 1) throw std::invalid_argument("path: need k >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < k; ++i) e.push_back({i, i + 1});
  return Graph(k, std::move(e), "path(" + std::to_string(k) + ")");
}

Graph Graph::empty(int k) {
  if (k < 1) throw std::invalid_argument("empty: need k >= 1");
  return Graph(k, {}, "empty(" + std::to_string(k) + ")");
}

Graph Graph::complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty())
    throw std::invalid_argument("complete_multipartite: need at least one part");
  int n = 0;
  std::vector<int> part_of;  // part index per vertex, filled below
  std::string label = "complete_multipartite(";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1)
      throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    if (p) label += ",";
    label += std::to_string(parts[p]);
    for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
    n += parts[p];
  }
  label += ")";
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (part_of[i - 1] != part_of[j - 1]) e.push_back({i, j});
  return Graph(n, std::move(e), label);
}

Graph Graph::random(int n, const Rational& p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random: need n >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("random: need 0 <= p <= 1");
  SplitMix64 rng(seed);
  // Include {i,j} iff draw/2^64 < p, compared exactly: draw * den < num * 2^64.
  const Int num = rational_num(p), den = rational_den(p);
  const Int two64 = Int(1) << 64;
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Int draw = rng.next();
      if (draw * den < num * two64) e.push_back({i, j});
    }
  return Graph(n, std::move(e),
               "random(" + std::to_string(n) + "," + to_string(p) + "," +
                   std::to_string(seed) + ")");
}

Graph Graph::complemented() const {
  std::vector<Edge> e;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!adjacent(i, j)) e.push_back({i, j});
  return Graph(n_, std::move(e), "complement(" + label_ + ")");
}

Graph Graph::line_graph() const {
  if (edges_.empty())
    throw std::invalid_argument("line_graph: source graph has no edges");
  const int m = edge_count();
  std::vector<Edge> e;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto& [i, j] = edges_[a];
      const auto& [k, l] = edges_[b];
      if (i == k || i == l || j == k || j == l) e.push_back({a + 1, b + 1});
    }
  Graph lg(m, std::move(e), "line(" + label_ + ")");
  lg.line_preimage_ = std::make_shared<Graph>(*this);
  return lg;
}

Graph Graph::join(const Graph& g, const Graph& h) {
  const int n = g.n_ + h.n_;
  std::vector<Edge> e = g.edges_;
  for (const auto& [i, j] : h.edges_) e.push_back({i + g.n_, j + g.n_});
  for (int i = 1; i <= g.n_; ++i)
    for (int j = 1; j <= h.n_; ++j) e.push_back({i, j + g.n_});
  return Graph(n, std::move(e), "join(" + g.label_ + "," + h.label_ + ")");
}

Graph Graph::disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.n_ + h.n_;
  std::vector<Edge> e = g.edges_;
  for (const auto& [i, j] : h.edges_) e.push_back({i + g.n_, j + g.n_});
  return Graph(n, std::move(e), "union(" + g.label_ + "," + h.label_ + ")");
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> keep = vertices;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("induced: empty vertex set");
  if (keep.front() < 1 || keep.back() > n_)
    throw std::invalid_argument("induced: vertex out of range");
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < keep.size(); ++i)
    renumber[keep[i]] = static_cast<int>(i) + 1;
  std::vector<Edge> e;
  for (const auto& [i, j] : edges_)
    if (renumber.count(i) && renumber.count(j))
      e.push_back({renumber[i], renumber[j]});
  std::string label = "induced(" + label_ + ",[";
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (i) label += ",";
    label += std::to_string(keep[i]);
  }
  label += "])";
  return Graph(static_cast<int>(keep.size()), std::move(e), std::move(label));
}

Graph Graph::from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": expected header \"n m\"");
      continue;
    }
    int i, j;
    if (!(fields >> i >> j))
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected \"i j\"");
    edges.push_back({i, j});
  }
  if (n < 0) throw std::invalid_argument("edge list: missing header line");
  if (static_cast<int>(edges.size()) != m)
    throw std::invalid_argument("edge list: header announced " + std::to_string(m) +
                                " edges, found " + std::to_string(edges.size()));
  return Graph(n, std::move(edges), "edge_list(n=" + std::to_string(n) + ")");
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << n_ << " " << edges_.size() << "\n";
  for (const auto& [i, j] : edges_) out << i << " " << j << "\n";
  return out.str();
}

}  // namespace stabset
