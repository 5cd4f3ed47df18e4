#include "stabset/idp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stabset {

bool lattice_spanning(const VPolytope& p) {
  const auto& verts = p.vertices();
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    std::vector<Int> row(p.dim());
    for (int j = 0; j < p.dim(); ++j) row[j] = verts[i][j] - verts[0][j];
    rows.push_back(std::move(row));
  }
  const HNFResult hnf = hermite_normal_form(rows);
  return hnf.rank == p.dim() && abs(hnf.lattice_index) == 1;
}

namespace {

struct Decomposer {
  const VPolytope& p;
  const Limits& limits;
  std::vector<Point> generators;  // lattice points of P, descending coord sum
  std::set<Point> generator_set;
  std::map<std::pair<Point, int>, bool> memo;

  bool decomposes(const Point& x, int k) {
    if (k == 1) return generator_set.count(x) > 0;
    const auto key = std::make_pair(x, k);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : generators) {
      Point rest(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) rest[j] = x[j] - g[j];
      // The remainder must lie in (k-1)P or this branch is dead.
      if (!contains(p, k - 1, rest, limits)) continue;
      if (decomposes(rest, k - 1)) {
        ok = true;
        break;
      }
    }
    memo[key] = ok;
    return ok;
  }
};

}  // namespace

IdpReport is_idp_up_to(const VPolytope& p, int k_max, const Limits& limits) {
  if (k_max < 2) throw std::invalid_argument("idp check: need k_max >= 2");
  check_guard(k_max <= limits.idp_k_max,
              "idp check: k_max exceeds idp_k_max=" +
                  std::to_string(limits.idp_k_max));
  // Force the facet cache: membership pruning and lattice-point DFS both
  // feed on it.
  p.facets(limits);

  Decomposer dec{p, limits};
  dec.generators = lattice_points(p, 1, limits);
  dec.generator_set.insert(dec.generators.begin(), dec.generators.end());
  std::stable_sort(dec.generators.begin(), dec.generators.end(),
                   [](const Point& a, const Point& b) {
                     std::int64_t sa = 0, sb = 0;
                     for (auto v : a) sa += v;
                     for (auto v : b) sb += v;
                     return sa > sb;
                   });

  IdpReport report;
  for (int k = 2; k <= k_max; ++k) {
    for (const auto& x : lattice_points(p, k, limits)) {
      if (!dec.decomposes(x, k)) {
        report.pass = false;
        report.checked_up_to = k;
        report.failing_k = k;
        report.failing_point = x;
        return report;
      }
    }
  }
  report.pass = true;
  report.checked_up_to = k_max;
  return report;
}

}  // namespace stabset
