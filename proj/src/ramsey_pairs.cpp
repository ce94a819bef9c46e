#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cram/mis.hpp"
#include "cram/search.hpp"

namespace cram {

namespace {

Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
  Graph g(n);
  for (std::size_t e = 0; e < pairs.size(); ++e)
    if (mask >> e & 1u) g.add_edge(pairs[e].first, pairs[e].second);
  return g;
}

}  // namespace

bool decide_via_ramsey_pairs(int m1, int m2, int m3, int n) {
  if (m1 <= 2 || m2 <= 2 || m3 <= 2) throw BadArgs("decide_via_ramsey_pairs: thresholds must exceed 2");
  if (n < 1) throw BadArgs("decide_via_ramsey_pairs: need n >= 1");
  if (n > 7) throw TooLarge("decide_via_ramsey_pairs: order above 7");

  int E = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(E);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);

  // Labeled graphs with clique number below m3 and independence number below
  // m2, as edge masks.
  std::vector<std::uint32_t> ramsey;
  for (std::uint32_t mask = 0; mask < (1u << E); ++mask) {
    Graph g = graph_from_mask(n, pairs, mask);
    if (!has_clique_of_size(g, m3) && !has_independent_set(g, m2)) ramsey.push_back(mask);
  }

  std::unordered_set<std::uint32_t> members(ramsey.begin(), ramsey.end());
  std::unordered_map<std::uint32_t, bool> diff_ok;  // difference mask -> alpha >= m1
  for (std::uint32_t g : ramsey) {
    // Subgraphs H of G on the same vertex set, H = G included.
    std::uint32_t s = g;
    for (;;) {
      if (members.count(s)) {
        std::uint32_t d = g & ~s;
        auto it = diff_ok.find(d);
        bool ok;
        if (it != diff_ok.end()) {
          ok = it->second;
        } else {
          ok = has_independent_set(graph_from_mask(n, pairs, d), m1);
          diff_ok.emplace(d, ok);
        }
        if (!ok) return false;
      }
      if (s == 0) break;
      s = (s - 1) & g;
    }
  }
  return true;
}

}  // namespace cram
