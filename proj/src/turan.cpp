#include "cram/turan.hpp"

#include <bit>

#include "cram/mis.hpp"

namespace cram {

TuranParams turan_params(int m, int n) {
  if (m < 0) throw BadArgs("turan_params: m must be >= 0");
  if (n < 1) throw BadArgs("turan_params: n must be >= 1");
  TuranParams p;
  p.m = m;
  p.n = n;
  p.q = m / n;
  p.r = m % n;
  p.min_edges = static_cast<std::int64_t>(p.r) * binom2(p.q + 1) +
                static_cast<std::int64_t>(n - p.r) * binom2(p.q);
  // Same count in closed form; the two must agree.
  std::int64_t alt = static_cast<std::int64_t>(p.q) * (m - n + p.r) / 2;
  if (alt != p.min_edges) throw std::logic_error("turan_params: edge count identities disagree");
  return p;
}

Graph turan_graph(int m, int n) {
  TuranParams p = turan_params(m, n);
  Graph g(m);
  int next = 0;
  for (int b = 0; b < n; ++b) {
    int size = b < p.r ? p.q + 1 : p.q;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) g.add_edge(next + i, next + j);
    next += size;
  }
  return g;
}

namespace {

// G restricted to union-of-cliques shape matching turan_graph(m,n): components
// all cliques, r of size q+1 and n-r of size q.  Equivalent to a full
// isomorphism test against that target.
bool is_turan_shaped(const Graph& g, const TuranParams& p) {
  int big = 0, small = 0;
  for (std::uint64_t comp : components(g)) {
    if (!induces_clique(g, comp)) return false;
    int sz = std::popcount(comp);
    if (sz == p.q + 1)
      ++big;
    else if (sz == p.q)
      ++small;
    else
      return false;
  }
  return big == p.r && small == p.n - p.r;
}

}  // namespace

ExtremalCheckReport check_extremal_lemma(int max_m) {
  if (max_m < 2 || max_m > 8) throw TooLarge("check_extremal_lemma: max_m must be in [2,8]");
  ExtremalCheckReport rep;
  rep.max_m = max_m;
  for (int m = 2; m <= max_m; ++m) {
    std::vector<TuranParams> params;
    for (int n = 2; n <= m; ++n) params.push_back(turan_params(m, n));
    int pairs = m * (m - 1) / 2;
    std::vector<std::pair<int, int>> pr;
    for (int v = 1; v < m; ++v)
      for (int u = 0; u < v; ++u) pr.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      Graph g(m);
      for (int e = 0; e < pairs; ++e)
        if ((mask >> e) & 1u) g.add_edge(pr[e].first, pr[e].second);
      std::int64_t edges = std::popcount(mask);
      int alpha = independence_number(g);
      ++rep.graphs_checked;
      for (const TuranParams& p : params) {
        ++rep.pairs_checked;
        if (edges < p.min_edges && alpha < p.n + 1) ++rep.violations;
        if (edges == p.min_edges && alpha == p.n) {
          ++rep.equality_cases;
          if (!is_turan_shaped(g, p)) ++rep.violations;
        }
      }
    }
  }
  return rep;
}

}  // namespace cram
