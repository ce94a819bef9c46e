#pragma once

#include <cstdint>

#include "cram/graph.hpp"

namespace cram {

// Parameters of the union-of-cliques graph on m vertices in n parts of sizes
// as equal as possible: m = n*q + r with 0 <= r < n, r parts of size q+1 and
// n-r parts of size q.  min_edges is its edge count, the least number of edges
// of any graph of order m with independence number at most n.
struct TuranParams {
  int m = 0, n = 0, q = 0, r = 0;
  std::int64_t min_edges = 0;
};

TuranParams turan_params(int m, int n);

// The graph itself: r blocks of size q+1 first, then n-r blocks of size q,
// vertices numbered block by block.  Empty blocks (q = 0, i.e. m < n)
// collapse; the result is then m isolated vertices.
Graph turan_graph(int m, int n);

struct ExtremalCheckReport {
  int max_m = 0;
  std::int64_t graphs_checked = 0;  // labeled graphs, all orders m <= max_m
  std::int64_t pairs_checked = 0;   // (graph, n) clause evaluations
  std::int64_t equality_cases = 0;  // |E| == min_edges and alpha == n
  std::int64_t violations = 0;
};

// Exhaustively verifies, for every m <= max_m, 2 <= n <= m and every labeled
// graph G of order m: |E(G)| < min_edges(m,n) implies alpha(G) >= n+1, and
// |E(G)| == min_edges(m,n) with alpha(G) == n implies G is isomorphic to
// turan_graph(m,n).  max_m <= 8.
ExtremalCheckReport check_extremal_lemma(int max_m);

}  // namespace cram
