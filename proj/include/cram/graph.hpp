#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cram/common.hpp"

namespace cram {

// Simple undirected graph on vertices 0..n-1, n <= 64.  One adjacency bitmask
// per vertex; bit y of adj[x] is set iff {x,y} is an edge.  External interfaces
// (JSON, CLI) use 1-based vertex labels, everything in here is 0-based.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  std::int64_t edge_count() const;
  // Edges as (u,v) with u < v, colex order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
// Prism = two triangles joined by a matching (the 3-prism, order 6).
Graph prism_graph();
Graph petersen_graph();
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Edge-set difference g minus h on the same vertex set.  Every edge of h must
// be present in g, else EdgeNotSubset.
Graph graph_minus(const Graph& g, const Graph& h);

// Connected component vertex sets, each as a bitmask, ordered by least vertex.
std::vector<std::uint64_t> components(const Graph& g);

// Whether the vertices of `mask` induce a complete subgraph.
bool induces_clique(const Graph& g, std::uint64_t mask);

}  // namespace cram
