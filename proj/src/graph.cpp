#include "cram/graph.hpp"

#include <bit>

namespace cram {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > 64) throw TooLarge("graph order must be in [0,64], got " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw BadVertex("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ") on n=" + std::to_string(n_));
  adj_[u] |= 1ull << v;
  adj_[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~(1ull << v);
  adj_[v] &= ~(1ull << u);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::int64_t Graph::edge_count() const {
  std::int64_t s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < n_; ++v) {
    std::uint64_t lo = adj_[v] & ((1ull << v) - 1);
    while (lo) {
      int u = std::countr_zero(lo);
      lo &= lo - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw BadArgs("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph prism_graph() {
  Graph g(6);
  for (int v = 0; v < 3; ++v) {
    g.add_edge(v, (v + 1) % 3);
    g.add_edge(3 + v, 3 + (v + 1) % 3);
    g.add_edge(v, 3 + v);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);        // outer C5
    g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    g.add_edge(v, 5 + v);
  }
  return g;
}

Graph complement(const Graph& g) {
  int n = g.n();
  Graph c(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph graph_minus(const Graph& g, const Graph& h) {
  if (g.n() != h.n()) throw BadArgs("graph_minus: orders differ");
  Graph out(g.n());
  for (auto [u, v] : h.edges())
    if (!g.has_edge(u, v))
      throw EdgeNotSubset("graph_minus: edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                          ") not present in minuend");
  for (auto [u, v] : g.edges())
    if (!h.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<std::uint64_t> components(const Graph& g) {
  int n = g.n();
  std::vector<std::uint64_t> out;
  std::uint64_t seen = 0;
  for (int v = 0; v < n; ++v) {
    if ((seen >> v) & 1u) continue;
    std::uint64_t comp = 1ull << v, frontier = 1ull << v;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t nb = g.neighbors(x) & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool induces_clique(const Graph& g, std::uint64_t mask) {
  std::uint64_t rest = mask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((g.neighbors(v) & mask) != (mask & ~(1ull << v))) return false;
  }
  return true;
}

}  // namespace cram
