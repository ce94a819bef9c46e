#include "cram/enumerate.hpp"

#include <bit>

#include "cram/iso.hpp"

namespace cram {
namespace {

struct Enumerator {
  int n;
  GraphConstraints c;
  bool up_to_iso;
  const std::function<void(const Graph&)>* sink;
  std::int64_t count = 0;
  Graph g;

  bool block_ok(int v, std::uint64_t mask) const {
    if (c.triangle_free) {
      std::uint64_t m = mask;
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        if (g.neighbors(u) & mask) return false;
      }
    }
    if (c.k4_free) {
      std::uint64_t m = mask;
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        std::uint64_t common = g.neighbors(u) & mask & ~((1ull << (u + 1)) - 1);
        while (common) {
          int w = std::countr_zero(common);
          common &= common - 1;
          if (g.neighbors(u) & g.neighbors(w) & mask) return false;
        }
      }
    }
    return true;
  }

  bool degrees_ok(int placed) const {
    if (c.regular_degree) {
      int d = *c.regular_degree;
      for (int x = 0; x < placed; ++x) {
        int dx = g.degree(x);
        if (dx > d) return false;
        // Each still-unplaced vertex contributes at most one edge to x.
        if (dx + (n - placed) < d) return false;
      }
    }
    if (c.some_vertex_degree_at_most) {
      int cap = *c.some_vertex_degree_at_most;
      bool possible = placed < n;  // an unplaced vertex can still end low
      for (int x = 0; x < placed && !possible; ++x)
        if (g.degree(x) <= cap) possible = true;
      if (!possible) return false;
    }
    return true;
  }

  bool final_ok() const {
    if (c.regular_degree)
      for (int x = 0; x < n; ++x)
        if (g.degree(x) != *c.regular_degree) return false;
    if (c.some_vertex_degree_at_most) {
      bool found = false;
      for (int x = 0; x < n && !found; ++x)
        if (g.degree(x) <= *c.some_vertex_degree_at_most) found = true;
      if (!found) return false;
    }
    return true;
  }

  void place(int v) {
    if (v == n) {
      if (!final_ok()) return;
      ++count;
      (*sink)(g);
      return;
    }
    for (std::uint64_t mask = 0; mask < (1ull << v); ++mask) {
      if (c.regular_degree && std::popcount(mask) > *c.regular_degree) continue;
      if (!block_ok(v, mask)) continue;
      std::uint64_t m = mask;
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        g.add_edge(u, v);
      }
      bool ok = degrees_ok(v + 1);
      if (ok && up_to_iso) {
        Graph prefix(v + 1);
        for (auto [a, b] : g.edges())
          if (b <= v) prefix.add_edge(a, b);
        ok = is_canonical(prefix);
      }
      if (ok) place(v + 1);
      m = mask;
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        g.remove_edge(u, v);
      }
    }
  }
};

}  // namespace

std::int64_t enumerate_graphs(int n, const GraphConstraints& c, bool up_to_iso,
                              const std::function<void(const Graph&)>& sink) {
  if (n < 0 || n > 12) throw TooLarge("enumeration supports n <= 12, got " + std::to_string(n));
  Enumerator e{n, c, up_to_iso, &sink};
  e.g = Graph(n);
  if (n == 0) {
    if (e.final_ok()) {
      e.count = 1;
      sink(e.g);
    }
    return e.count;
  }
  e.place(0);
  return e.count;
}

std::vector<Graph> collect_graphs(int n, const GraphConstraints& c, bool up_to_iso) {
  std::vector<Graph> out;
  enumerate_graphs(n, c, up_to_iso, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cram
