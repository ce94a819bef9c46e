#include "cram/mis.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace cram {
namespace {

// Tomita-style expansion.  Candidates in P are greedily colored; vertices are
// then tried in reverse color order so the bound size+color prunes early.
struct CliqueSolver {
  const std::uint64_t* adj;
  int best = 0;

  void expand(std::uint64_t P, int size) {
    if (!P) {
      if (size > best) best = size;
      return;
    }
    // Greedy sequential coloring of P.
    std::array<int, 64> order{}, color{};
    int cnt = 0;
    std::uint64_t left = P;
    for (int c = 1; left; ++c) {
      std::uint64_t cls = left;
      while (cls) {
        int v = std::countr_zero(cls);
        cls &= ~adj[v];
        cls &= ~(1ull << v);
        left &= ~(1ull << v);
        order[cnt] = v;
        color[cnt] = c;
        ++cnt;
      }
    }
    std::uint64_t cur = P;
    for (int i = cnt - 1; i >= 0; --i) {
      if (size + color[i] <= best) return;
      int v = order[i];
      expand(cur & adj[v], size + 1);
      cur &= ~(1ull << v);
    }
  }
};

bool clique_exists(const std::uint64_t* adj, std::uint64_t P, int s) {
  if (s <= 0) return true;
  if (std::popcount(P) < s) return false;
  while (P) {
    int v = std::countr_zero(P);
    P &= P - 1;
    if (clique_exists(adj, P & adj[v], s - 1)) return true;
  }
  return false;
}

}  // namespace

int clique_number(const Graph& g) {
  int n = g.n();
  if (n == 0) return 0;
  std::array<std::uint64_t, 64> adj{};
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  CliqueSolver s{adj.data()};
  s.best = 1;
  std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  s.expand(all, 0);
  return s.best;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

bool has_clique_of_size(const Graph& g, int s) {
  if (s <= 0) return true;
  if (s > g.n()) return false;
  std::array<std::uint64_t, 64> adj{};
  for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  std::uint64_t all = g.n() == 64 ? ~0ull : (1ull << g.n()) - 1;
  return clique_exists(adj.data(), all, s);
}

bool has_independent_set(const Graph& g, int s) { return has_clique_of_size(complement(g), s); }

}  // namespace cram
