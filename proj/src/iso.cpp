#include "cram/iso.hpp"

#include <algorithm>
#include <array>

namespace cram {
namespace {

struct CanonState {
  const Graph* g;
  int n;
  std::array<int, 64> perm{};
  std::uint64_t used = 0;
  bool smaller_found = false;
  std::int64_t aut = 0;

  // Explores labelings whose encoding prefix ties the identity encoding.
  // Any labeling that dips below the identity encoding sets smaller_found;
  // labelings that tie in full are automorphisms.
  void dfs(int p) {
    if (smaller_found) return;
    if (p == n) {
      ++aut;
      return;
    }
    for (int u = 0; u < n; ++u) {
      if ((used >> u) & 1u) continue;
      int cmp = 0;
      for (int i = 0; i < p; ++i) {
        bool cb = g->has_edge(perm[i], u);
        bool ib = g->has_edge(i, p);
        if (cb != ib) {
          cmp = cb ? 1 : -1;
          break;
        }
      }
      if (cmp < 0) {
        smaller_found = true;
        return;
      }
      if (cmp == 0) {
        perm[p] = u;
        used |= 1ull << u;
        dfs(p + 1);
        used &= ~(1ull << u);
        if (smaller_found) return;
      }
    }
  }
};

struct MinCodeState {
  const Graph* g;
  int n;
  std::vector<std::uint8_t> best;  // one byte per pair bit
  std::vector<std::uint8_t> cur;
  std::array<int, 64> perm{};
  std::uint64_t used = 0;

  void dfs(int p, int offset) {
    if (p == n) return;
    for (int u = 0; u < n; ++u) {
      if ((used >> u) & 1u) continue;
      int cmp = 0;
      for (int i = 0; i < p; ++i) {
        std::uint8_t cb = g->has_edge(perm[i], u) ? 1 : 0;
        cur[offset + i] = cb;
        if (cmp == 0 && cb != best[offset + i]) cmp = cb ? 1 : -1;
      }
      if (cmp > 0) continue;
      if (cmp < 0) {
        // New best prefix; pad the tail with ones so deeper comparisons stay
        // meaningful until overwritten by a completed labeling.
        std::copy(cur.begin() + offset, cur.begin() + offset + p, best.begin() + offset);
        std::fill(best.begin() + offset + p, best.end(), 1);
      }
      perm[p] = u;
      used |= 1ull << u;
      dfs(p + 1, offset + p);
      used &= ~(1ull << u);
    }
  }
};

}  // namespace

std::vector<std::uint64_t> graph_code(const Graph& g) {
  int n = g.n();
  std::vector<std::uint64_t> out((binom2(n) + 63) / 64, 0);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) out[bit / 64] |= 1ull << (bit % 64);
      ++bit;
    }
  return out;
}

bool is_canonical(const Graph& g) {
  CanonState s{&g, g.n()};
  s.dfs(0);
  return !s.smaller_found;
}

std::vector<std::uint64_t> canonical_code(const Graph& g) {
  int n = g.n();
  int bits = static_cast<int>(binom2(n));
  MinCodeState s{&g, n};
  s.best.assign(bits, 0);
  s.cur.assign(bits, 0);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) s.best[bit++] = g.has_edge(u, v) ? 1 : 0;
  s.dfs(0, 0);
  std::vector<std::uint64_t> out((bits + 63) / 64, 0);
  for (int i = 0; i < bits; ++i)
    if (s.best[i]) out[i / 64] |= 1ull << (i % 64);
  return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

std::int64_t automorphism_count(const Graph& g) {
  CanonState s{&g, g.n()};
  s.dfs(0);
  // The count is label-independent, so run on the canonical labeling if the
  // identity labeling was beaten somewhere.
  if (s.smaller_found) {
    auto code = canonical_code(g);
    Graph c(g.n());
    int bit = 0;
    for (int v = 1; v < g.n(); ++v)
      for (int u = 0; u < v; ++u) {
        if ((code[bit / 64] >> (bit % 64)) & 1u) c.add_edge(u, v);
        ++bit;
      }
    CanonState s2{&c, c.n()};
    s2.dfs(0);
    return s2.aut;
  }
  return s.aut;
}

}  // namespace cram
