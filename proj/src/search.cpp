#include "cram/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cram/cache.hpp"
#include "cram/turan.hpp"

namespace cram {

namespace {

using Clock = std::chrono::steady_clock;

// Read-only problem data, shared across worker searchers.
struct Problem {
  int n = 0, k = 0, E = 0;
  std::vector<int> m;  // thresholds, non-increasing
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::int64_t> tneed;      // minimum class edge counts
  std::vector<int> cap1;                // per-color degree caps
  std::vector<std::vector<int>> cap2;   // pairwise degree caps
  std::vector<int> gstart;              // first color with the same threshold
  SearchConfig cfg;
  Clock::time_point deadline;
};

Problem build_problem(int n, const Query& q, const SearchConfig& cfg, BoundsEngine& engine,
                      Clock::time_point deadline) {
  Problem P;
  P.n = n;
  P.k = q.k();
  P.E = n * (n - 1) / 2;
  P.m = q.m;
  P.cfg = cfg;
  P.deadline = deadline;
  P.pairs.reserve(P.E);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) P.pairs.emplace_back(u, v);
  P.tneed.resize(P.k);
  for (int i = 0; i < P.k; ++i) P.tneed[i] = turan_params(n, P.m[i] - 1).min_edges;
  P.gstart.resize(P.k);
  for (int i = 0; i < P.k; ++i) P.gstart[i] = (i > 0 && P.m[i] == P.m[i - 1]) ? P.gstart[i - 1] : i;
  P.cap1.assign(P.k, INT_MAX);
  P.cap2.assign(P.k, std::vector<int>(P.k, INT_MAX));
  if (cfg.degree_prune) {
    auto reduced_hi = [&](const std::vector<int>& keep) -> int {
      std::vector<int> r = q.m;
      for (int j = 0; j < P.k; ++j)
        if (std::find(keep.begin(), keep.end(), j) == keep.end()) --r[j];
      auto b = engine.bound(Query::of(r));
      return b.hi ? *b.hi - 1 : INT_MAX;
    };
    for (int i = 0; i < P.k; ++i) P.cap1[i] = reduced_hi({i});
    for (int i = 0; i < P.k; ++i)
      for (int j = i + 1; j < P.k; ++j) P.cap2[i][j] = P.cap2[j][i] = reduced_hi({i, j});
  }
  return P;
}

// Coordination for the parallel mode.
struct Shared {
  std::atomic<bool> found{false};
  std::atomic<bool> timed{false};
  std::mutex mu;
  std::optional<EdgeColoring> witness;
  std::vector<int> frontier;
  SearchStats stats;
};

struct Searcher {
  const Problem& P;
  Shared* shared = nullptr;

  std::vector<int> col;
  std::vector<std::vector<std::uint64_t>> adj;  // [color][vertex]
  std::vector<std::vector<int>> deg;            // [vertex][color]
  std::vector<std::int64_t> cnt;
  SearchStats stats;
  std::vector<int> frontier;
  bool timed_out = false;
  bool frontier_set = false;
  std::int64_t tick_ = 0;

  explicit Searcher(const Problem& p, Shared* sh = nullptr) : P(p), shared(sh) {
    col.assign(P.E, -1);
    adj.assign(P.k, std::vector<std::uint64_t>(P.n, 0));
    deg.assign(P.n, std::vector<int>(P.k, 0));
    cnt.assign(P.k, 0);
  }

  bool stop() {
    if (timed_out) return true;
    if ((++tick_ & 4095) == 0) {
      if (Clock::now() >= P.deadline) timed_out = true;
      if (shared && shared->found.load(std::memory_order_relaxed)) return true;
    }
    return timed_out;
  }

  void assign(int r, int c) {
    auto [u, v] = P.pairs[r];
    col[r] = c;
    adj[c][u] |= 1ull << v;
    adj[c][v] |= 1ull << u;
    ++deg[u][c];
    ++deg[v][c];
    ++cnt[c];
  }

  void unassign(int r, int c) {
    auto [u, v] = P.pairs[r];
    col[r] = -1;
    adj[c][u] &= ~(1ull << v);
    adj[c][v] &= ~(1ull << u);
    --deg[u][c];
    --deg[v][c];
    --cnt[c];
  }

  // A color opening a new class must be the least unused one among the
  // colors with the same threshold.
  bool symmetry_reject(int c) const {
    if (!P.cfg.symmetry_prune || cnt[c] != 0) return false;
    for (int c2 = P.gstart[c]; c2 < c; ++c2)
      if (cnt[c2] == 0) return true;
    return false;
  }

  // Independent set of the given size inside mask, in the class with
  // adjacency rows a.
  static bool indep_in_mask(const std::vector<std::uint64_t>& a, std::uint64_t mask, int need) {
    if (need <= 0) return true;
    while (mask) {
      if (std::popcount(mask) < need) return false;
      int v = std::countr_zero(mask);
      if (indep_in_mask(a, mask & ~a[v] & ~(1ull << v), need - 1)) return true;
      mask &= ~(1ull << v);
    }
    return false;
  }

  // Prune checks for the assignment of color c to pair r; state already
  // updated.  True: subtree still viable.
  bool admissible(int r, int c) {
    auto [u, v] = P.pairs[r];
    if (P.cfg.degree_prune) {
      for (int x : {u, v}) {
        if (deg[x][c] > P.cap1[c]) {
          ++stats.degree_prunes;
          return false;
        }
        for (int j = 0; j < P.k; ++j)
          if (j != c && deg[x][c] + deg[x][j] > P.cap2[c][j]) {
            ++stats.degree_prunes;
            return false;
          }
      }
    }
    if (P.cfg.count_prune) {
      std::int64_t rem = P.E - r - 1;
      for (int i = 0; i < P.k; ++i)
        if (cnt[i] + rem < P.tneed[i]) {
          ++stats.count_prunes;
          return false;
        }
    }
    if (P.cfg.subset_prune) {
      // All pairs inside [0..v] are colored, so an independent set of size
      // m_i - 2 below u that avoids the class-i neighborhoods of u and v
      // completes to a forced independent m_i-set through {u,v}.
      std::uint64_t below_u = u == 0 ? 0 : (1ull << u) - 1;
      for (int i = 0; i < P.k; ++i) {
        if (i == c) continue;
        int need = P.m[i] - 2;
        if (need == 0 || indep_in_mask(adj[i], below_u & ~adj[i][u] & ~adj[i][v], need)) {
          ++stats.subset_prunes;
          return false;
        }
      }
    }
    return true;
  }

  bool good_leaf(EdgeColoring* out) {
    EdgeColoring f(P.n, P.k);
    for (int e = 0; e < P.E; ++e) f.set_color(P.pairs[e].first, P.pairs[e].second, col[e]);
    auto a = f.alpha_vector();
    for (int i = 0; i < P.k; ++i)
      if (a[i] > P.m[i] - 1) return false;
    *out = f;
    return true;
  }

  bool dfs(int r, EdgeColoring* out) {
    if (stop()) {
      if (timed_out && !frontier_set) {
        frontier_set = true;
        frontier.assign(col.begin(), col.begin() + r);
      }
      return false;
    }
    if (r == P.E) return good_leaf(out);
    for (int c = 0; c < P.k; ++c) {
      if (symmetry_reject(c)) {
        ++stats.symmetry_prunes;
        continue;
      }
      ++stats.nodes;
      assign(r, c);
      bool won = admissible(r, c) && dfs(r + 1, out);
      unassign(r, c);
      if (won) return true;
      if (timed_out || (shared && shared->found.load(std::memory_order_relaxed))) return false;
    }
    return false;
  }
};

void merge_stats(SearchStats& into, const SearchStats& s) {
  into.nodes += s.nodes;
  into.subset_prunes += s.subset_prunes;
  into.count_prunes += s.count_prunes;
  into.degree_prunes += s.degree_prunes;
  into.symmetry_prunes += s.symmetry_prunes;
}

SearchOutcome run_sequential(const Problem& P) {
  Searcher s(P);
  EdgeColoring w;
  SearchOutcome out;
  if (s.dfs(0, &w)) {
    out.exists = Existence::Yes;
    out.witness = w;
  } else if (s.timed_out) {
    out.exists = Existence::Undecided;
    out.frontier = s.frontier;
  } else {
    out.exists = Existence::No;
  }
  out.stats = s.stats;
  return out;
}

SearchOutcome run_parallel(const Problem& P) {
  int depth = 0;
  std::int64_t combos = 1;
  while (depth < P.E && depth < 6 && combos < static_cast<std::int64_t>(P.cfg.threads) * 8)
    combos *= P.k, ++depth;
  Shared shared;
  std::atomic<std::int64_t> next{0};
  int workers = std::max(1, std::min<int>(P.cfg.threads, static_cast<int>(combos)));
  auto work = [&]() {
    SearchStats local;
    for (;;) {
      std::int64_t id = next.fetch_add(1);
      if (id >= combos || shared.found.load()) break;
      Searcher s(P, &shared);
      bool alive = true;
      for (int j = 0; j < depth && alive; ++j) {
        std::int64_t div = 1;
        for (int t = j + 1; t < depth; ++t) div *= P.k;
        int c = static_cast<int>(id / div % P.k);
        if (s.symmetry_reject(c)) {
          ++s.stats.symmetry_prunes;
          alive = false;
          break;
        }
        ++s.stats.nodes;
        s.assign(j, c);
        alive = s.admissible(j, c);
      }
      EdgeColoring w;
      if (alive && s.dfs(depth, &w)) {
        std::lock_guard<std::mutex> lk(shared.mu);
        if (!shared.witness) shared.witness = w;
        shared.found.store(true);
      }
      if (s.timed_out) {
        shared.timed.store(true);
        std::lock_guard<std::mutex> lk(shared.mu);
        if (shared.frontier.empty()) shared.frontier = s.frontier;
      }
      merge_stats(local, s.stats);
      if (s.timed_out) break;
    }
    std::lock_guard<std::mutex> lk(shared.mu);
    merge_stats(shared.stats, local);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  SearchOutcome out;
  out.stats = shared.stats;
  if (shared.witness) {
    out.exists = Existence::Yes;
    out.witness = *shared.witness;
  } else if (shared.timed.load()) {
    out.exists = Existence::Undecided;
    out.frontier = shared.frontier;
  } else {
    out.exists = Existence::No;
  }
  return out;
}

}  // namespace

SearchOutcome exists_good_coloring(int n, const Query& q0, const SearchConfig& cfg) {
  Query q = Query::of(q0.m);
  if (n < 1) throw BadArgs("exists_good_coloring: need n >= 1");
  if (n > 64) throw TooLarge("exists_good_coloring: order above 64");
  auto t0 = Clock::now();
  auto deadline = t0 + std::chrono::milliseconds(std::max<std::int64_t>(cfg.budget_ms, 1));

  SearchOutcome out;
  // A single vertex is independent in every class.
  if (std::any_of(q.m.begin(), q.m.end(), [](int m) { return m == 1; })) {
    out.exists = Existence::No;
    return out;
  }

  BoundsEngine scratch;
  BoundsEngine& engine = cfg.engine ? *cfg.engine : scratch;
  Problem P = build_problem(n, q, cfg, engine, deadline);

  if (cfg.deterministic || cfg.threads <= 1 || P.E == 0)
    out = run_sequential(P);
  else
    out = run_parallel(P);
  out.stats.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return out;
}

ExactOutcome exact_value(const Query& q0, BoundsEngine& engine, const SearchConfig& cfg,
                         WitnessCache* cache) {
  Query q = Query::of(q0.m);
  auto t0 = Clock::now();
  auto deadline = t0 + std::chrono::milliseconds(std::max<std::int64_t>(cfg.budget_ms, 1));

  ExactOutcome out;
  out.query = q;
  Bound b = engine.bound(q);
  int n = std::max(1, b.lo - 1);
  for (;;) {
    if (b.exact()) {
      out.exact = true;
      out.value = b.lo;
      break;
    }
    if (b.hi && n >= *b.hi) {
      // Good colorings exist through hi - 1; the upper bound is the value.
      out.exact = true;
      out.value = *b.hi;
      engine.certificates().add_exact(q, out.value, "search",
                                      "scan closed at order " + std::to_string(out.value));
      b = engine.bound(q);
      break;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) break;

    Existence got;
    std::optional<EdgeColoring> witness;
    if (cache && cache->known_no(n, q)) {
      got = Existence::No;
    } else if (cache && (witness = cache->load_good(n, q))) {
      got = Existence::Yes;
    } else {
      SearchConfig sc = cfg;
      sc.budget_ms = left.count();
      sc.engine = &engine;
      SearchOutcome so = exists_good_coloring(n, q, sc);
      ++out.searches;
      merge_stats(out.stats, so.stats);
      got = so.exists;
      witness = so.witness;
      if (got == Existence::Yes && cache) cache->store_good(n, q, *witness);
      if (got == Existence::No && cache) cache->store_no(n, q);
      if (got == Existence::Undecided && cache && !so.frontier.empty())
        cache->store_frontier(n, q, so.frontier);
    }

    if (got == Existence::Yes) {
      if (b.hi && n >= *b.hi)
        throw std::runtime_error("inconsistent knowledge: good coloring at the upper bound");
      engine.certificates().add_lower(q, n, "search", "good coloring of K" + std::to_string(n));
      b = engine.bound(q);
      ++n;
    } else if (got == Existence::No) {
      if (n < b.lo)
        throw std::runtime_error("inconsistent knowledge: no good coloring below the lower bound");
      out.exact = true;
      out.value = n;
      engine.certificates().add_exact(q, n, "search", "no good coloring of K" + std::to_string(n));
      b = engine.bound(q);
      break;
    } else {
      break;  // budget exhausted mid-search
    }
  }
  out.interval = BoundInterval{b.lo, b.hi};
  if (out.exact) out.interval = BoundInterval{out.value, out.value};
  out.stats.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return out;
}

}  // namespace cram
