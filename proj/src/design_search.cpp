#include "cram/design_search.hpp"

#include <algorithm>
#include <chrono>

namespace cram {

namespace {

using Clock = std::chrono::steady_clock;
using Blocks = std::vector<std::vector<int>>;

struct Searcher {
  int N;
  const std::vector<std::vector<int>>& profiles;
  Clock::time_point deadline;

  std::vector<std::uint64_t> used;  // pair_rank bitmap of edges taken by earlier classes
  std::vector<Blocks> classes;
  std::int64_t nodes = 0;
  bool timed_out = false;
  std::optional<Factorization> found;

  Searcher(int n, const std::vector<std::vector<int>>& p, Clock::time_point dl)
      : N(n), profiles(p), deadline(dl), used((binom2(n) + 63) / 64, 0) {}

  bool pair_used(int u, int v) const {
    int r = pair_rank(u, v);
    return (used[r >> 6] >> (r & 63)) & 1u;
  }
  void flip_block(const std::vector<int>& blk) {
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        int r = pair_rank(std::min(blk[i], blk[j]), std::max(blk[i], blk[j]));
        used[r >> 6] ^= 1ull << (r & 63);
      }
  }

  bool tick() {
    if ((++nodes & 4095) == 0 && Clock::now() > deadline) timed_out = true;
    return !timed_out;
  }

  // Fills class `c` block by block, always extending from the lowest free
  // vertex, closing a block before growing it; candidate classes therefore
  // appear in increasing block-list order.
  bool next_class(int c) {
    if (c == static_cast<int>(profiles.size())) {
      Factorization f;
      f.N = N;
      for (const auto& blocks : classes) {
        Graph g(N);
        for (const auto& blk : blocks)
          for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j) g.add_edge(blk[i], blk[j]);
        f.factors.push_back(std::move(g));
      }
      found = std::move(f);
      return true;
    }
    std::vector<int> sizes = profiles[c];
    std::sort(sizes.begin(), sizes.end());
    if (c == 0) {
      // Least labeled partition with this profile: consecutive blocks, sizes
      // ascending.  Any factorization can be relabeled to start from it.
      Blocks blocks;
      int v = 0;
      for (int s : sizes) {
        std::vector<int> blk(s);
        for (int i = 0; i < s; ++i) blk[i] = v++;
        blocks.push_back(std::move(blk));
      }
      classes.push_back(blocks);
      for (const auto& blk : blocks) flip_block(blk);
      bool ok = next_class(1);
      if (!ok) {
        for (const auto& blk : classes.back()) flip_block(blk);
        classes.pop_back();
      }
      return ok;
    }
    classes.emplace_back();
    std::uint64_t free_mask = N == 64 ? ~0ull : (1ull << N) - 1;
    bool ok = next_block(c, free_mask, sizes);
    if (!ok) classes.pop_back();
    return ok;
  }

  bool next_block(int c, std::uint64_t free_mask, std::vector<int>& sizes_left) {
    if (!tick()) return false;
    if (free_mask == 0) {
      // Class complete; classes with the same profile must come in increasing
      // order, else the same set of classes is revisited in another order.
      if (profiles[c] == profiles[c - 1] && !(classes[c - 1] < classes[c])) return false;
      for (const auto& blk : classes[c]) flip_block(blk);
      bool ok = next_class(c + 1);
      for (const auto& blk : classes[c]) flip_block(blk);
      return ok;
    }
    int v = __builtin_ctzll(free_mask);
    classes[c].push_back({v});
    bool ok = grow_block(c, free_mask & ~(1ull << v), sizes_left);
    classes[c].pop_back();
    return ok;
  }

  // The open block is classes[c].back(), re-fetched after every recursive call
  // (deeper blocks may reallocate the class).  Closing at an allowed size is
  // tried before extending, so candidates appear in increasing encoding order.
  bool grow_block(int c, std::uint64_t free_mask, std::vector<int>& sizes_left) {
    if (timed_out) return false;
    int s = static_cast<int>(classes[c].back().size());
    auto it = std::find(sizes_left.begin(), sizes_left.end(), s);
    if (it != sizes_left.end()) {
      int val = *it;
      sizes_left.erase(it);
      if (next_block(c, free_mask, sizes_left)) return true;
      sizes_left.insert(std::lower_bound(sizes_left.begin(), sizes_left.end(), val), val);
      if (timed_out) return false;
    }
    if (sizes_left.empty() || s >= sizes_left.back()) return false;
    // Candidates above the last vertex keep each block sorted.
    for (int u = classes[c].back().back() + 1; u < N; ++u) {
      if (!((free_mask >> u) & 1u)) continue;
      bool clash = false;
      for (int w : classes[c].back())
        if (pair_used(w, u)) {
          clash = true;
          break;
        }
      if (clash) continue;
      classes[c].back().push_back(u);
      if (grow_block(c, free_mask & ~(1ull << u), sizes_left)) return true;
      classes[c].back().pop_back();
      if (timed_out) return false;
    }
    return false;
  }
};

}  // namespace

DesignSearchResult factorization_search(int N, const std::vector<std::vector<int>>& profiles,
                                        std::int64_t budget_ms) {
  if (N < 1 || N > 64) throw BadProfiles("order out of range");
  if (profiles.empty()) throw BadProfiles("no classes");
  std::int64_t edges = 0;
  for (const auto& p : profiles) {
    std::int64_t sum = 0;
    for (int s : p) {
      if (s < 1) throw BadProfiles("component sizes must be >= 1");
      sum += s;
      edges += binom2(s);
    }
    if (sum != N) throw BadProfiles("profile does not sum to the order");
  }
  if (edges != binom2(N))
    throw BadProfiles("profiles cover " + std::to_string(edges) + " edges, K_N has " +
                      std::to_string(binom2(N)));

  Searcher s(N, profiles, Clock::now() + std::chrono::milliseconds(budget_ms));
  s.next_class(0);
  DesignSearchResult out;
  out.nodes = s.nodes;
  if (s.found) {
    out.found = std::move(s.found);
    out.exhausted = false;
  } else {
    out.exhausted = !s.timed_out;
  }
  return out;
}

}  // namespace cram
