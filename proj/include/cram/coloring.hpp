#pragma once

#include <cstdint>
#include <vector>

#include "cram/graph.hpp"

namespace cram {

// Colex rank of the pair {u,v}, u < v: pairs sort by larger endpoint, then
// smaller.  All pairs inside {0..v} precede every pair involving v+1, which is
// the edge order the coloring search in search.cpp fills.
inline int pair_rank(int u, int v) { return v * (v - 1) / 2 + u; }

// k-coloring of the edges of K_n, n <= 64, colors 0..k-1 internally (1..k in
// JSON and the CLI).  color[pair_rank(u,v)] holds the class of {u,v}.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int color(int u, int v) const { return color_[pair_rank(u < v ? u : v, u < v ? v : u)]; }
  void set_color(int u, int v, int c);

  // Spanning subgraph formed by the class-c edges.
  Graph color_class(int c) const;
  // Independence number of every class, index by color.
  std::vector<int> alpha_vector() const;
  // Number of class-c edges at vertex x.
  int color_degree(int x, int c) const;

  const std::vector<std::uint8_t>& raw() const { return color_; }

 private:
  int n_ = 0, k_ = 0;
  std::vector<std::uint8_t> color_;
};

}  // namespace cram
