#include "cram/coloring.hpp"

#include "cram/mis.hpp"

namespace cram {

EdgeColoring::EdgeColoring(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > 64) throw TooLarge("coloring order must be in [1,64], got " + std::to_string(n));
  if (k < 1 || k > 255) throw BadColor("color count must be in [1,255], got " + std::to_string(k));
  color_.assign(static_cast<std::size_t>(binom2(n)), 0);
}

void EdgeColoring::set_color(int u, int v, int c) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw BadVertex("bad pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (c < 0 || c >= k_) throw BadColor("color " + std::to_string(c) + " out of range, k=" + std::to_string(k_));
  color_[pair_rank(u < v ? u : v, u < v ? v : u)] = static_cast<std::uint8_t>(c);
}

Graph EdgeColoring::color_class(int c) const {
  if (c < 0 || c >= k_) throw BadColor("color " + std::to_string(c) + " out of range, k=" + std::to_string(k_));
  Graph g(n_);
  for (int v = 1; v < n_; ++v)
    for (int u = 0; u < v; ++u)
      if (color_[pair_rank(u, v)] == c) g.add_edge(u, v);
  return g;
}

std::vector<int> EdgeColoring::alpha_vector() const {
  std::vector<int> a(k_);
  for (int c = 0; c < k_; ++c) a[c] = independence_number(color_class(c));
  return a;
}

int EdgeColoring::color_degree(int x, int c) const {
  int d = 0;
  for (int y = 0; y < n_; ++y)
    if (y != x && color(x, y) == c) ++d;
  return d;
}

}  // namespace cram
