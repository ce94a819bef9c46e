#include "cram/witness.hpp"

#include <algorithm>

namespace cram {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Classes given as 1-based edge lists; pairs not listed anywhere fall into
// rest_class.  Every listed pair must be listed exactly once.
EdgeColoring build(int n, int k, const std::vector<EdgeList>& classes, int rest_class) {
  EdgeColoring f(n, k);
  std::vector<bool> listed(static_cast<std::size_t>(binom2(n)), false);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (auto [u1, v1] : classes[c]) {
      int u = u1 - 1, v = v1 - 1;
      if (u > v) std::swap(u, v);
      if (listed[pair_rank(u, v)]) throw BadArgs("witness pair listed twice");
      listed[pair_rank(u, v)] = true;
      f.set_color(u, v, c);
    }
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (!listed[pair_rank(u, v)]) f.set_color(u, v, rest_class);
  return f;
}

Witness make_w1() {
  EdgeList c1 = {{2, 5}, {3, 6}, {4, 7}};
  EdgeList c2 = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}};
  return {"W1", build(7, 3, {c1, c2}, 2), {4, 3, 2}, {5, 4, 3}};
}

Witness make_w2() {
  EdgeList c1 = {{1, 5}, {2, 6}};
  EdgeList c2 = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}, {3, 7}, {4, 8}};
  return {"W2", build(8, 3, {c1, c2}, 2), {6, 3, 2}, {7, 4, 3}};
}

Witness make_w3() {
  std::vector<EdgeList> classes;
  auto red = [](int x) { return (x - 1) % 7 + 1; };
  for (int i = 1; i <= 7; ++i)
    classes.push_back({{red(i + 2), red(i + 5)}, {red(i + 3), red(i + 4)}});
  classes.push_back({{1, 3}, {2, 4}});
  classes.push_back({{3, 5}, {4, 6}});
  classes.push_back({{5, 7}, {6, 1}, {2, 7}});
  EdgeColoring f = build(7, 10, classes, 9);
  return {"W3", f, std::vector<int>(10, 5), std::vector<int>(10, 6)};
}

Witness make_w4() {
  EdgeList c1 = {{1, 2}, {3, 4}, {5, 6}};
  EdgeList c2 = {{2, 3}, {4, 5}, {6, 1}};
  return {"W4", build(6, 3, {c1, c2}, 2), {3, 3, 2}, {4, 4, 3}};
}

}  // namespace

WitnessCheck verify_witness(const Witness& w) {
  WitnessCheck out;
  out.n = w.coloring.n();
  out.actual_alpha = w.coloring.alpha_vector();
  out.ok = out.actual_alpha == w.expected_alpha;
  if (out.ok) {
    out.claim_query = out.actual_alpha;
    for (int& m : out.claim_query) ++m;
    std::sort(out.claim_query.rbegin(), out.claim_query.rend());
  }
  return out;
}

std::vector<Witness> witness_library() { return {make_w1(), make_w2(), make_w3(), make_w4()}; }

const Witness& builtin_witness(const std::string& id) {
  static const std::vector<Witness> lib = witness_library();
  for (const auto& w : lib)
    if (w.id == id) return w;
  throw BadArgs("unknown builtin witness " + id);
}

}  // namespace cram
