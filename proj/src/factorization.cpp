#include "cram/factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cram/gf.hpp"

namespace cram {

void validate_factorization(const Factorization& f) {
  if (f.N < 1 || f.N > 64) throw BadArgs("order out of range");
  if (f.factors.empty()) throw BadArgs("no factors");
  std::vector<int> owner(static_cast<std::size_t>(binom2(f.N)), -1);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const Graph& g = f.factors[i];
    if (g.n() != f.N)
      throw BadArgs("factor " + std::to_string(i + 1) + " has order " + std::to_string(g.n()));
    for (auto [u, v] : g.edges()) {
      int r = pair_rank(u, v);
      if (owner[r] != -1)
        throw BadArgs("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                      "} appears in factors " + std::to_string(owner[r] + 1) + " and " +
                      std::to_string(i + 1));
      owner[r] = static_cast<int>(i);
    }
  }
  for (int v = 1; v < f.N; ++v)
    for (int u = 0; u < v; ++u)
      if (owner[pair_rank(u, v)] == -1)
        throw BadArgs("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                      "} is in no factor");
}

EdgeColoring to_coloring(const Factorization& f) {
  EdgeColoring col(f.N, static_cast<int>(f.factors.size()));
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    for (auto [u, v] : f.factors[i].edges()) col.set_color(u, v, static_cast<int>(i));
  return col;
}

Factorization round_robin(int N) {
  if (N < 2 || N % 2 != 0) throw OddOrder("1-factorization needs an even order >= 2");
  Factorization f;
  f.N = N;
  int m = N - 1;  // rotating vertices 0..m-1, vertex m fixed
  for (int round = 0; round < m; ++round) {
    Graph g(N);
    g.add_edge(m, round);
    for (int i = 1; i <= N / 2 - 1; ++i) {
      int u = (round + i) % m;
      int v = (round - i + m) % m;
      g.add_edge(u, v);
    }
    f.factors.push_back(std::move(g));
  }
  return f;
}

Factorization affine_factorization(int q) {
  const GF& gf = GF::of(q);  // rejects orders without a field
  if (q * q > 64)
    throw TooLarge("affine plane of order " + std::to_string(q) + " needs " +
                   std::to_string(q * q) + " vertices");
  auto vertex = [q](int a, int b) { return a * q + b; };
  auto clique = [&](Graph& g, const std::vector<int>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) g.add_edge(pts[i], pts[j]);
  };

  Factorization f;
  f.N = q * q;
  {
    // Vertical lines x = c first: their points are consecutive vertex blocks.
    Graph g(f.N);
    for (int c = 0; c < q; ++c) {
      std::vector<int> pts;
      for (int y = 0; y < q; ++y) pts.push_back(vertex(c, y));
      clique(g, pts);
    }
    f.factors.push_back(std::move(g));
  }
  for (int s = 0; s < q; ++s) {
    Graph g(f.N);
    for (int c = 0; c < q; ++c) {
      std::vector<int> pts;
      for (int x = 0; x < q; ++x) pts.push_back(vertex(x, gf.add(gf.mul(s, x), c)));
      clique(g, pts);
    }
    f.factors.push_back(std::move(g));
  }
  return f;
}

std::optional<FactorClassShape> classify_factor(const Graph& g) {
  std::map<int, int> size_count;
  for (std::uint64_t comp : components(g)) {
    if (!induces_clique(g, comp)) return std::nullopt;
    ++size_count[__builtin_popcountll(comp)];
  }
  if (size_count.empty() || size_count.size() > 2) return std::nullopt;
  int q = size_count.begin()->first;
  if (size_count.size() == 2 && size_count.rbegin()->first != q + 1) return std::nullopt;
  FactorClassShape s;
  s.q = q;
  s.r = size_count.size() == 2 ? size_count.rbegin()->second : 0;
  s.n = size_count.begin()->second + s.r;
  return s;
}

GenFactorable gen_factorable_value(const Factorization& f) {
  GenFactorable out;
  std::vector<int> thresholds;
  bool hypothesis = false;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    auto s = classify_factor(f.factors[i]);
    if (!s) {
      out.reason = "factor " + std::to_string(i + 1) +
                   " is not a disjoint union of cliques of two adjacent sizes";
      return out;
    }
    out.shapes.push_back(*s);
    thresholds.push_back(s->n + 1);
    if ((s->n - s->r - 1) * s->q > 0) hypothesis = true;
  }
  if (!hypothesis) {
    out.reason = "(n_i - r_i - 1) q_i = 0 for every factor";
    return out;
  }
  out.applicable = true;
  out.query = Query::of(std::move(thresholds));
  out.value = f.N + 1;
  return out;
}

Rational n_mnr(int m, int n, int r) {
  if (m < 1 || n < 1 || r < 0 || r >= n) throw BadArgs("need m >= 1 and 0 <= r < n");
  std::int64_t num = binom2(static_cast<std::int64_t>(m) * n + r);
  std::int64_t den = r * binom2(m + 1) + (n - r) * binom2(m);
  if (den <= 0) throw BadArgs("class shape has no edges");
  std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

}  // namespace cram
