#include "cram/mols.hpp"

#include <algorithm>
#include <stdexcept>

namespace cram {

namespace {

// The class-c parts as vertex lists, ordered by least vertex; throws
// NotResolvable unless they are exactly n disjoint K_n.
std::vector<std::vector<int>> resolve_parts(const EdgeColoring& f, int c, int n) {
  Graph g = f.color_class(c);
  auto comps = components(g);
  if (static_cast<int>(comps.size()) != n)
    throw NotResolvable("class " + std::to_string(c + 1) + " has " +
                        std::to_string(comps.size()) + " components, expected " +
                        std::to_string(n));
  std::vector<std::vector<int>> parts;
  for (std::uint64_t m : comps) {
    if (__builtin_popcountll(m) != n || !induces_clique(g, m))
      throw NotResolvable("class " + std::to_string(c + 1) + " is not a union of " +
                          std::to_string(n) + "-cliques");
    std::vector<int> part;
    for (int v = 0; v < g.n(); ++v)
      if ((m >> v) & 1u) part.push_back(v);
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

std::vector<LatinSquare> mols_extract(const EdgeColoring& f) {
  int n = 0;
  while (n * n < f.n()) ++n;
  if (n * n != f.n() || n < 1) throw NotResolvable("order is not a square");
  if (f.k() != n + 1)
    throw NotResolvable("expected " + std::to_string(n + 1) + " classes, got " +
                        std::to_string(f.k()));

  auto rows = resolve_parts(f, 0, n);
  auto cols = resolve_parts(f, 1, n);
  // cell[v] = (row index, column index); each pair must meet in one vertex.
  std::vector<int> row_of(f.n(), -1), col_of(f.n(), -1);
  for (int i = 0; i < n; ++i)
    for (int v : rows[i]) row_of[v] = i;
  for (int j = 0; j < n; ++j)
    for (int v : cols[j]) col_of[v] = j;
  std::vector<std::vector<int>> cell(n, std::vector<int>(n, -1));
  for (int v = 0; v < f.n(); ++v) {
    if (cell[row_of[v]][col_of[v]] != -1)
      throw NotGrid("a row and a column part share two vertices");
    cell[row_of[v]][col_of[v]] = v;
  }

  std::vector<LatinSquare> out;
  for (int c = 2; c < f.k(); ++c) {
    auto parts = resolve_parts(f, c, n);
    std::vector<int> symbol(f.n(), -1);
    for (int s = 0; s < n; ++s)
      for (int v : parts[s]) symbol[v] = s;
    LatinSquare sq(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sq[i][j] = symbol[cell[i][j]];
    out.push_back(std::move(sq));
  }

  // Forced by the class shapes; checked anyway.
  for (const auto& sq : out)
    for (int i = 0; i < n; ++i) {
      std::uint64_t in_row = 0, in_col = 0;
      for (int j = 0; j < n; ++j) {
        in_row |= 1ull << sq[i][j];
        in_col |= 1ull << sq[j][i];
      }
      if (__builtin_popcountll(in_row) != n || __builtin_popcountll(in_col) != n)
        throw std::logic_error("extracted square is not Latin");
    }
  for (std::size_t a = 0; a + 1 < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int code = out[a][i][j] * n + out[b][i][j];
          if (seen[code]) throw std::logic_error("extracted squares are not orthogonal");
          seen[code] = 1;
        }
    }
  return out;
}

EdgeColoring mols_to_coloring(const std::vector<LatinSquare>& squares, int n) {
  if (n < 1 || n * n > 64) throw BadArgs("order out of range");
  if (static_cast<int>(squares.size()) != n - 1)
    throw BadArgs("a complete set of order " + std::to_string(n) + " has " +
                  std::to_string(n - 1) + " squares");
  for (const auto& sq : squares) {
    if (static_cast<int>(sq.size()) != n) throw BadArgs("square has wrong row count");
    for (const auto& row : sq) {
      if (static_cast<int>(row.size()) != n) throw BadArgs("square has wrong column count");
      for (int s : row)
        if (s < 0 || s >= n) throw BadArgs("symbol out of range");
    }
  }

  int N = n * n;
  auto vertex = [n](int i, int j) { return i * n + j; };
  EdgeColoring col(N, n + 1);
  std::vector<char> assigned(static_cast<std::size_t>(binom2(N)), 0);
  auto paint = [&](const std::vector<int>& pts, int c) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        int u = std::min(pts[i], pts[j]), v = std::max(pts[i], pts[j]);
        int r = pair_rank(u, v);
        if (assigned[r])
          throw BadArgs("squares are not Latin and orthogonal: pair covered twice");
        assigned[r] = 1;
        col.set_color(u, v, c);
      }
  };
  for (int i = 0; i < n; ++i) {
    std::vector<int> pts;
    for (int j = 0; j < n; ++j) pts.push_back(vertex(i, j));
    paint(pts, 0);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i) pts.push_back(vertex(i, j));
    paint(pts, 1);
  }
  for (int t = 0; t < n - 1; ++t)
    for (int s = 0; s < n; ++s) {
      std::vector<int> pts;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (squares[t][i][j] == s) pts.push_back(vertex(i, j));
      if (static_cast<int>(pts.size()) != n) throw BadArgs("square is not Latin");
      paint(pts, 2 + t);
    }
  for (char a : assigned)
    if (!a) throw BadArgs("squares do not cover every pair: set is not complete");
  return col;
}

LatinSquare normalize_symbols(const LatinSquare& sq) {
  int n = static_cast<int>(sq.size());
  std::vector<int> relabel(n, -1);
  for (int j = 0; j < n; ++j) relabel[sq[0][j]] = j;
  LatinSquare out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = relabel[sq[i][j]];
  return out;
}

}  // namespace cram
