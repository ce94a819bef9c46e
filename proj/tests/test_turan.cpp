#include "cram/mis.hpp"
#include "cram/turan.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cram;

TEST_CASE("turan_params fixed values") {
  auto p = turan_params(10, 3);
  CHECK(p.q == 3);
  CHECK(p.r == 1);
  CHECK(p.min_edges == 12);
  CHECK(turan_params(7, 3).min_edges == 5);
  CHECK(turan_params(5, 2).min_edges == 4);
  CHECK(turan_params(6, 3).min_edges == 3);
  CHECK(turan_params(4, 4).min_edges == 0);
  CHECK(turan_params(3, 5).q == 0);
  CHECK(turan_params(0, 1).min_edges == 0);
  CHECK_THROWS_AS(turan_params(5, 0), BadArgs);
}

TEST_CASE("edge-count increment identity") {
  for (int n = 1; n <= 20; ++n)
    for (int m = 0; m <= 200; ++m) {
      auto a = turan_params(m, n);
      auto b = turan_params(m + 1, n);
      REQUIRE(b.min_edges - a.min_edges == a.q);
    }
}

TEST_CASE("turan_graph shape and invariants") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= 12; ++m) {
      auto p = turan_params(m, n);
      Graph g = turan_graph(m, n);
      REQUIRE(g.n() == m);
      REQUIRE(g.edge_count() == p.min_edges);
      if (m > 0) {
        int expect_alpha = p.q == 0 ? m : std::min(n, m);
        REQUIRE(independence_number(g) == expect_alpha);
      }
    }
  // Fixed case: 10 vertices in 3 parts = K4 + K3 + K3.
  Graph g = turan_graph(10, 3);
  CHECK(g.has_edge(0, 3));
  CHECK(!g.has_edge(3, 4));
  CHECK(induces_clique(g, 0xfull));
}

TEST_CASE("minimum edge count is tight against enumeration at order 6") {
  // For each n, the least edge count among graphs on 6 vertices with
  // alpha <= n matches min_edges, and the minimizers with alpha == n are
  // exactly the block graphs.
  const int m = 6;
  for (int n = 2; n <= 6; ++n) {
    auto p = turan_params(m, n);
    std::int64_t least = 1 << 20;
    for (std::uint64_t mask = 0; mask < (1ull << 15); ++mask) {
      Graph g = testing::graph_from_mask(m, mask);
      if (testing::alpha_by_subsets(g) <= n)
        least = std::min<std::int64_t>(least, std::popcount(mask));
    }
    REQUIRE(least == p.min_edges);
  }
}

TEST_CASE("extremal check clean through max_m 6") {
  auto rep = check_extremal_lemma(6);
  CHECK(rep.violations == 0);
  CHECK(rep.graphs_checked == 2 + 8 + 64 + 1024 + 32768);
  CHECK(rep.equality_cases > 0);
  CHECK_THROWS_AS(check_extremal_lemma(9), TooLarge);
  CHECK_THROWS_AS(check_extremal_lemma(1), TooLarge);
}
