#include <algorithm>
#include <set>

#include "cram/bounds.hpp"
#include "cram/design_search.hpp"
#include "cram/factorization.hpp"
#include "cram/gf.hpp"
#include "cram/mis.hpp"
#include "doctest.h"

using cram::affine_factorization;
using cram::BadArgs;
using cram::BadProfiles;
using cram::BoundsEngine;
using cram::classify_factor;
using cram::Factorization;
using cram::factorization_search;
using cram::gen_factorable_value;
using cram::GF;
using cram::Graph;
using cram::n_mnr;
using cram::OddOrder;
using cram::Query;
using cram::round_robin;
using cram::TooLarge;
using cram::UnsupportedOrder;
using cram::validate_factorization;

namespace {

Graph cliques_graph(int n, const std::vector<std::vector<int>>& blocks) {
  Graph g(n);
  for (const auto& blk : blocks)
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) g.add_edge(blk[i], blk[j]);
  return g;
}

std::multiset<std::vector<std::pair<int, int>>> factor_edge_sets(const Factorization& f) {
  std::multiset<std::vector<std::pair<int, int>>> out;
  for (const auto& g : f.factors) out.insert(g.edges());
  return out;
}

}  // namespace

TEST_CASE("field tables satisfy the field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const GF& f = GF::of(q);
    CHECK(f.q() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      bool has_inverse = false;
      for (int b = 0; b < q; ++b) has_inverse |= f.mul(a, b) == 1;
      CHECK(has_inverse == (a != 0));
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (a != 0 && b != 0) CHECK(f.mul(a, b) != 0);
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
  CHECK_THROWS_AS(GF::of(6), UnsupportedOrder);
  CHECK_THROWS_AS(GF::of(11), UnsupportedOrder);
}

TEST_CASE("extension field arithmetic hits the fixed reductions") {
  // GF(4) = GF(2)[x]/(x^2+x+1), elements 0,1,x=2,x+1=3.
  const GF& f4 = GF::of(4);
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.mul(2, 3) == 1);
  // GF(8) = GF(2)[x]/(x^3+x+1): x * x^2 = x+1.
  const GF& f8 = GF::of(8);
  CHECK(f8.mul(2, 2) == 4);
  CHECK(f8.mul(2, 4) == 3);
  // GF(9) = GF(3)[x]/(x^2+1): x * x = -1 = 2.
  const GF& f9 = GF::of(9);
  CHECK(f9.mul(3, 3) == 2);
}

TEST_CASE("round robin builds perfect matchings") {
  CHECK_THROWS_AS(round_robin(5), OddOrder);
  CHECK_THROWS_AS(round_robin(0), OddOrder);

  Factorization two = round_robin(2);
  CHECK(two.factors.size() == 1);
  CHECK(two.factors[0].edges() == std::vector<std::pair<int, int>>{{0, 1}});

  for (int N : {2, 4, 6, 8, 10, 12}) {
    Factorization f = round_robin(N);
    validate_factorization(f);
    CHECK(static_cast<int>(f.factors.size()) == N - 1);
    for (const Graph& g : f.factors) {
      for (int v = 0; v < N; ++v) CHECK(g.degree(v) == 1);
      auto shape = classify_factor(g);
      REQUIRE(shape.has_value());
      CHECK(shape->n == N / 2);
      CHECK(shape->q == 2);
      CHECK(shape->r == 0);
      CHECK(cram::independence_number(g) == N / 2);
    }
  }
}

TEST_CASE("affine planes partition into parallel clique classes") {
  for (int q : {2, 3, 4, 5, 7, 8}) {
    Factorization f = affine_factorization(q);
    CHECK(f.N == q * q);
    validate_factorization(f);
    CHECK(static_cast<int>(f.factors.size()) == q + 1);
    for (const Graph& g : f.factors) {
      auto shape = classify_factor(g);
      REQUIRE(shape.has_value());
      CHECK(shape->n == q);
      CHECK(shape->q == q);
      CHECK(shape->r == 0);
    }
  }
  CHECK_THROWS_AS(affine_factorization(9), TooLarge);
  CHECK_THROWS_AS(affine_factorization(6), UnsupportedOrder);
  CHECK_THROWS_AS(affine_factorization(10), UnsupportedOrder);
}

TEST_CASE("order-2 affine plane is the 1-factorization of K4") {
  CHECK(factor_edge_sets(affine_factorization(2)) == factor_edge_sets(round_robin(4)));
}

TEST_CASE("factor classification reads shapes off components") {
  auto s = classify_factor(cliques_graph(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}));
  REQUIRE(s.has_value());
  CHECK(s->n == 3);
  CHECK(s->q == 3);
  CHECK(s->r == 0);

  s = classify_factor(cliques_graph(9, {{0, 1, 2}, {3, 4}, {5, 6}, {7, 8}}));
  REQUIRE(s.has_value());
  CHECK(s->n == 4);
  CHECK(s->q == 2);
  CHECK(s->r == 1);

  s = classify_factor(cram::empty_graph(5));
  REQUIRE(s.has_value());
  CHECK(s->n == 5);
  CHECK(s->q == 1);
  CHECK(s->r == 0);

  // A path component is not a clique.
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(!classify_factor(path).has_value());
  // Component sizes 2 and 4 are not adjacent.
  CHECK(!classify_factor(cliques_graph(6, {{0, 1}, {2, 3, 4, 5}})).has_value());
}

TEST_CASE("factorizations convert to exact values when the hypothesis holds") {
  auto rr10 = gen_factorable_value(round_robin(10));
  REQUIRE(rr10.applicable);
  CHECK(rr10.query == Query::of(std::vector<int>(9, 6)));
  CHECK(rr10.value == 11);

  auto rr6 = gen_factorable_value(round_robin(6));
  REQUIRE(rr6.applicable);
  CHECK(rr6.query == Query::of({4, 4, 4, 4, 4}));
  CHECK(rr6.value == 7);

  auto a3 = gen_factorable_value(affine_factorization(3));
  REQUIRE(a3.applicable);
  CHECK(a3.query == Query::of({4, 4, 4, 4}));
  CHECK(a3.value == 10);

  auto a4 = gen_factorable_value(affine_factorization(4));
  REQUIRE(a4.applicable);
  CHECK(a4.query == Query::of({5, 5, 5, 5, 5}));
  CHECK(a4.value == 17);

  auto a5 = gen_factorable_value(affine_factorization(5));
  REQUIRE(a5.applicable);
  CHECK(a5.query == Query::of({6, 6, 6, 6, 6, 6}));
  CHECK(a5.value == 26);

  // Matchings on K2: n_i = 1 kills the hypothesis.
  auto rr2 = gen_factorable_value(round_robin(2));
  CHECK(!rr2.applicable);
  CHECK(!rr2.reason.empty());

  Factorization k4_single;
  k4_single.N = 4;
  k4_single.factors.push_back(cram::complete_graph(4));
  auto k4 = gen_factorable_value(k4_single);
  CHECK(!k4.applicable);
}

TEST_CASE("factorization values land inside the rule engine's intervals") {
  BoundsEngine eng;
  for (const auto& f : {round_robin(4), round_robin(6), round_robin(8), round_robin(10)}) {
    auto v = gen_factorable_value(f);
    REQUIRE(v.applicable);
    auto b = eng.bound(v.query);
    CHECK(b.lo <= v.value);
    REQUIRE(b.hi.has_value());
    CHECK(v.value <= *b.hi);
  }
  auto v = gen_factorable_value(affine_factorization(3));
  auto b = eng.bound(v.query);
  CHECK(b.lo <= v.value);
  REQUIRE(b.hi.has_value());
  CHECK(v.value <= *b.hi);
}

TEST_CASE("class-count fractions") {
  auto r = n_mnr(2, 5, 0);
  CHECK(r.num == 9);
  CHECK(r.den == 1);
  CHECK(r.integral());

  r = n_mnr(3, 3, 0);
  CHECK(r.num == 4);
  CHECK(r.den == 1);

  r = n_mnr(4, 3, 1);
  CHECK(r.num == 39);
  CHECK(r.den == 11);
  CHECK(!r.integral());

  CHECK_THROWS_AS(n_mnr(3, 3, 3), BadArgs);
  CHECK_THROWS_AS(n_mnr(0, 3, 0), BadArgs);
  CHECK_THROWS_AS(n_mnr(1, 3, 0), BadArgs);  // only K_1 components, no edges
}

TEST_CASE("validation catches broken factorizations") {
  Factorization f = round_robin(4);
  validate_factorization(f);

  Factorization dup = f;
  dup.factors[1] = dup.factors[0];
  CHECK_THROWS_AS(validate_factorization(dup), BadArgs);

  Factorization missing = f;
  missing.factors.pop_back();
  CHECK_THROWS_AS(validate_factorization(missing), BadArgs);

  Factorization wrong_order = f;
  wrong_order.factors[0] = Graph(5);
  CHECK_THROWS_AS(validate_factorization(wrong_order), BadArgs);
}

TEST_CASE("design search profile validation") {
  CHECK_THROWS_AS(factorization_search(9, {{3, 3, 2}}), BadProfiles);   // does not sum to 9
  CHECK_THROWS_AS(factorization_search(9, {{3, 3, 3}}), BadProfiles);   // covers 9 of 36 edges
  CHECK_THROWS_AS(factorization_search(9, {}), BadProfiles);
  CHECK_THROWS_AS(factorization_search(4, {{0, 4}}), BadProfiles);
}

TEST_CASE("design search finds one-factorizations") {
  auto res = factorization_search(4, {{2, 2}, {2, 2}, {2, 2}});
  REQUIRE(res.found.has_value());
  validate_factorization(*res.found);
  CHECK(factor_edge_sets(*res.found) == factor_edge_sets(round_robin(4)));

  auto res6 = factorization_search(6, std::vector<std::vector<int>>(5, {2, 2, 2}));
  REQUIRE(res6.found.has_value());
  validate_factorization(*res6.found);
}

TEST_CASE("design search finds the order-9 triple system") {
  auto res = factorization_search(9, std::vector<std::vector<int>>(4, {3, 3, 3}));
  REQUIRE(res.found.has_value());
  validate_factorization(*res.found);
  // First class is pinned to consecutive triples.
  CHECK(res.found->factors[0].has_edge(0, 1));
  CHECK(res.found->factors[0].has_edge(3, 5));
  CHECK(res.found->factors[0].has_edge(6, 7));
  auto v = gen_factorable_value(*res.found);
  REQUIRE(v.applicable);
  CHECK(v.query == Query::of({4, 4, 4, 4}));
  CHECK(v.value == 10);

  // Determinism: the same call returns the same labeled factorization.
  auto again = factorization_search(9, std::vector<std::vector<int>>(4, {3, 3, 3}));
  REQUIRE(again.found.has_value());
  CHECK(factor_edge_sets(*again.found) == factor_edge_sets(*res.found));
}

TEST_CASE("design search finds the order-9 class-uniform design") {
  auto res = factorization_search(9, std::vector<std::vector<int>>(6, {3, 2, 2, 2}));
  REQUIRE(res.found.has_value());
  validate_factorization(*res.found);
  for (const auto& g : res.found->factors) {
    auto s = classify_factor(g);
    REQUIRE(s.has_value());
    CHECK(s->n == 4);
    CHECK(s->q == 2);
    CHECK(s->r == 1);
  }
  auto v = gen_factorable_value(*res.found);
  REQUIRE(v.applicable);
  CHECK(v.query == Query::of({5, 5, 5, 5, 5, 5}));
  CHECK(v.value == 10);
}

TEST_CASE("design search finds the order-15 triple system") {
  auto res = factorization_search(15, std::vector<std::vector<int>>(7, {3, 3, 3, 3, 3}));
  REQUIRE(res.found.has_value());
  validate_factorization(*res.found);
  auto v = gen_factorable_value(*res.found);
  REQUIRE(v.applicable);
  CHECK(v.query == Query::of(std::vector<int>(7, 6)));
  CHECK(v.value == 16);
}

TEST_CASE("no nearly-resolvable triple cover of K6 exists") {
  auto res = factorization_search(6, {{3, 3}, {3, 3}, {2, 2, 2}});
  CHECK(!res.found.has_value());
  CHECK(res.exhausted);
}

TEST_CASE("a tiny budget reports an unexhausted miss") {
  // Large enough that the full space cannot be swept in a millisecond.
  auto res = factorization_search(15, std::vector<std::vector<int>>(7, {3, 3, 3, 3, 3}), 1);
  if (!res.found.has_value()) CHECK(!res.exhausted);
}
