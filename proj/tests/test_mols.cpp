#include "cram/coloring.hpp"
#include "cram/factorization.hpp"
#include "cram/mols.hpp"
#include "doctest.h"

using cram::affine_factorization;
using cram::BadArgs;
using cram::EdgeColoring;
using cram::LatinSquare;
using cram::mols_extract;
using cram::mols_to_coloring;
using cram::normalize_symbols;
using cram::NotGrid;
using cram::NotResolvable;
using cram::round_robin;
using cram::to_coloring;

TEST_CASE("affine planes decode to complete square sets") {
  for (int q : {2, 3, 4, 5}) {
    auto squares = mols_extract(to_coloring(affine_factorization(q)));
    CHECK(static_cast<int>(squares.size()) == q - 1);
    for (const auto& sq : squares) {
      REQUIRE(static_cast<int>(sq.size()) == q);
      // First row comes out in symbol order.
      for (int j = 0; j < q; ++j) CHECK(sq[0][j] == j);
    }
  }
}

TEST_CASE("the order-2 plane gives the unique normalized square") {
  auto squares = mols_extract(to_coloring(affine_factorization(2)));
  REQUIRE(squares.size() == 1);
  CHECK(squares[0] == LatinSquare{{0, 1}, {1, 0}});
}

TEST_CASE("encoding then decoding normalizes each square") {
  LatinSquare l1 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};            // i + j
  LatinSquare l2 = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};            // i + 2j
  auto coloring = mols_to_coloring({l1, l2}, 3);
  auto back = mols_extract(coloring);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == normalize_symbols(l1));
  CHECK(back[1] == normalize_symbols(l2));
  CHECK(normalize_symbols(l1) == l1);
  CHECK(normalize_symbols(l2) != l2);
}

TEST_CASE("decoding an encoded plane reproduces the coloring exactly") {
  for (int q : {2, 3, 4}) {
    auto coloring = to_coloring(affine_factorization(q));
    auto squares = mols_extract(coloring);
    auto re = mols_to_coloring(squares, q);
    CHECK(re.raw() == coloring.raw());
  }
}

TEST_CASE("non-square and non-resolvable inputs are rejected") {
  EdgeColoring flat(6, 4);
  CHECK_THROWS_AS(mols_extract(flat), NotResolvable);  // 6 is not a square

  EdgeColoring wrong_k(9, 5);
  CHECK_THROWS_AS(mols_extract(wrong_k), NotResolvable);  // need exactly n+1 classes

  auto broken = to_coloring(affine_factorization(3));
  broken.set_color(0, 1, 2);  // tears a triangle out of the first class
  CHECK_THROWS_AS(mols_extract(broken), NotResolvable);
}

TEST_CASE("encoding validates the square set") {
  LatinSquare l1 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK_THROWS_AS(mols_to_coloring({l1}, 3), BadArgs);  // one square short

  LatinSquare bad_row = {{0, 0, 2}, {1, 2, 0}, {2, 0, 1}};
  LatinSquare l2 = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  CHECK_THROWS_AS(mols_to_coloring({bad_row, l2}, 3), BadArgs);

  LatinSquare out_of_range = {{0, 1, 3}, {1, 2, 0}, {2, 0, 1}};
  CHECK_THROWS_AS(mols_to_coloring({out_of_range, l2}, 3), BadArgs);

  // Two copies of the same square cover some pairs twice.
  CHECK_THROWS_AS(mols_to_coloring({l1, l1}, 3), BadArgs);
}
