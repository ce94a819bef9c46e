#pragma once

#include <vector>

#include "cram/coloring.hpp"

namespace cram {

// squares[t][row][col] = symbol in 0..n-1.
using LatinSquare = std::vector<std::vector<int>>;

// Reads a complete set of n-1 mutually orthogonal Latin squares out of an
// (n+1)-coloring of K_{n^2} whose every class is n disjoint K_n: class 1's
// parts become the rows, class 2's the columns, and every further class i
// yields square i-2 with symbols numbered by that class's parts (parts always
// ordered by least vertex).  Latin-ness and pairwise orthogonality of the
// result are verified.
std::vector<LatinSquare> mols_extract(const EdgeColoring& f);  // NotResolvable, NotGrid

// Inverse encoding: rows, columns and one symbol class per square.  The
// squares must form a complete set (n-1 of them, Latin, pairwise orthogonal),
// which is exactly when every edge of K_{n^2} lands in one class.
EdgeColoring mols_to_coloring(const std::vector<LatinSquare>& squares, int n);  // BadArgs

// Relabels symbols so the first row reads 0..n-1; extraction after encoding
// reproduces squares exactly up to this relabeling.
LatinSquare normalize_symbols(const LatinSquare& sq);

}  // namespace cram
