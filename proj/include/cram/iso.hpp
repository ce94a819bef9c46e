#pragma once

#include <cstdint>
#include <vector>

#include "cram/graph.hpp"

namespace cram {

// Graphs are encoded as the upper-triangle bit string in colex pair order
// ((0,1),(0,2),(1,2),(0,3),...).  The canonical labeling of a graph is the
// vertex permutation whose encoding is lexicographically least; deleting the
// highest-numbered vertex of a canonically labeled graph leaves a canonically
// labeled graph, which is what the orderly enumeration in enumerate.cpp relies
// on.

// Encoding of g under the identity labeling, one bit per pair, packed LSB
// first into 64-bit words.
std::vector<std::uint64_t> graph_code(const Graph& g);

// Whether the identity labeling is the canonical one.
bool is_canonical(const Graph& g);

// Encoding under the canonical labeling.
std::vector<std::uint64_t> canonical_code(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// |Aut(g)| by permutation search.  Intended for n <= 10 or so.
std::int64_t automorphism_count(const Graph& g);

}  // namespace cram
