#pragma once

#include "cram/graph.hpp"

namespace cram {

// Exact maximum clique size, branch and bound with a greedy-coloring upper
// bound on bitset candidate sets.
int clique_number(const Graph& g);

// Exact independence number, computed as the clique number of the complement.
int independence_number(const Graph& g);

// Whether g has a clique of the given size (early-exit search, s >= 0).
bool has_clique_of_size(const Graph& g, int s);
bool has_independent_set(const Graph& g, int s);

}  // namespace cram
