#pragma once

#include <string>
#include <vector>

#include "cram/coloring.hpp"

namespace cram {

// A witness is a concrete edge coloring together with the alpha vector it is
// expected to have.  A coloring with alpha vector a on n vertices certifies
// that no threshold vector (a_1+1, ..., a_k+1), or anything componentwise
// larger, is forced on n vertices; claim_query holds that minimal vector,
// sorted non-increasing.
struct Witness {
  std::string id;
  EdgeColoring coloring;
  std::vector<int> expected_alpha;   // by color
  std::vector<int> claim_query;     // sorted non-increasing
};

struct WitnessCheck {
  bool ok = false;
  std::vector<int> actual_alpha;
  // Certified strict lower bound: value > n for claim_query (empty if !ok).
  std::vector<int> claim_query;
  int n = 0;
};

// Recomputes the alpha vector of w.coloring and compares with the expectation.
WitnessCheck verify_witness(const Witness& w);

// Built-in witnesses W1..W4 (fixed labeled colorings; see witness.cpp).
std::vector<Witness> witness_library();
const Witness& builtin_witness(const std::string& id);

}  // namespace cram
