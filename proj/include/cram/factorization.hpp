#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cram/bounds.hpp"
#include "cram/coloring.hpp"
#include "cram/graph.hpp"

namespace cram {

// Edge-disjoint spanning subgraphs of K_N whose edge sets cover it exactly.
struct Factorization {
  int N = 0;
  std::vector<Graph> factors;
};

// Checks vertex counts, pairwise edge-disjointness and exact cover; throws
// BadArgs naming the first violation.
void validate_factorization(const Factorization& f);

// The same object as an edge coloring, factor i -> color i.
EdgeColoring to_coloring(const Factorization& f);

// Circle-method 1-factorization of K_N: N-1 perfect matchings.
Factorization round_robin(int N);  // throws OddOrder

// Parallel classes of the affine plane of order q over the q-element field:
// K_{q^2} into q+1 factors, each q disjoint K_q.  q=9 would need 81 vertices
// and is refused (graphs stop at 64).
Factorization affine_factorization(int q);  // UnsupportedOrder, TooLarge

// Shape r K_{q+1} + (n-r) K_q: n components, r of the larger size.
struct FactorClassShape {
  int n = 0, q = 0, r = 0;
};

// Reads the shape off the actual components; nullopt when some component is
// not a clique or the sizes are not two adjacent values.
std::optional<FactorClassShape> classify_factor(const Graph& g);

struct GenFactorable {
  bool applicable = false;
  Query query;         // thresholds n_i + 1, when applicable
  int value = 0;       // N + 1
  std::vector<FactorClassShape> shapes;
  std::string reason;  // set when not applicable
};

// Exact-value certificate wrung out of a factorization, when every factor has
// a shape and (n_i - r_i - 1) q_i > 0 for some factor.
GenFactorable gen_factorable_value(const Factorization& f);

struct Rational {
  std::int64_t num = 0, den = 1;
  bool integral() const { return num % den == 0; }
};

// Class count C(mn+r,2) / (r C(m+1,2) + (n-r) C(m,2)) as a reduced fraction.
Rational n_mnr(int m, int n, int r);  // throws BadArgs

}  // namespace cram
