#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cram/bounds.hpp"
#include "cram/coloring.hpp"

namespace cram {

class WitnessCache;

enum class Existence { Yes, No, Undecided };

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t subset_prunes = 0;    // forced independent set among filled pairs
  std::int64_t count_prunes = 0;     // class cannot reach its minimum edge count
  std::int64_t degree_prunes = 0;    // color-degree cap at a vertex
  std::int64_t symmetry_prunes = 0;  // interchangeable color opened out of order
  std::int64_t elapsed_ms = 0;
};

struct SearchConfig {
  std::int64_t budget_ms = 60000;
  int threads = 1;
  // Forces the single-threaded scan; the witness found is then the
  // colex-least good coloring under the color-introduction convention.
  bool deterministic = false;
  bool subset_prune = true;
  bool count_prune = true;
  bool degree_prune = true;
  bool symmetry_prune = true;
  // Degree caps are read from here; a scratch engine is built when null.
  BoundsEngine* engine = nullptr;
};

struct SearchOutcome {
  Existence exists = Existence::Undecided;
  std::optional<EdgeColoring> witness;  // present iff exists == Yes
  // Undecided only: colors of the colex edge prefix still open at budget
  // exit; everything colex-below this path is fully eliminated.
  std::vector<int> frontier;
  SearchStats stats;
};

// Decides whether some f in C(n,k) has alpha_i(f) <= m_i - 1 for every i, by
// backtracking over the pairs of K_n in colex order.  Yes outcomes carry a
// witness re-verified through alpha_vector.  No outcome is only returned
// after full elimination; budget exhaustion yields Undecided.
SearchOutcome exists_good_coloring(int n, const Query& q, const SearchConfig& cfg = {});

struct ExactOutcome {
  Query query;
  bool exact = false;
  int value = 0;           // set when exact
  BoundInterval interval;  // final engine interval; [value,value] when exact
  int searches = 0;        // exists_good_coloring invocations
  SearchStats stats;       // aggregated over those invocations
};

// Narrows the engine interval for q to an exact value by scanning orders
// upward: the least n admitting no good coloring is the value.  Good
// colorings found on the way are registered as lower-bound certificates (and
// cached when a cache is given); a completed scan registers the exact value.
ExactOutcome exact_value(const Query& q, BoundsEngine& engine, const SearchConfig& cfg = {},
                         WitnessCache* cache = nullptr);

// Three-color decision through nested pairs of Ramsey (m3,m2)-graphs on [n]:
// returns true iff alpha(G minus H) >= m1 for every such pair H subseteq G,
// which holds iff n vertices force the thresholds (m1,m2,m3).  Thresholds
// must exceed 2 (BadArgs); n  <= 7 (TooLarge).
bool decide_via_ramsey_pairs(int m1, int m2, int m3, int n);

struct LemmaCheckReport {
  std::int64_t graphs_checked = 0;
  std::int64_t instances_checked = 0;
  std::int64_t violations = 0;
  std::map<std::string, std::int64_t> notes;
};

// Every cubic graph of order 10 without K4 has independence number >= 4;
// checked over the isomorphism classes.  notes: "cubic" (class count),
// "k4_free", and "counterexample_alpha" for K4 + 3-prism, which shows the K4
// exclusion is needed.
LemmaCheckReport check_kfree_lemma();

// Every triangle-free graph of order 8 with a vertex of degree <= 1 has
// independence number >= 4; checked over all labeled order-7 triangle-free
// graphs extended by an 8th vertex of degree 0 or 1.  notes: "base_graphs",
// "extensions".
LemmaCheckReport check_memo_lemma();

}  // namespace cram
