#include "cram/enumerate.hpp"
#include "cram/mis.hpp"
#include "cram/search.hpp"

namespace cram {

LemmaCheckReport check_kfree_lemma() {
  LemmaCheckReport rep;
  GraphConstraints c;
  c.regular_degree = 3;
  rep.graphs_checked = enumerate_graphs(10, c, /*up_to_iso=*/true, [&](const Graph& g) {
    if (has_clique_of_size(g, 4)) return;
    ++rep.notes["k4_free"];
    ++rep.instances_checked;
    if (independence_number(g) < 4) ++rep.violations;
  });
  rep.notes["cubic"] = rep.graphs_checked;

  // K4 + 3-prism: cubic of order 10 with independence number 3, so the K4
  // exclusion cannot be dropped.
  Graph cx = disjoint_union(complete_graph(4), prism_graph());
  int ca = independence_number(cx);
  rep.notes["counterexample_alpha"] = ca;
  if (ca != 3 || !has_clique_of_size(cx, 4)) ++rep.violations;
  return rep;
}

LemmaCheckReport check_memo_lemma() {
  LemmaCheckReport rep;
  GraphConstraints c;
  c.triangle_free = true;
  rep.graphs_checked = enumerate_graphs(7, c, /*up_to_iso=*/false, [&](const Graph& g) {
    // Degree <= 1 at the extra vertex keeps every extension triangle-free.
    bool base_big = has_independent_set(g, 4);
    for (int attach = -1; attach < 7; ++attach) {
      ++rep.instances_checked;
      if (base_big) continue;  // an induced subgraph already has 4 independent
      if (attach < 0) {
        // Isolated vertex joins any independent 3-set of the base.
        if (!has_independent_set(g, 3)) ++rep.violations;
        continue;
      }
      Graph h(8);
      for (auto [u, v] : g.edges()) h.add_edge(u, v);
      h.add_edge(attach, 7);
      if (!has_independent_set(h, 4)) ++rep.violations;
    }
  });
  rep.notes["base_graphs"] = rep.graphs_checked;
  rep.notes["extensions"] = rep.instances_checked;
  return rep;
}

}  // namespace cram
