#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cram/graph.hpp"

namespace cram {

struct GraphConstraints {
  std::optional<int> regular_degree;
  bool triangle_free = false;
  bool k4_free = false;
  // At least one vertex ends with degree <= this value.
  std::optional<int> some_vertex_degree_at_most;
};

// Streams every graph of order n satisfying the constraints, one callback per
// graph.  With up_to_iso, exactly one representative per isomorphism class is
// produced (the one whose labeling is canonical per iso.hpp); the generation
// is orderly, extending canonically labeled prefixes vertex by vertex.
// Returns the number of graphs streamed.  n <= 12.
std::int64_t enumerate_graphs(int n, const GraphConstraints& c, bool up_to_iso,
                              const std::function<void(const Graph&)>& sink);

// Convenience collector.
std::vector<Graph> collect_graphs(int n, const GraphConstraints& c, bool up_to_iso);

}  // namespace cram
