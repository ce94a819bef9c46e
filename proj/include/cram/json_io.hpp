#pragma once

#include <filesystem>
#include <string>

#include "cram/bounds.hpp"
#include "cram/coloring.hpp"
#include "cram/factorization.hpp"
#include "cram/graph.hpp"
#include "cram/ramsey_table.hpp"
#include "cram/witness.hpp"

namespace cram {

// Wire formats, all 1-based:
//   graph          {"n": 5, "edges": [[1,2],[2,3]]}, u < v, no repeats
//   coloring       {"n": 7, "k": 3, "edges": [{"u":1,"v":2,"c":2}, ...]},
//                  colors 1..k, every pair exactly once
//   witness        coloring plus {"id": "...", "expected_alpha": [...]}
//   ramsey table   [{"a":4,"b":4,"exact":18,"source":"..."},
//                   {"a":3,"b":6,"lo":18,"hi":18,"source":"..."}]
//   factorization  {"N": 9, "factors": [[[1,2],[1,3]], ...]}
//   certificate    {"query":[4,4,4,4], "exact":10, "source":"...",
//                   "factorization":"<path>"}
// Readers throw ParseError naming the offending key.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string coloring_to_json(const EdgeColoring& f);
EdgeColoring coloring_from_json(const std::string& text);

std::string witness_to_json(const Witness& w);
Witness witness_from_json(const std::string& text);

std::string factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const std::string& text);

// Entry interval plus recorded derivation steps; premises recursively carry
// the sub-entries they cite, each query expanded at most once.
std::string bound_tree_json(const BoundsEngine& engine, const Query& q);

std::string exact_certificate_json(const Query& q, int value, const std::string& source,
                                   const std::string& factorization_path);

// Missing file: built-in defaults only.  Entries merge over the defaults;
// conflicting duplicates raise ParseError.
RamseyTable load_ramsey_table(const std::filesystem::path& path);
std::string ramsey_table_to_json(const RamseyTable& t);

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);

}  // namespace cram
