#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cram/bounds.hpp"
#include "cram/coloring.hpp"

namespace cram {

// On-disk store of search results under one directory.
//   good_{key}.json    a good coloring for (n, q), coloring wire format
//   resume_{key}.json  {"n","m","status":"no"|"open","frontier":[...]}
// with key = "n{n}_m{m1-m2-...}".  Good colorings are re-verified against the
// thresholds on load; anything malformed reads as a miss.  A resume file with
// status "no" records a completed exhaustion.
class WitnessCache {
 public:
  explicit WitnessCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  static std::string key(int n, const Query& q);

  std::optional<EdgeColoring> load_good(int n, const Query& q) const;
  void store_good(int n, const Query& q, const EdgeColoring& f) const;

  bool known_no(int n, const Query& q) const;
  void store_no(int n, const Query& q) const;

  std::optional<std::vector<int>> load_frontier(int n, const Query& q) const;
  void store_frontier(int n, const Query& q, const std::vector<int>& frontier) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace cram
