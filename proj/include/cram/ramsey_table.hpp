#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cram/common.hpp"

namespace cram {

// Known two-color Ramsey values R(a,b), stored as intervals (lo == hi when
// exact).  Lookups are symmetric in (a,b); rows with a == 1 or a == 2 are
// answered directly (1 and b) without being stored.
struct RamseyEntry {
  int a = 0, b = 0;
  int lo = 0, hi = 0;
  std::string source;
};

class RamseyTable {
 public:
  // R(3,3)=6, R(3,4)=9, R(4,4)=18.
  static RamseyTable with_defaults();

  // Duplicate key with different interval -> ParseError.
  void insert(RamseyEntry e);
  std::optional<RamseyEntry> find(int a, int b) const;
  const std::map<std::pair<int, int>, RamseyEntry>& entries() const { return entries_; }

 private:
  std::map<std::pair<int, int>, RamseyEntry> entries_;
};

}  // namespace cram
