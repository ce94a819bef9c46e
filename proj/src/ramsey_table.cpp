#include "cram/ramsey_table.hpp"

#include <algorithm>

namespace cram {

RamseyTable RamseyTable::with_defaults() {
  RamseyTable t;
  t.insert({3, 3, 6, 6, "builtin"});
  t.insert({3, 4, 9, 9, "builtin"});
  t.insert({4, 4, 18, 18, "builtin"});
  return t;
}

void RamseyTable::insert(RamseyEntry e) {
  if (e.a < 1 || e.b < 1) throw ParseError("ramsey table: thresholds must be >= 1");
  if (e.a > e.b) {
    std::swap(e.a, e.b);
  }
  if (e.lo < 1 || e.hi < e.lo) throw ParseError("ramsey table: bad interval for R(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")");
  auto key = std::make_pair(e.a, e.b);
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (it->second.lo != e.lo || it->second.hi != e.hi)
      throw ParseError("ramsey table: conflicting entries for R(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")");
    return;
  }
  entries_.emplace(key, std::move(e));
}

std::optional<RamseyEntry> RamseyTable::find(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 1) return std::nullopt;
  if (a == 1) return RamseyEntry{1, b, 1, 1, "trivial"};
  if (a == 2) return RamseyEntry{2, b, b, b, "trivial"};
  auto it = entries_.find(std::make_pair(a, b));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace cram
