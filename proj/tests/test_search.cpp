#include <bit>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "cram/cache.hpp"
#include "cram/search.hpp"
#include "doctest.h"

using cram::BadArgs;
using cram::BoundsEngine;
using cram::EdgeColoring;
using cram::exact_value;
using cram::Existence;
using cram::exists_good_coloring;
using cram::Query;
using cram::SearchConfig;
using cram::TooLarge;
using cram::WitnessCache;

namespace {

SearchConfig quick(BoundsEngine* eng = nullptr) {
  SearchConfig cfg;
  cfg.budget_ms = 60000;
  cfg.engine = eng;
  return cfg;
}

// Reference decision by full enumeration: every assignment of k colors to the
// pairs, alpha computed by scanning all vertex subsets.
bool oracle_exists(int n, const std::vector<int>& m) {
  int k = static_cast<int>(m.size());
  int E = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  std::int64_t total = 1;
  for (int e = 0; e < E; ++e) total *= k;
  for (std::int64_t id = 0; id < total; ++id) {
    std::int64_t rest = id;
    std::vector<int> col(E);
    for (int e = 0; e < E; ++e) {
      col[e] = rest % k;
      rest /= k;
    }
    bool good = true;
    for (int c = 0; c < k && good; ++c) {
      int alpha = 0;
      for (unsigned s = 0; s < (1u << n); ++s) {
        bool indep = true;
        for (int e = 0; e < E && indep; ++e)
          if (col[e] == c && (s >> pairs[e].first & 1u) && (s >> pairs[e].second & 1u))
            indep = false;
        if (indep) alpha = std::max(alpha, std::popcount(s));
      }
      if (alpha > m[c] - 1) good = false;
    }
    if (good) return true;
  }
  return false;
}

bool verified_yes(const cram::SearchOutcome& o, const std::vector<int>& m) {
  if (o.exists != Existence::Yes || !o.witness) return false;
  auto a = o.witness->alpha_vector();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (a[i] > m[i] - 1) return false;
  return true;
}

}  // namespace

TEST_CASE("good colorings on known small instances") {
  BoundsEngine eng;
  auto cfg = quick(&eng);

  auto o = exists_good_coloring(4, Query::of({3, 3, 3}), cfg);
  CHECK(verified_yes(o, {3, 3, 3}));

  CHECK(exists_good_coloring(5, Query::of({3, 3, 3}), cfg).exists == Existence::No);
  CHECK(verified_yes(exists_good_coloring(6, Query::of({4, 4, 3}), cfg), {4, 4, 3}));
  CHECK(exists_good_coloring(7, Query::of({4, 4, 3}), cfg).exists == Existence::No);
  CHECK(exists_good_coloring(2, Query::of({2, 2}), cfg).exists == Existence::No);

  // A unit threshold can never be met on a real vertex set.
  CHECK(exists_good_coloring(3, Query::of({4, 1}), cfg).exists == Existence::No);
  // No pairs to color.
  CHECK(verified_yes(exists_good_coloring(1, Query::of({2, 2}), cfg), {2, 2}));
  // One color: the complete class has independence number 1.
  CHECK(verified_yes(exists_good_coloring(6, Query::of({3}), cfg), {3}));

  CHECK_THROWS_AS(exists_good_coloring(0, Query::of({3, 3}), cfg), BadArgs);
  CHECK_THROWS_AS(exists_good_coloring(65, Query::of({3, 3}), cfg), TooLarge);
}

TEST_CASE("search agrees with full enumeration on small orders") {
  BoundsEngine eng;
  auto cfg = quick(&eng);
  std::vector<std::vector<int>> queries = {{2}, {4}, {2, 2}, {3, 2}, {3, 3},
                                           {4, 3}, {3, 3, 3}, {4, 4, 3}};
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : queries) {
      bool expect = oracle_exists(n, m);
      auto got = exists_good_coloring(n, Query::of(m), cfg);
      REQUIRE(got.exists != Existence::Undecided);
      CHECK((got.exists == Existence::Yes) == expect);
      if (got.exists == Existence::Yes) CHECK(verified_yes(got, Query::of(m).m));
    }
  }
}

TEST_CASE("disabling any single prune leaves outcomes unchanged") {
  std::vector<std::pair<int, std::vector<int>>> suite = {
      {4, {3, 3, 3}}, {5, {3, 3, 3}}, {5, {4, 3, 3}}, {6, {4, 4, 3}},
      {6, {3, 3}},    {5, {4, 4}},    {6, {4, 3, 3}},
  };
  for (auto& [n, m] : suite) {
    BoundsEngine eng;
    auto base = exists_good_coloring(n, Query::of(m), quick(&eng)).exists;
    REQUIRE(base != Existence::Undecided);
    for (int which = 0; which < 3; ++which) {
      auto cfg = quick(&eng);
      if (which == 0) cfg.subset_prune = false;
      if (which == 1) cfg.count_prune = false;
      if (which == 2) cfg.degree_prune = false;
      CHECK(exists_good_coloring(n, Query::of(m), cfg).exists == base);
    }
  }
}

TEST_CASE("a vanished good coloring never comes back at higher order") {
  BoundsEngine eng;
  auto cfg = quick(&eng);
  for (auto& m : std::vector<std::vector<int>>{{3, 3, 3}, {4, 3, 3}}) {
    CHECK(exists_good_coloring(5, Query::of(m), cfg).exists == Existence::No);
    CHECK(exists_good_coloring(6, Query::of(m), cfg).exists == Existence::No);
  }
}

TEST_CASE("deterministic mode returns a stable least witness") {
  BoundsEngine eng;
  auto cfg = quick(&eng);
  cfg.deterministic = true;
  auto a = exists_good_coloring(6, Query::of({4, 4, 3}), cfg);
  auto b = exists_good_coloring(6, Query::of({4, 4, 3}), cfg);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->raw() == b.witness->raw());
  // The first pair takes the first color.
  CHECK(a.witness->color(0, 1) == 0);
}

TEST_CASE("threaded existence answers match single-threaded") {
  BoundsEngine eng;
  auto cfg = quick(&eng);
  cfg.threads = 4;
  CHECK(exists_good_coloring(5, Query::of({3, 3, 3}), cfg).exists == Existence::No);
  auto yes = exists_good_coloring(6, Query::of({4, 4, 3}), cfg);
  CHECK(verified_yes(yes, {4, 4, 3}));
  CHECK(exists_good_coloring(7, Query::of({4, 4, 3}), cfg).exists == Existence::No);
}

TEST_CASE("budget exhaustion reports undecided") {
  BoundsEngine eng;
  auto cfg = quick(&eng);
  cfg.budget_ms = 1;
  auto o = exists_good_coloring(10, Query::of({4, 4, 4}), cfg);
  CHECK(o.exists == Existence::Undecided);
  CHECK(!o.witness.has_value());
}

TEST_CASE("exact values on the three-three family") {
  BoundsEngine eng;
  auto r = exact_value(Query::of({3, 3, 3}), eng, quick());
  CHECK(r.exact);
  CHECK(r.value == 5);
  CHECK(r.searches <= 3);

  r = exact_value(Query::of({4, 3, 3}), eng, quick());
  CHECK(r.exact);
  CHECK(r.value == 5);

  r = exact_value(Query::of({5, 3, 3}), eng, quick());
  CHECK(r.exact);
  CHECK(r.value == 5);

  // The engine interval is already tight: no search calls at all.
  r = exact_value(Query::of({6, 3, 3}), eng, quick());
  CHECK(r.exact);
  CHECK(r.value == 6);
  CHECK(r.searches == 0);

  // Completed values feed back into the engine as certificates.
  auto b = eng.bound(Query::of({3, 3, 3}));
  CHECK(b.lo == 5);
  REQUIRE(b.hi.has_value());
  CHECK(*b.hi == 5);
}

TEST_CASE("exact value for the mid-size three-color query") {
  BoundsEngine eng;
  auto r = exact_value(Query::of({4, 4, 3}), eng, quick());
  CHECK(r.exact);
  CHECK(r.value == 7);
  auto b = eng.bound(Query::of({4, 4, 3}));
  CHECK(b.exact());
  CHECK(b.lo == 7);
}

TEST_CASE("hopeless budgets narrow instead of deciding") {
  BoundsEngine eng;
  auto cfg = quick();
  cfg.budget_ms = 200;
  auto r = exact_value(Query::of({5, 5}), eng, cfg);
  CHECK(!r.exact);
  CHECK(r.interval.lo >= 18);
  // hi stays at the additive-recurrence ceiling: 2 * (R(3,5) + R(4,4)).
  REQUIRE(r.interval.hi.has_value());
  CHECK(*r.interval.hi == 64);
}

TEST_CASE("exact values round-trip through the witness cache") {
  auto dir = std::filesystem::temp_directory_path() / "cram_cache_test";
  std::filesystem::remove_all(dir);
  WitnessCache cache(dir);
  {
    BoundsEngine eng;
    auto r = exact_value(Query::of({4, 4, 3}), eng, quick(), &cache);
    CHECK(r.exact);
    CHECK(r.value == 7);
    CHECK(r.searches > 0);
  }
  CHECK(std::filesystem::exists(dir / "good_n6_m4-4-3.json"));
  CHECK(std::filesystem::exists(dir / "resume_n7_m4-4-3.json"));
  CHECK(cache.known_no(7, Query::of({4, 4, 3})));
  {
    // Fresh engine, warm cache: the scan replays without searching.
    BoundsEngine eng;
    auto r = exact_value(Query::of({4, 4, 3}), eng, quick(), &cache);
    CHECK(r.exact);
    CHECK(r.value == 7);
    CHECK(r.searches == 0);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("nested ramsey-graph pairs decide three-color queries") {
  CHECK(cram::decide_via_ramsey_pairs(5, 3, 3, 5));
  CHECK(!cram::decide_via_ramsey_pairs(4, 4, 3, 6));
  CHECK(cram::decide_via_ramsey_pairs(4, 4, 3, 7));
  CHECK_THROWS_AS(cram::decide_via_ramsey_pairs(2, 3, 3, 5), BadArgs);
  CHECK_THROWS_AS(cram::decide_via_ramsey_pairs(4, 4, 3, 8), TooLarge);
}

TEST_CASE("cubic order-10 graphs without K4 have four independent vertices") {
  auto rep = cram::check_kfree_lemma();
  CHECK(rep.violations == 0);
  CHECK(rep.notes["cubic"] == 21);
  CHECK(rep.notes["k4_free"] == 19);
  CHECK(rep.notes["counterexample_alpha"] == 3);
}

TEST_CASE("triangle-free order-8 graphs with a low-degree vertex") {
  auto rep = cram::check_memo_lemma();
  CHECK(rep.violations == 0);
  CHECK(rep.notes["base_graphs"] == 133501);
  CHECK(rep.notes["extensions"] == 133501 * 8);
}
