// Command-line front end.  Every subcommand is a thin adapter over the
// library; reported values never depend on --threads.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cram/bounds.hpp"
#include "cram/cache.hpp"
#include "cram/design_search.hpp"
#include "cram/factorization.hpp"
#include "cram/json_io.hpp"
#include "cram/mols.hpp"
#include "cram/search.hpp"
#include "cram/turan.hpp"
#include "cram/witness.hpp"
#include "json.hpp"

using namespace cram;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitMismatch = 4;

std::int64_t parse_budget_ms(const std::string& text) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad duration: " + text);
  }
  if (value < 0) throw ParseError("bad duration: " + text);
  std::string unit = text.substr(pos);
  if (unit == "ms") return value;
  if (unit == "s" || unit.empty()) return value * 1000;
  if (unit == "m") return value * 60 * 1000;
  if (unit == "h") return value * 60 * 60 * 1000;
  throw ParseError("bad duration unit: " + text);
}

// Flags shared by all subcommands.
struct GlobalOpts {
  bool json = false;
  std::string budget = "60s";
  int threads = 1;
  bool deterministic = false;
  std::string ramsey_table_path;
  std::string cache_dir;

  std::int64_t budget_ms() const { return parse_budget_ms(budget); }

  RamseyTable table() const {
    if (!ramsey_table_path.empty()) return load_ramsey_table(ramsey_table_path);
    return RamseyTable::with_defaults();
  }

  std::unique_ptr<WitnessCache> cache() const {
    std::string dir = cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("CRAM_CACHE_DIR")) dir = env;
    if (dir.empty()) return nullptr;
    return std::make_unique<WitnessCache>(dir);
  }

  SearchConfig search_config(BoundsEngine* engine) const {
    SearchConfig cfg;
    cfg.budget_ms = budget_ms();
    cfg.threads = threads;
    cfg.deterministic = deterministic;
    cfg.engine = engine;
    return cfg;
  }
};

// Exact values and lower bounds that come from constructions the library can
// rebuild on demand: the stored colorings and the two factorization families.
CertificateRegistry standard_certificates() {
  CertificateRegistry reg;
  for (const Witness& w : witness_library()) {
    auto check = verify_witness(w);
    if (check.ok)
      reg.add_lower(Query::of(check.claim_query), check.n, "stored coloring " + w.id);
  }
  for (int n = 2; n <= 20; ++n) {
    auto g = gen_factorable_value(round_robin(2 * n));
    if (g.applicable)
      reg.add_exact(g.query, g.value, "1-factorization of K" + std::to_string(2 * n));
  }
  for (int q : {2, 3, 4, 5, 7, 8}) {
    auto g = gen_factorable_value(affine_factorization(q));
    if (g.applicable)
      reg.add_exact(g.query, g.value, "parallel classes of order " + std::to_string(q));
  }
  return reg;
}

BoundsEngine make_engine(const GlobalOpts& g) {
  return BoundsEngine(g.table(), standard_certificates());
}

std::string interval_str(int lo, const std::optional<int>& hi) {
  return "[" + std::to_string(lo) + "," + (hi ? std::to_string(*hi) : "inf") + "]";
}

std::string premise_str(const PremiseRef& p) {
  switch (p.kind) {
    case PremiseRef::Kind::Table:
      return p.id + "=" + std::to_string(p.lo);
    case PremiseRef::Kind::Certificate:
      return p.query.str() + " via " + p.id;
    case PremiseRef::Kind::KbQuery:
    default:
      return p.query.str() + "=" + interval_str(p.lo, p.hi);
  }
}

void print_steps(const Bound& b) {
  for (const ProvenanceStep& s : b.steps) {
    std::string line = "  ";
    line += (s.side == 'L') ? "lo=" : (s.side == 'H') ? "hi=" : "value=";
    line += std::to_string(s.value) + " " + s.rule;
    if (!s.params.empty()) {
      line += "(";
      for (std::size_t i = 0; i < s.params.size(); ++i)
        line += (i ? "," : "") + std::to_string(s.params[i]);
      line += ")";
    }
    for (std::size_t i = 0; i < s.premises.size(); ++i)
      line += (i ? ", " : "  <- ") + premise_str(s.premises[i]);
    std::puts(line.c_str());
  }
}

Query rep_query(int m, int k) { return Query::of(std::vector<int>(k, m)); }

int cmd_bound(const GlobalOpts& g, const std::vector<int>& ms) {
  auto engine = make_engine(g);
  Query q = Query::of(ms);
  Bound b = engine.bound(q);
  if (g.json) {
    std::puts(bound_tree_json(engine, q).c_str());
  } else {
    std::printf("%s = %s\n", q.str().c_str(), interval_str(b.lo, b.hi).c_str());
    print_steps(b);
  }
  return kExitOk;
}

int cmd_exact(const GlobalOpts& g, const std::vector<int>& ms) {
  auto engine = make_engine(g);
  auto cache = g.cache();
  Query q = Query::of(ms);
  auto r = exact_value(q, engine, g.search_config(&engine), cache.get());
  if (g.json) {
    json j;
    j["query"] = q.m;
    j["exact"] = r.exact;
    if (r.exact) j["value"] = r.value;
    j["lo"] = r.interval.lo;
    if (r.interval.hi) j["hi"] = *r.interval.hi;
    j["searches"] = r.searches;
    j["nodes"] = r.stats.nodes;
    std::puts(j.dump().c_str());
  } else if (r.exact) {
    std::printf("%s = %d\n", q.str().c_str(), r.value);
  } else {
    std::printf("%s in %s (undecided within budget)\n", q.str().c_str(),
                interval_str(r.interval.lo, r.interval.hi).c_str());
  }
  return r.exact ? kExitOk : kExitUndecided;
}

int cmd_exists(const GlobalOpts& g, int n, const std::vector<int>& ms) {
  auto engine = make_engine(g);
  Query q = Query::of(ms);
  auto r = exists_good_coloring(n, q, g.search_config(&engine));
  const char* verdict = r.exists == Existence::Yes  ? "yes"
                        : r.exists == Existence::No ? "no"
                                                    : "undecided";
  if (g.json) {
    json j;
    j["n"] = n;
    j["query"] = q.m;
    j["exists"] = verdict;
    if (r.witness) j["witness"] = json::parse(coloring_to_json(*r.witness));
    j["nodes"] = r.stats.nodes;
    std::puts(j.dump().c_str());
  } else {
    std::printf("good coloring of K%d for %s: %s\n", n, q.str().c_str(), verdict);
    if (r.witness) std::puts(coloring_to_json(*r.witness).c_str());
  }
  return r.exists == Existence::Undecided ? kExitUndecided : kExitOk;
}

int report_witness_check(const GlobalOpts& g, const Witness& w) {
  auto check = verify_witness(w);
  if (g.json) {
    json j;
    j["id"] = w.id;
    j["ok"] = check.ok;
    j["alpha"] = check.actual_alpha;
    if (check.ok) j["holds_below"] = json{{"query", check.claim_query}, {"n", check.n}};
    std::puts(j.dump().c_str());
  } else {
    std::string alpha = "(";
    for (std::size_t i = 0; i < check.actual_alpha.size(); ++i)
      alpha += (i ? "," : "") + std::to_string(check.actual_alpha[i]);
    alpha += ")";
    std::printf("%s: alpha = %s %s\n", w.id.c_str(), alpha.c_str(),
                check.ok ? "as expected" : "MISMATCH");
    if (check.ok)
      std::printf("certifies %s > %d\n", Query::of(check.claim_query).str().c_str(),
                  check.n);
  }
  return check.ok ? kExitOk : kExitMismatch;
}

int report_factorization(const GlobalOpts& g, const Factorization& f) {
  try {
    validate_factorization(f);
  } catch (const BadArgs& e) {
    std::fprintf(stderr, "invalid factorization: %s\n", e.what());
    return kExitMismatch;
  }
  auto gen = gen_factorable_value(f);
  if (g.json) {
    json j;
    j["N"] = f.N;
    j["classes"] = json::array();
    for (const Graph& factor : f.factors) {
      auto shape = classify_factor(factor);
      if (shape)
        j["classes"].push_back({{"n", shape->n}, {"q", shape->q}, {"r", shape->r}});
      else
        j["classes"].push_back(nullptr);
    }
    j["ok"] = true;
    if (gen.applicable) {
      j["query"] = gen.query.m;
      j["value"] = gen.value;
    }
    std::puts(j.dump().c_str());
  } else {
    std::printf("valid factorization of K%d into %d classes\n", f.N,
                static_cast<int>(f.factors.size()));
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      auto shape = classify_factor(f.factors[i]);
      if (shape)
        std::printf("  class %d: %d x K%d%s\n", static_cast<int>(i + 1),
                    shape->n - shape->r, shape->q,
                    shape->r ? (" + " + std::to_string(shape->r) + " x K" +
                                std::to_string(shape->q + 1))
                                   .c_str()
                             : "");
      else
        std::printf("  class %d: not a clique union\n", static_cast<int>(i + 1));
    }
    if (gen.applicable)
      std::printf("certifies %s = %d\n", gen.query.str().c_str(), gen.value);
    else
      std::printf("no exact value: %s\n", gen.reason.c_str());
  }
  return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& builtin,
               const std::string& factorization_path, const std::string& witness_path) {
  if (!builtin.empty()) return report_witness_check(g, builtin_witness(builtin));
  if (!factorization_path.empty())
    return report_factorization(
        g, factorization_from_json(read_text_file(factorization_path)));
  return report_witness_check(g, witness_from_json(read_text_file(witness_path)));
}

int cmd_factorize(const GlobalOpts& g, const std::string& kind, int order) {
  Factorization f = (kind == "rr") ? round_robin(order) : affine_factorization(order);
  if (g.json) {
    std::puts(factorization_to_json(f).c_str());
    return kExitOk;
  }
  return report_factorization(g, f);
}

int cmd_search_design(const GlobalOpts& g, int order,
                      const std::vector<std::vector<int>>& profiles) {
  auto r = factorization_search(order, profiles, g.budget_ms());
  if (g.json) {
    json j;
    j["found"] = r.found.has_value();
    j["exhausted"] = r.exhausted;
    j["nodes"] = r.nodes;
    if (r.found) j["factorization"] = json::parse(factorization_to_json(*r.found));
    std::puts(j.dump().c_str());
  } else if (r.found) {
    report_factorization(g, *r.found);
  } else {
    std::printf("no factorization found (%s)\n",
                r.exhausted ? "search space exhausted" : "budget ran out");
  }
  if (r.found || r.exhausted) return kExitOk;
  return kExitUndecided;
}

int cmd_check_lemma(const GlobalOpts& g, const std::string& which, int max_m) {
  std::int64_t violations = 0;
  json j;
  if (which == "extremal") {
    auto rep = check_extremal_lemma(max_m);
    violations = rep.violations;
    j = {{"check", which},
         {"max_m", rep.max_m},
         {"graphs_checked", rep.graphs_checked},
         {"pairs_checked", rep.pairs_checked},
         {"equality_cases", rep.equality_cases},
         {"violations", rep.violations}};
  } else {
    auto rep = (which == "kfree") ? check_kfree_lemma() : check_memo_lemma();
    violations = rep.violations;
    j = {{"check", which},
         {"graphs_checked", rep.graphs_checked},
         {"instances_checked", rep.instances_checked},
         {"violations", rep.violations}};
    for (const auto& [key, value] : rep.notes) j[key] = value;
  }
  if (g.json)
    std::puts(j.dump().c_str());
  else
    for (const auto& [key, value] : j.items())
      std::printf("%s: %s\n", key.c_str(), value.dump().c_str());
  return violations == 0 ? kExitOk : kExitMismatch;
}

int cmd_extract_mols(const GlobalOpts& g, int affine_order, const std::string& path) {
  EdgeColoring f = affine_order > 0 ? to_coloring(affine_factorization(affine_order))
                                    : coloring_from_json(read_text_file(path));
  std::vector<LatinSquare> squares;
  try {
    squares = mols_extract(f);
  } catch (const NotResolvable& e) {
    std::fprintf(stderr, "not a complete square set: %s\n", e.what());
    return kExitMismatch;
  } catch (const NotGrid& e) {
    std::fprintf(stderr, "not a complete square set: %s\n", e.what());
    return kExitMismatch;
  }
  int n = squares.empty() ? 0 : static_cast<int>(squares[0].size());
  if (g.json) {
    json j;
    j["n"] = n;
    j["squares"] = squares;
    std::puts(j.dump().c_str());
    return kExitOk;
  }
  std::printf("%d mutually orthogonal squares of order %d\n",
              static_cast<int>(squares.size()), n);
  for (const auto& sq : squares) {
    for (const auto& row : sq) {
      std::string line;
      for (int s : row) line += (line.empty() ? "" : " ") + std::to_string(s);
      std::puts(line.c_str());
    }
    std::puts("");
  }
  return kExitOk;
}

// ----- table reproduction -----

struct TableEntry {
  std::vector<int> query;
  int expected = 0;
  std::string method;  // I..V, R, b, c, search
  // Reproduction outcome.
  std::string status = "open";  // ok | mismatch | open
  std::optional<int> got_lo, got_hi;
  bool cited_cache = false;
};

// Entries of the two published tables of values, method-tagged.  Families:
//   R   external two-color Ramsey number
//   I   1-factorization of K_{2n}
//   II  resolvable triple system
//   III, IV  affine parallel classes
//   V   class-uniform resolvable design
//   b   lower-bound rule in the engine
//   c   engine composition
//   search  exhaustive search (cache-assisted)
std::vector<TableEntry> table2_entries() {
  std::vector<TableEntry> t;
  auto add = [&](int m, int k, int v, const char* method) {
    t.push_back({rep_query(m, k).m, v, method});
  };
  add(3, 2, 6, "R");
  add(3, 3, 5, "I");
  add(3, 4, 3, "b");
  add(4, 2, 18, "R");
  add(4, 3, 10, "search");
  add(4, 4, 10, "II");
  add(4, 5, 7, "I");
  add(4, 6, 5, "c");
  add(4, 7, 4, "b");
  add(5, 5, 17, "III");
  add(5, 6, 10, "V");
  add(5, 7, 9, "I");
  add(5, 8, 6, "c");
  add(5, 9, 6, "c");
  add(5, 10, 6, "c");
  add(5, 11, 5, "b");
  add(6, 6, 26, "IV");
  add(6, 7, 16, "II");
  add(6, 8, 11, "c");
  add(6, 9, 11, "I");
  add(6, 10, 8, "c");
  for (int k = 11; k <= 15; ++k) add(6, k, 7, "c");
  add(6, 16, 6, "b");
  return t;
}

std::vector<TableEntry> table3_entries() {
  std::vector<TableEntry> t;
  auto add = [&](std::vector<int> q, int v) {
    t.push_back({Query::of(std::move(q)).m, v, "search"});
  };
  add({3, 3, 3}, 5);
  add({4, 3, 3}, 5);
  add({5, 3, 3}, 5);
  add({6, 3, 3}, 6);
  add({4, 4, 3}, 7);
  add({5, 4, 3}, 8);
  add({6, 4, 3}, 8);
  add({7, 4, 3}, 9);
  return t;
}

void set_value(TableEntry& e, int got) {
  e.got_lo = e.got_hi = got;
  e.status = (got == e.expected) ? "ok" : "mismatch";
}

void set_interval(TableEntry& e, int lo, std::optional<int> hi) {
  e.got_lo = lo;
  e.got_hi = hi;
  // An interval excluding the expected value is already a mismatch.
  e.status = (lo > e.expected || (hi && *hi < e.expected)) ? "mismatch" : "open";
}

// Checks a produced factorization certificate against the entry.
void apply_certificate(TableEntry& e, const GenFactorable& gen, BoundsEngine& engine,
                       const std::string& source) {
  if (!gen.applicable || gen.query.m != e.query) {
    e.status = "mismatch";
    return;
  }
  set_value(e, gen.value);
  if (e.status == "ok") engine.certificates().add_exact(gen.query, gen.value, source);
}

void run_table2_entry(TableEntry& e, BoundsEngine& engine, WitnessCache* cache,
                      const GlobalOpts& g, std::int64_t deadline_ms,
                      const std::function<std::int64_t()>& now_ms) {
  Query q = Query::of(e.query);
  int m = q.m[0], k = q.k();
  if (e.method == "R") {
    auto entry = engine.table().find(m, m);
    if (entry && entry->lo == entry->hi)
      set_value(e, entry->lo);
    else if (entry)
      set_interval(e, entry->lo, entry->hi);
    else
      e.status = "open";
  } else if (e.method == "I") {
    apply_certificate(e, gen_factorable_value(round_robin(e.expected - 1)), engine,
                      "1-factorization of K" + std::to_string(e.expected - 1));
  } else if (e.method == "II") {
    int order = e.expected - 1;
    std::vector<std::vector<int>> profiles((order - 1) / 2,
                                           std::vector<int>(order / 3, 3));
    auto r = factorization_search(order, profiles,
                                  std::max<std::int64_t>(1, deadline_ms - now_ms()));
    if (!r.found) {
      e.status = r.exhausted ? "mismatch" : "open";
      return;
    }
    apply_certificate(e, gen_factorable_value(*r.found), engine,
                      "resolvable triple system on " + std::to_string(order));
  } else if (e.method == "III" || e.method == "IV") {
    apply_certificate(e, gen_factorable_value(affine_factorization(m - 1)), engine,
                      "parallel classes of order " + std::to_string(m - 1));
  } else if (e.method == "V") {
    std::vector<std::vector<int>> profiles(6, {3, 2, 2, 2});
    auto r = factorization_search(9, profiles,
                                  std::max<std::int64_t>(1, deadline_ms - now_ms()));
    if (!r.found) {
      e.status = r.exhausted ? "mismatch" : "open";
      return;
    }
    apply_certificate(e, gen_factorable_value(*r.found), engine,
                      "class-uniform resolvable design on 9");
  } else if (e.method == "b" || e.method == "c") {
    Bound b = engine.bound(q);
    if (b.exact())
      set_value(e, b.lo);
    else
      set_interval(e, b.lo, b.hi);
  } else {  // search
    Bound b = engine.bound(q);
    if (b.exact()) {
      set_value(e, b.lo);
      return;
    }
    if (b.lo != e.expected) {
      set_interval(e, b.lo, b.hi);
      return;
    }
    if (cache && cache->known_no(e.expected, q)) {
      e.cited_cache = true;
      engine.certificates().add_exact(q, e.expected, "cached exhaustion");
      set_value(e, engine.bound(q).exact() ? engine.bound(q).lo : b.lo);
      return;
    }
    // Settle the nearby exact values first; their intervals drive the
    // degree caps, and without them this search does not fit a table run.
    SearchConfig cfg = g.search_config(&engine);
    cfg.budget_ms = 30000;
    exact_value(Query::of({4, 3, 3}), engine, cfg, cache);
    exact_value(Query::of({4, 4, 3}), engine, cfg, cache);
    cfg.budget_ms = std::max<std::int64_t>(1, deadline_ms - now_ms());
    auto r = exists_good_coloring(e.expected, q, cfg);
    if (r.exists == Existence::No) {
      if (cache) cache->store_no(e.expected, q);
      engine.certificates().add_exact(q, e.expected, "exhaustive search");
      set_value(e, e.expected);
    } else if (r.exists == Existence::Yes) {
      e.status = "mismatch";  // contradicts the certified lower bound
    } else {
      set_interval(e, b.lo, b.hi);
    }
  }
}

int cmd_table(const GlobalOpts& g, int which) {
  auto engine = make_engine(g);
  auto cache = g.cache();
  auto start = std::chrono::steady_clock::now();
  std::function<std::int64_t()> now_ms = [&start]() -> std::int64_t {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  };
  std::int64_t deadline = g.budget_ms();

  std::vector<TableEntry> entries =
      (which == 2) ? table2_entries() : table3_entries();
  if (which == 2) {
    // Certificate-producing entries run first so the search-tagged entry can
    // lean on their exact values.
    for (TableEntry& e : entries)
      if (e.method != "search")
        run_table2_entry(e, engine, cache.get(), g, deadline, now_ms);
    for (TableEntry& e : entries)
      if (e.method == "search")
        run_table2_entry(e, engine, cache.get(), g, deadline, now_ms);
  } else {
    for (TableEntry& e : entries) {
      SearchConfig cfg = g.search_config(&engine);
      cfg.budget_ms = std::max<std::int64_t>(1, deadline - now_ms());
      auto r = exact_value(Query::of(e.query), engine, cfg, cache.get());
      if (r.exact)
        set_value(e, r.value);
      else
        set_interval(e, r.interval.lo, r.interval.hi);
    }
  }

  bool mismatch = false, open = false;
  for (const TableEntry& e : entries) {
    mismatch |= e.status == "mismatch";
    open |= e.status == "open";
  }

  if (g.json) {
    json j;
    j["table"] = which;
    j["ok"] = !mismatch;
    j["entries"] = json::array();
    for (const TableEntry& e : entries) {
      json row;
      row["query"] = e.query;
      row["expected"] = e.expected;
      row["method"] = e.method;
      row["status"] = e.status;
      if (e.got_lo) row["lo"] = *e.got_lo;
      if (e.got_hi) row["hi"] = *e.got_hi;
      if (e.cited_cache) row["cited_cache"] = true;
      j["entries"].push_back(row);
    }
    std::puts(j.dump().c_str());
  } else {
    for (const TableEntry& e : entries) {
      Query q = Query::of(e.query);
      bool uniform = true;
      for (int m : e.query) uniform &= m == e.query[0];
      std::string name = uniform && q.k() > 1
                             ? "(" + std::to_string(e.query[0]) + ";" +
                                   std::to_string(q.k()) + ")"
                             : q.str();
      std::string got = !e.got_lo               ? "?"
                        : e.status == "open"    ? interval_str(*e.got_lo, e.got_hi)
                                                : std::to_string(*e.got_lo);
      std::printf("%-10s %3d  [%s]%s %s%s\n", name.c_str(), e.expected,
                  e.method.c_str(), e.cited_cache ? " (cache)" : "", got.c_str(),
                  e.status == "ok"         ? ""
                  : e.status == "mismatch" ? "  MISMATCH"
                                           : "  undecided");
    }
    std::printf("table %d: %s\n", which,
                mismatch ? "MISMATCH" : open ? "incomplete" : "reproduced");
  }
  if (mismatch) return kExitMismatch;
  return open ? kExitUndecided : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complementary Ramsey numbers: bounds, searches, certificates"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--budget", g.budget, "time budget, e.g. 500ms, 120s, 30m");
  app.add_option("--threads", g.threads, "worker threads for searches")
      ->check(CLI::Range(1, 256));
  app.add_flag("--deterministic", g.deterministic,
               "single-threaded, stable witness order");
  app.add_option("--ramsey-table", g.ramsey_table_path,
                 "JSON file of two-color Ramsey values");
  app.add_option("--cache-dir", g.cache_dir,
                 "witness cache directory (default: $CRAM_CACHE_DIR)");

  std::function<int()> action;

  // Global flags stay usable after the subcommand's positionals.
  app.fallthrough();

  std::vector<int> bound_ms;
  auto* bound = app.add_subcommand("bound", "interval for a query, with provenance");
  bound->add_option("m", bound_ms, "independence thresholds")
      ->required()
      ->check(CLI::PositiveNumber);
  bound->callback([&] { action = [&] { return cmd_bound(g, bound_ms); }; });

  std::vector<int> exact_ms;
  auto* exact = app.add_subcommand("exact", "exact value by bounded search");
  exact->add_option("m", exact_ms, "independence thresholds")
      ->required()
      ->check(CLI::PositiveNumber);
  exact->callback([&] { action = [&] { return cmd_exact(g, exact_ms); }; });

  int exists_n = 0;
  std::vector<int> exists_ms;
  auto* exists = app.add_subcommand("exists", "good coloring of K_n for a query?");
  exists->add_option("n", exists_n, "vertex count")->required()->check(
      CLI::PositiveNumber);
  exists->add_option("m", exists_ms, "independence thresholds")
      ->required()
      ->check(CLI::PositiveNumber);
  exists->callback([&] { action = [&] { return cmd_exists(g, exists_n, exists_ms); }; });

  std::string verify_builtin, verify_fact, verify_path;
  auto* verify = app.add_subcommand("verify", "check a witness or factorization file");
  verify->add_option("--builtin", verify_builtin, "stored coloring id (W1..W4)");
  verify->add_option("--factorization", verify_fact, "factorization JSON file");
  verify->add_option("path", verify_path, "witness JSON file");
  verify->callback([&] {
    action = [&] {
      if (verify_builtin.empty() && verify_fact.empty() && verify_path.empty())
        throw CLI::RequiredError("verify: a path, --builtin or --factorization");
      return cmd_verify(g, verify_builtin, verify_fact, verify_path);
    };
  });

  std::string fact_kind;
  int fact_order = 0;
  auto* factorize = app.add_subcommand("factorize", "build a known factorization");
  factorize->add_option("kind", fact_kind, "rr | affine")
      ->required()
      ->check(CLI::IsMember({"rr", "affine"}));
  factorize->add_option("order", fact_order, "K_N order (rr) or field order (affine)")
      ->required()
      ->check(CLI::PositiveNumber);
  factorize->callback(
      [&] { action = [&] { return cmd_factorize(g, fact_kind, fact_order); }; });

  int design_n = 0;
  std::vector<std::string> design_profiles;
  auto* design = app.add_subcommand("search-design",
                                    "search for a factorization with given classes");
  design->add_option("N", design_n, "vertex count")->required()->check(
      CLI::PositiveNumber);
  design->add_option("profile", design_profiles,
                     "one comma-separated component-size list per class")
      ->required();
  design->callback([&] {
    action = [&] {
      std::vector<std::vector<int>> profiles;
      for (const std::string& p : design_profiles) {
        std::vector<int> sizes;
        std::size_t at = 0;
        while (at <= p.size()) {
          std::size_t comma = p.find(',', at);
          if (comma == std::string::npos) comma = p.size();
          try {
            std::size_t used = 0;
            std::string piece = p.substr(at, comma - at);
            sizes.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw ParseError("bad profile: " + p);
          } catch (const std::exception&) {
            throw ParseError("bad profile: " + p);
          }
          at = comma + 1;
        }
        profiles.push_back(std::move(sizes));
      }
      return cmd_search_design(g, design_n, profiles);
    };
  });

  std::string lemma_which;
  int lemma_max_m = 7;
  auto* lemma = app.add_subcommand("check-lemma", "exhaustive lemma verification");
  lemma->add_option("which", lemma_which, "kfree | memo | extremal")
      ->required()
      ->check(CLI::IsMember({"kfree", "memo", "extremal"}));
  lemma->add_option("--max-m", lemma_max_m, "largest order for extremal")
      ->check(CLI::Range(2, 8));
  lemma->callback(
      [&] { action = [&] { return cmd_check_lemma(g, lemma_which, lemma_max_m); }; });

  int table_which = 0;
  auto* table = app.add_subcommand("table", "reproduce a published value table");
  table->add_option("which", table_which, "2 | 3")->required()->check(
      CLI::IsMember({2, 3}));
  table->callback([&] { action = [&] { return cmd_table(g, table_which); }; });

  int mols_affine = 0;
  std::string mols_path;
  auto* mols = app.add_subcommand("extract-mols",
                                  "orthogonal Latin squares from a coloring");
  mols->add_option("--affine", mols_affine, "build the coloring from a field order")
      ->check(CLI::PositiveNumber);
  mols->add_option("path", mols_path, "coloring JSON file");
  mols->callback([&] {
    action = [&] {
      if (mols_affine == 0 && mols_path.empty())
        throw CLI::RequiredError("extract-mols: a path or --affine");
      return cmd_extract_mols(g, mols_affine, mols_path);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitUsage;
  } catch (const BadArgs& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitMismatch;
  }
}
