#include "cram/json_io.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cram {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int require_int(const json& j, const char* key, int lo, int hi) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer \"") + key + "\"");
  int v = j[key].get<int>();
  if (v < lo || v > hi)
    throw ParseError(std::string("\"") + key + "\" out of range: " + std::to_string(v));
  return v;
}

json pair_list(const std::vector<std::pair<int, int>>& edges) {
  json a = json::array();
  for (auto [u, v] : edges) a.push_back({u + 1, v + 1});
  return a;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  j["edges"] = pair_list(g.edges());
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  json j = parse(text);
  int n = require_int(j, "n", 1, 64);
  Graph g(n);
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing \"edges\" array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge entries must be [u,v] pairs");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 1 || v < 1 || u > n || v > n || u >= v)
      throw ParseError("edge [" + std::to_string(u) + "," + std::to_string(v) +
                       "] needs 1 <= u < v <= n");
    if (g.has_edge(u - 1, v - 1))
      throw ParseError("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

std::string coloring_to_json(const EdgeColoring& f) {
  json j;
  j["n"] = f.n();
  j["k"] = f.k();
  json edges = json::array();
  for (int v = 1; v < f.n(); ++v)
    for (int u = 0; u < v; ++u)
      edges.push_back({{"u", u + 1}, {"v", v + 1}, {"c", f.color(u, v) + 1}});
  j["edges"] = edges;
  return j.dump();
}

EdgeColoring coloring_from_json(const std::string& text) {
  json j = parse(text);
  int n = require_int(j, "n", 1, 64);
  int k = require_int(j, "k", 1, 255);
  EdgeColoring f(n, k);
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing \"edges\" array");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j["edges"]) {
    int u = require_int(e, "u", 1, n);
    int v = require_int(e, "v", 1, n);
    int c = require_int(e, "c", 1, k);
    if (u >= v)
      throw ParseError("edge {\"u\":" + std::to_string(u) + ",\"v\":" + std::to_string(v) +
                       "} needs u < v");
    if (!seen.insert({u, v}).second)
      throw ParseError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    f.set_color(u - 1, v - 1, c - 1);
  }
  if (static_cast<std::int64_t>(seen.size()) != binom2(n))
    throw ParseError("coloring lists " + std::to_string(seen.size()) + " of " +
                     std::to_string(binom2(n)) + " pairs");
  return f;
}

std::string witness_to_json(const Witness& w) {
  json j = parse(coloring_to_json(w.coloring));
  j["id"] = w.id;
  j["expected_alpha"] = w.expected_alpha;
  return j.dump();
}

Witness witness_from_json(const std::string& text) {
  json j = parse(text);
  Witness w;
  w.coloring = coloring_from_json(text);
  if (!j.contains("id") || !j["id"].is_string()) throw ParseError("missing witness \"id\"");
  w.id = j["id"].get<std::string>();
  if (!j.contains("expected_alpha") || !j["expected_alpha"].is_array() ||
      static_cast<int>(j["expected_alpha"].size()) != w.coloring.k())
    throw ParseError("\"expected_alpha\" must list one value per color");
  for (const auto& a : j["expected_alpha"]) {
    if (!a.is_number_integer() || a.get<int>() < 1 || a.get<int>() > w.coloring.n())
      throw ParseError("\"expected_alpha\" entries must lie in [1,n]");
    w.expected_alpha.push_back(a.get<int>());
  }
  for (int a : w.expected_alpha) w.claim_query.push_back(a + 1);
  std::sort(w.claim_query.rbegin(), w.claim_query.rend());
  return w;
}

std::string factorization_to_json(const Factorization& f) {
  json j;
  j["N"] = f.N;
  json factors = json::array();
  for (const Graph& g : f.factors) factors.push_back(pair_list(g.edges()));
  j["factors"] = factors;
  return j.dump();
}

Factorization factorization_from_json(const std::string& text) {
  json j = parse(text);
  Factorization f;
  f.N = require_int(j, "N", 1, 64);
  if (!j.contains("factors") || !j["factors"].is_array())
    throw ParseError("missing \"factors\" array");
  for (const auto& fac : j["factors"]) {
    json wrapped;
    wrapped["n"] = f.N;
    wrapped["edges"] = fac;
    f.factors.push_back(graph_from_json(wrapped.dump()));
  }
  return f;
}

namespace {

json bound_node(const BoundsEngine& engine, const Query& q, std::set<Query>& expanded);

json premise_node(const BoundsEngine& engine, const PremiseRef& p, std::set<Query>& expanded) {
  json j;
  switch (p.kind) {
    case PremiseRef::Kind::KbQuery: j["kind"] = "query"; break;
    case PremiseRef::Kind::Certificate: j["kind"] = "certificate"; break;
    case PremiseRef::Kind::Table: j["kind"] = "table"; break;
  }
  if (!p.query.m.empty()) j["query"] = p.query.m;
  j["lo"] = p.lo;
  if (p.hi) j["hi"] = *p.hi;
  if (!p.id.empty()) j["id"] = p.id;
  if (p.kind == PremiseRef::Kind::KbQuery && engine.knowledge().count(p.query))
    j["entry"] = bound_node(engine, p.query, expanded);
  return j;
}

json bound_node(const BoundsEngine& engine, const Query& q, std::set<Query>& expanded) {
  json j;
  j["query"] = q.m;
  auto it = engine.knowledge().find(q);
  if (it == engine.knowledge().end()) {
    j["known"] = false;
    return j;
  }
  const Bound& b = it->second;
  j["lo"] = b.lo;
  if (b.hi) j["hi"] = *b.hi;
  if (!expanded.insert(q).second) {
    j["ref"] = true;  // steps already emitted elsewhere in this tree
    return j;
  }
  json steps = json::array();
  for (const ProvenanceStep& s : b.steps) {
    json sj;
    sj["rule"] = s.rule;
    sj["side"] = std::string(1, s.side);
    sj["value"] = s.value;
    if (!s.params.empty()) sj["params"] = s.params;
    json prem = json::array();
    for (const PremiseRef& p : s.premises) prem.push_back(premise_node(engine, p, expanded));
    sj["premises"] = prem;
    steps.push_back(sj);
  }
  j["steps"] = steps;
  return j;
}

}  // namespace

std::string bound_tree_json(const BoundsEngine& engine, const Query& q) {
  std::set<Query> expanded;
  return bound_node(engine, q, expanded).dump();
}

std::string exact_certificate_json(const Query& q, int value, const std::string& source,
                                   const std::string& factorization_path) {
  json j;
  j["query"] = q.m;
  j["exact"] = value;
  j["source"] = source;
  if (!factorization_path.empty()) j["factorization"] = factorization_path;
  return j.dump();
}

RamseyTable load_ramsey_table(const std::filesystem::path& path) {
  RamseyTable t = RamseyTable::with_defaults();
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return t;
  json j = parse(read_text_file(path));
  if (!j.is_array()) throw ParseError("ramsey table must be a JSON array");
  for (const auto& e : j) {
    RamseyEntry entry;
    entry.a = require_int(e, "a", 1, 1000);
    entry.b = require_int(e, "b", 1, 1000);
    if (e.contains("exact")) {
      entry.lo = entry.hi = require_int(e, "exact", 1, INT_MAX / 2);
    } else {
      entry.lo = require_int(e, "lo", 1, INT_MAX / 2);
      entry.hi = require_int(e, "hi", entry.lo, INT_MAX / 2);
    }
    if (e.contains("source") && e["source"].is_string()) entry.source = e["source"].get<std::string>();
    t.insert(entry);
  }
  return t;
}

std::string ramsey_table_to_json(const RamseyTable& t) {
  json j = json::array();
  for (const auto& [key, e] : t.entries()) {
    json ej;
    ej["a"] = e.a;
    ej["b"] = e.b;
    if (e.lo == e.hi) {
      ej["exact"] = e.lo;
    } else {
      ej["lo"] = e.lo;
      ej["hi"] = e.hi;
    }
    if (!e.source.empty()) ej["source"] = e.source;
    j.push_back(ej);
  }
  return j.dump();
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + p.string());
  out << text;
}

}  // namespace cram
