#include "cram/cache.hpp"

#include <fstream>

#include "cram/json_io.hpp"
#include "json.hpp"

namespace cram {

namespace {

using nlohmann::json;

std::optional<json> read_json(const std::filesystem::path& p) {
  std::error_code ec;
  if (!std::filesystem::exists(p, ec)) return std::nullopt;
  try {
    return json::parse(read_text_file(p));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

WitnessCache::WitnessCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string WitnessCache::key(int n, const Query& q) {
  std::string s = "n" + std::to_string(n) + "_m";
  for (std::size_t i = 0; i < q.m.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(q.m[i]);
  }
  return s;
}

std::optional<EdgeColoring> WitnessCache::load_good(int n, const Query& q) const {
  auto p = dir_ / ("good_" + key(n, q) + ".json");
  std::error_code ec;
  if (!std::filesystem::exists(p, ec)) return std::nullopt;
  try {
    EdgeColoring f = coloring_from_json(read_text_file(p));
    if (f.n() != n || f.k() != q.k()) return std::nullopt;
    auto a = f.alpha_vector();
    for (int i = 0; i < q.k(); ++i)
      if (a[i] > q.m[i] - 1) return std::nullopt;
    return f;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void WitnessCache::store_good(int n, const Query& q, const EdgeColoring& f) const {
  write_text_file(dir_ / ("good_" + key(n, q) + ".json"), coloring_to_json(f));
}

bool WitnessCache::known_no(int n, const Query& q) const {
  auto j = read_json(dir_ / ("resume_" + key(n, q) + ".json"));
  return j && j->value("status", "") == "no";
}

void WitnessCache::store_no(int n, const Query& q) const {
  json j;
  j["n"] = n;
  j["m"] = q.m;
  j["status"] = "no";
  write_text_file(dir_ / ("resume_" + key(n, q) + ".json"), j.dump());
}

std::optional<std::vector<int>> WitnessCache::load_frontier(int n, const Query& q) const {
  auto j = read_json(dir_ / ("resume_" + key(n, q) + ".json"));
  if (!j || j->value("status", "") != "open" || !j->contains("frontier")) return std::nullopt;
  try {
    return (*j)["frontier"].get<std::vector<int>>();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void WitnessCache::store_frontier(int n, const Query& q, const std::vector<int>& frontier) const {
  // Never downgrade a completed exhaustion to an open frontier.
  if (known_no(n, q)) return;
  json j;
  j["n"] = n;
  j["m"] = q.m;
  j["status"] = "open";
  j["frontier"] = frontier;
  write_text_file(dir_ / ("resume_" + key(n, q) + ".json"), j.dump());
}

}  // namespace cram
