#include <cstdio>
#include <filesystem>
#include <string>

#include "cram/coloring.hpp"
#include "cram/json_io.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + CRAM_CLI_PATH " " + args +
                    " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "cram_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("bound prints intervals with provenance") {
  auto r = run("bound 7 4 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("[9,9]") != std::string::npos);
  CHECK(r.out.find("R-") != std::string::npos);

  // Trailing 2: minimum of the other thresholds.
  auto r2 = run("bound 2 9 9");
  CHECK(r2.code == 0);
  CHECK(r2.out.find("[9,9]") != std::string::npos);

  CHECK(run("bound 4 7x").code == 2);
  CHECK(run("bound").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("no-such-command 3").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("bound json output is stable and well-formed") {
  auto a = run("bound 7 4 3 --json");
  auto b = run("bound 7 4 3 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j["query"] == json::array({7, 4, 3}));
  CHECK(j["lo"] == 9);
  CHECK(j["hi"] == 9);
}

TEST_CASE("exact settles small queries and reports intervals on tight budgets") {
  auto r = run("exact 3 3 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("= 5") != std::string::npos);

  auto r2 = run("exact 5 5 --budget 1s");
  CHECK(r2.code == 3);
  CHECK(r2.out.find("undecided") != std::string::npos);

  // Settled by stored certificates alone.
  auto j = json::parse(run("exact 7 4 3 --json").out);
  CHECK(j["exact"] == true);
  CHECK(j["value"] == 9);
  CHECK(j["searches"] == 0);
}

TEST_CASE("exists reports verdicts and verifiable witnesses") {
  auto yes = json::parse(run("exists 6 4 4 3 --json").out);
  CHECK(yes["exists"] == "yes");
  auto f = cram::coloring_from_json(yes["witness"].dump());
  auto alpha = f.alpha_vector();
  REQUIRE(alpha.size() == 3);
  CHECK(alpha[0] <= 3);
  CHECK(alpha[1] <= 3);
  CHECK(alpha[2] <= 2);

  auto no = run("exists 7 4 4 3");
  CHECK(no.code == 0);
  CHECK(no.out.find("no") != std::string::npos);

  // Identical runs under --deterministic give identical witnesses.
  auto d1 = run("exists 6 4 4 3 --deterministic --json");
  auto d2 = run("exists 6 4 4 3 --deterministic --json");
  CHECK(d1.out == d2.out);

  auto t = json::parse(run("exists 7 4 4 3 --threads 4 --json").out);
  CHECK(t["exists"] == "no");
}

TEST_CASE("verify handles builtins, files and failure modes") {
  auto r = run("verify --builtin W1");
  CHECK(r.code == 0);
  CHECK(r.out.find("(4,3,2)") != std::string::npos);

  CHECK(run("verify --builtin W9").code == 2);
  CHECK(run("verify").code == 2);

  auto dir = scratch_dir();
  auto dup = dir / "dup.json";
  cram::write_text_file(dup,
                        R"({"id":"t","n":2,"k":1,"expected_alpha":[1],)"
                        R"("edges":[{"u":1,"v":2,"c":1},{"u":1,"v":2,"c":1}]})");
  CHECK(run("verify " + dup.string()).code == 2);

  // Parses but the expectation is wrong.
  auto wrong = dir / "wrong.json";
  cram::write_text_file(wrong,
                        R"({"id":"t","n":2,"k":1,"expected_alpha":[2],)"
                        R"("edges":[{"u":1,"v":2,"c":1}]})");
  auto w = run("verify " + wrong.string());
  CHECK(w.code == 4);
}

TEST_CASE("factorize emits verifiable certificates") {
  auto dir = scratch_dir();
  auto rr10 = dir / "rr10.json";
  auto j = run("factorize rr 10 --json");
  CHECK(j.code == 0);
  cram::write_text_file(rr10, j.out);

  auto v = run("verify --factorization " + rr10.string());
  CHECK(v.code == 0);
  CHECK(v.out.find("(6,6,6,6,6,6,6,6,6) = 11") != std::string::npos);

  auto a4 = json::parse(run("factorize affine 4 --json").out);
  CHECK(a4["N"] == 16);
  CHECK(a4["factors"].size() == 5);

  CHECK(run("factorize rr 7").code == 2);
  CHECK(run("factorize weird 4").code == 2);
}

TEST_CASE("search-design finds designs and proves exhaustion") {
  auto found = json::parse(run("search-design 9 3,3,3 3,3,3 3,3,3 3,3,3 --json").out);
  CHECK(found["found"] == true);
  CHECK(found["factorization"]["N"] == 9);

  // No nearly-resolvable system on 6 points: exhausted, not timed out.
  auto none = json::parse(run("search-design 6 3,3 3,3 2,2,2 --json --budget 60s").out);
  CHECK(none["found"] == false);
  CHECK(none["exhausted"] == true);

  CHECK(run("search-design 9 3,x").code == 2);
  CHECK(run("search-design 9 3,3,4").code == 2);
}

TEST_CASE("check-lemma reports zero violations") {
  auto memo = json::parse(run("check-lemma memo --json").out);
  CHECK(memo["violations"] == 0);
  CHECK(memo["base_graphs"] == 133501);

  auto ext = json::parse(run("check-lemma extremal --max-m 5 --json").out);
  CHECK(ext["violations"] == 0);
  CHECK(ext["max_m"] == 5);

  CHECK(run("check-lemma bogus").code == 2);
}

TEST_CASE("table 3 reproduces every entry") {
  auto j = json::parse(run("table 3 --json").out);
  CHECK(j["ok"] == true);
  REQUIRE(j["entries"].size() == 8);
  for (const auto& e : j["entries"]) CHECK(e["status"] == "ok");
  CHECK(j["entries"][7]["query"] == json::array({7, 4, 3}));
  CHECK(j["entries"][7]["lo"] == 9);
}

TEST_CASE("extract-mols produces complete square sets") {
  auto j = json::parse(run("extract-mols --affine 4 --json").out);
  CHECK(j["n"] == 4);
  CHECK(j["squares"].size() == 3);

  // A coloring with no parallel-class structure.
  auto dir = scratch_dir();
  auto flat = dir / "flat.json";
  cram::EdgeColoring all_one(4, 5);
  cram::write_text_file(flat, cram::coloring_to_json(all_one));
  CHECK(run("extract-mols " + flat.string()).code == 4);

  CHECK(run("extract-mols").code == 2);
}

TEST_CASE("cache directory comes from the environment when unset") {
  auto dir = fs::temp_directory_path() / "cram_cli_env_cache";
  fs::remove_all(dir);
  auto r = run("exact 4 3 3", "CRAM_CACHE_DIR=" + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("= 5") != std::string::npos);
  CHECK(fs::exists(dir / "resume_n5_m4-3-3.json"));
  fs::remove_all(dir);
}
