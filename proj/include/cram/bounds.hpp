#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cram/common.hpp"
#include "cram/ramsey_table.hpp"

namespace cram {

// A query is a multiset of independence thresholds, kept sorted non-increasing.
struct Query {
  std::vector<int> m;

  static Query of(std::vector<int> values);
  int k() const { return static_cast<int>(m.size()); }
  std::string str() const;

  bool operator==(const Query& o) const { return m == o.m; }
  bool operator!=(const Query& o) const { return m != o.m; }
  // Order: by color count, then lexicographically.
  bool operator<(const Query& o) const {
    if (m.size() != o.m.size()) return m.size() < o.m.size();
    return m < o.m;
  }
};

struct BoundInterval {
  int lo = 1;
  std::optional<int> hi;  // nullopt: no finite upper bound known
};

struct PremiseRef {
  enum class Kind { KbQuery, Certificate, Table };
  Kind kind = Kind::KbQuery;
  Query query;            // KbQuery/Certificate: the premise query
  int lo = 1;
  std::optional<int> hi;  // snapshot at the time the step fired
  std::string id;         // certificate source or "R(a,b)" for table premises
};

// One interval improvement with enough recorded state to be replayed.
struct ProvenanceStep {
  std::string rule;
  char side = 'E';  // 'L' lo raised, 'H' hi lowered, 'E' both pinned
  int value = 0;
  std::vector<PremiseRef> premises;
  // Rule-specific integers: R-part stores the part id per color, R-ext the
  // chosen order, R-drop the dropped entry's value.
  std::vector<int> params;
};

struct Bound {
  Query query;
  int lo = 1;
  std::optional<int> hi;
  std::vector<ProvenanceStep> steps;

  bool exact() const { return hi && *hi == lo; }
};

// Exact values and strict lower bounds contributed from outside the rule set:
// factorization certificates, stored witnesses, completed searches.
class CertificateRegistry {
 public:
  struct Exact {
    Query query;
    int value = 0;
    std::string source, detail;
  };
  struct Lower {
    Query query;
    int greater_than = 0;  // value > greater_than
    std::string source, detail;
  };

  void add_exact(Query q, int value, std::string source, std::string detail = "");
  void add_lower(Query q, int greater_than, std::string source, std::string detail = "");
  const std::vector<Exact>& exacts() const { return exacts_; }
  const std::vector<Lower>& lowers() const { return lowers_; }
  int version() const { return version_; }

 private:
  std::vector<Exact> exacts_;
  std::vector<Lower> lowers_;
  int version_ = 0;
};

struct EngineConfig {
  // All set partitions are tried up to this color count; beyond it only the
  // all-singletons partition.
  int partition_cap = 6;
  int ext_order_limit = 512;
};

// Interval engine.  bound() materializes the query, its premise closure and
// the registered knowledge, then runs every rule to a fixpoint in (k, lex)
// order.  Intervals only ever tighten; each strict improvement is recorded as
// a ProvenanceStep on the entry it improved.
class BoundsEngine {
 public:
  explicit BoundsEngine(RamseyTable table = RamseyTable::with_defaults(),
                        CertificateRegistry certs = CertificateRegistry(), EngineConfig cfg = EngineConfig());

  Bound bound(const Query& q);

  CertificateRegistry& certificates() { return certs_; }
  const RamseyTable& table() const { return table_; }
  const std::map<Query, Bound>& knowledge() const { return kb_; }
  const EngineConfig& config() const { return cfg_; }

 private:
  void ensure(const Query& q);
  bool cheap_rules(const Query& q, Bound& e);
  bool raise_lo(Bound& e, int value, ProvenanceStep step);
  bool lower_hi(Bound& e, int value, ProvenanceStep step);
  void run_fixpoint();

  RamseyTable table_;
  CertificateRegistry certs_;
  EngineConfig cfg_;
  std::map<Query, Bound> kb_;
  std::map<Query, bool> expanded_;
  int solved_version_ = -1;
};

// Partition bound for one explicit partition of the colors; parts[i] is the
// part id of color i (ids 0..t-1, t >= 2).  Premise intervals come from
// `solved`; MissingPremise if a premise is absent there or lacks a finite hi.
int partition_upper_bound(const Query& q, const std::vector<int>& parts,
                          const std::function<std::optional<BoundInterval>(const Query&)>& solved);

// The premise queries of that partition, canonicalized, in part order.
std::vector<Query> partition_premises(const Query& q, const std::vector<int>& parts);

// All partitions of k colors as part-id vectors (restricted growth strings),
// t >= 2 parts; above cap only the all-singletons partition is returned.
std::vector<std::vector<int>> color_partitions(int k, int cap);

// Recomputes a recorded step's conclusion from its recorded premises and
// parameters.  Throws MissingPremise if the record lacks what the rule needs;
// the result must equal step.value for the provenance to be sound.
int replay_step(const Query& q, const ProvenanceStep& step, const EngineConfig& cfg = EngineConfig());

}  // namespace cram
