#include "cram/bounds.hpp"

#include <algorithm>

#include "cram/turan.hpp"

namespace cram {

Query Query::of(std::vector<int> values) {
  if (values.empty()) throw BadArgs("query needs at least one threshold");
  for (int v : values)
    if (v < 1) throw BadArgs("thresholds must be >= 1");
  std::sort(values.rbegin(), values.rend());
  return Query{std::move(values)};
}

std::string Query::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

void CertificateRegistry::add_exact(Query q, int value, std::string source, std::string detail) {
  if (value < 1) throw BadArgs("certificate value must be >= 1");
  for (const auto& e : exacts_)
    if (e.query == q) {
      if (e.value != value) throw BadArgs("conflicting exact certificates for " + q.str());
      return;
    }
  exacts_.push_back({std::move(q), value, std::move(source), std::move(detail)});
  ++version_;
}

void CertificateRegistry::add_lower(Query q, int greater_than, std::string source, std::string detail) {
  lowers_.push_back({std::move(q), greater_than, std::move(source), std::move(detail)});
  ++version_;
}

namespace {

// Whether the rules "thresholds may only grow componentwise" (same color
// count) and "colors may only be removed" chain to prove value(p) <= value(q).
// p needs at least as many colors, and its |q| smallest thresholds must sit
// below q's, compared in ascending order.
bool value_le(const Query& p, const Query& q) {
  if (p.k() < q.k()) return false;
  for (int i = 0; i < q.k(); ++i)
    if (p.m[p.k() - 1 - i] > q.m[q.k() - 1 - i]) return false;
  return true;
}

bool all_equal(const Query& q) {
  for (int v : q.m)
    if (v != q.m[0]) return false;
  return true;
}

// Least order n <= limit at which the class-size counting argument closes:
// k * min_edges(n, m-1) > C(n,2).
std::optional<int> ext_rule_order(const Query& q, int limit) {
  if (!all_equal(q) || q.m[0] < 2) return std::nullopt;
  int m = q.m[0];
  for (int n = 1; n <= limit; ++n) {
    auto p = turan_params(n, m - 1);
    if (static_cast<std::int64_t>(q.k()) * p.min_edges > binom2(n)) return n;
  }
  return std::nullopt;
}

Query drop_entry(const Query& q, int idx) {
  std::vector<int> v = q.m;
  v.erase(v.begin() + idx);
  return Query{std::move(v)};
}

}  // namespace

std::vector<std::vector<int>> color_partitions(int k, int cap) {
  std::vector<std::vector<int>> out;
  if (k < 2) return out;
  if (k > cap) {
    std::vector<int> singles(k);
    for (int i = 0; i < k; ++i) singles[i] = i;
    out.push_back(std::move(singles));
    return out;
  }
  std::vector<int> a(k, 0);
  // Restricted growth strings: a[i] <= 1 + max(a[0..i-1]).
  auto emit = [&]() {
    int t = *std::max_element(a.begin(), a.end()) + 1;
    if (t >= 2) out.push_back(a);
  };
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == k) {
      emit();
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  a[0] = 0;
  rec(1, 0);
  return out;
}

std::vector<Query> partition_premises(const Query& q, const std::vector<int>& parts) {
  int k = q.k();
  if (static_cast<int>(parts.size()) != k) throw BadArgs("partition size mismatch");
  int t = 0;
  for (int p : parts) {
    if (p < 0) throw BadArgs("negative part id");
    t = std::max(t, p + 1);
  }
  std::vector<int> seen(t, 0);
  for (int p : parts) seen[p] = 1;
  for (int s : seen)
    if (!s) throw BadArgs("partition has an empty part");
  if (t < 2) throw BadArgs("partition must have at least two parts");
  std::vector<Query> out;
  for (int j = 0; j < t; ++j) {
    std::vector<int> m(k);
    for (int i = 0; i < k; ++i) {
      m[i] = q.m[i] - (parts[i] == j ? 0 : 1);
      if (m[i] < 1) throw BadArgs("partition premise drops a threshold below 1");
    }
    out.push_back(Query::of(std::move(m)));
  }
  return out;
}

int partition_upper_bound(const Query& q, const std::vector<int>& parts,
                          const std::function<std::optional<BoundInterval>(const Query&)>& solved) {
  auto premises = partition_premises(q, parts);
  int t = static_cast<int>(premises.size());
  std::int64_t sum = 0;
  for (const Query& p : premises) {
    auto b = solved(p);
    if (!b) throw MissingPremise("no interval for premise " + p.str());
    if (!b->hi) throw MissingPremise("premise " + p.str() + " has no finite hi");
    sum += *b->hi;
  }
  return static_cast<int>(sum - t + 2);
}

BoundsEngine::BoundsEngine(RamseyTable table, CertificateRegistry certs, EngineConfig cfg)
    : table_(std::move(table)), certs_(std::move(certs)), cfg_(cfg) {}

bool BoundsEngine::raise_lo(Bound& e, int value, ProvenanceStep step) {
  if (value <= e.lo) return false;
  if (e.hi && value > *e.hi)
    throw std::runtime_error("inconsistent knowledge: lo " + std::to_string(value) + " above hi " +
                             std::to_string(*e.hi) + " at " + e.query.str());
  e.lo = value;
  step.value = value;
  e.steps.push_back(std::move(step));
  return true;
}

bool BoundsEngine::lower_hi(Bound& e, int value, ProvenanceStep step) {
  if (e.hi && *e.hi <= value) return false;
  if (value < e.lo)
    throw std::runtime_error("inconsistent knowledge: hi " + std::to_string(value) + " below lo " +
                             std::to_string(e.lo) + " at " + e.query.str());
  e.hi = value;
  step.value = value;
  e.steps.push_back(std::move(step));
  return true;
}

// Rules that read only the query, the Ramsey table and the certificate
// registry.  Returns whether the entry ended exact.
bool BoundsEngine::cheap_rules(const Query& q, Bound& e) {
  int k = q.k();
  const auto& m = q.m;

  if (m.back() == 1) {
    ProvenanceStep s{"R-one", 'E', 1, {}, {}};
    raise_lo(e, 1, s);
    lower_hi(e, 1, s);
    return true;
  }
  if (k == 1) {
    // One color class is the whole complete graph; no order forces the
    // threshold, so no finite hi exists and nothing else applies.
    raise_lo(e, m[0], {"R-k1", 'L', 0, {}, {}});
    return false;
  }
  if (k >= 2 && m.back() == 2) {
    std::vector<int> rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), 2));
    int v = *std::min_element(rest.begin(), rest.end());
    ProvenanceStep s{"R-min", 'E', v, {}, {}};
    raise_lo(e, v, s);
    lower_hi(e, v, s);
    return true;
  }
  if (k == 2) {
    if (auto t = table_.find(m[0], m[1])) {
      PremiseRef ref{PremiseRef::Kind::Table, q, t->lo, t->hi,
                     "R(" + std::to_string(t->a) + "," + std::to_string(t->b) + ")"};
      raise_lo(e, t->lo, {"R-two", 'L', 0, {ref}, {}});
      lower_hi(e, t->hi, {"R-two", 'H', 0, {ref}, {}});
    }
  }
  if (all_equal(q)) {
    if (k > binom2(m[0])) {
      ProvenanceStep s{"R-low", 'E', m[0], {}, {}};
      raise_lo(e, m[0], s);
      lower_hi(e, m[0], s);
    } else {
      raise_lo(e, m[0] + 1, {"R-low", 'L', 0, {}, {}});
    }
    if (auto n = ext_rule_order(q, cfg_.ext_order_limit))
      lower_hi(e, *n, {"R-ext", 'H', 0, {}, {*n}});
  }
  raise_lo(e, m.back(), {"R-base", 'L', 0, {}, {}});

  for (const auto& c : certs_.exacts()) {
    if (c.query == q) {
      PremiseRef ref{PremiseRef::Kind::Certificate, c.query, c.value, c.value, c.source};
      ProvenanceStep s{"R-cert", 'E', c.value, {ref}, {}};
      raise_lo(e, c.value, s);
      lower_hi(e, c.value, s);
      continue;
    }
    PremiseRef ref{PremiseRef::Kind::Certificate, c.query, c.value, c.value, c.source};
    if (value_le(c.query, q)) raise_lo(e, c.value, {"R-mono", 'L', 0, {ref}, {}});
    if (value_le(q, c.query)) lower_hi(e, c.value, {"R-mono", 'H', 0, {ref}, {}});
  }
  for (const auto& c : certs_.lowers()) {
    PremiseRef ref{PremiseRef::Kind::Certificate, c.query, c.greater_than + 1, std::nullopt, c.source};
    if (c.query == q)
      raise_lo(e, c.greater_than + 1, {"R-cert", 'L', 0, {ref}, {}});
    else if (value_le(c.query, q))
      raise_lo(e, c.greater_than + 1, {"R-mono", 'L', 0, {ref}, {}});
  }
  return e.exact();
}

void BoundsEngine::ensure(const Query& q) {
  auto it = kb_.find(q);
  if (it != kb_.end() && (it->second.exact() || expanded_[q])) return;
  if (it == kb_.end()) {
    Bound e;
    e.query = q;
    bool exact = cheap_rules(q, e);
    kb_.emplace(q, std::move(e));
    if (exact) return;
  }
  expanded_[q] = true;
  int k = q.k();
  if (k >= 2) {
    for (int i = 0; i < k; ++i) {
      if (i > 0 && q.m[i] == q.m[i - 1]) continue;
      ensure(drop_entry(q, i));
    }
    if (q.m.back() >= 2)
      for (const auto& parts : color_partitions(k, cfg_.partition_cap))
        for (const Query& p : partition_premises(q, parts)) ensure(p);
  }
}

void BoundsEngine::run_fixpoint() {
  auto kb_interval = [&](const Query& p) -> std::optional<BoundInterval> {
    auto it = kb_.find(p);
    if (it == kb_.end()) return std::nullopt;
    return BoundInterval{it->second.lo, it->second.hi};
  };

  for (int pass = 0;; ++pass) {
    if (pass > 100000) throw std::logic_error("bounds fixpoint did not converge");
    bool changed = false;
    for (auto& [q, e] : kb_) {
      if (e.exact()) continue;
      int k = q.k();
      // Remove one color: the value cannot grow, and matches when the removed
      // threshold was already at least the remaining value.
      if (k >= 2) {
        for (int i = 0; i < k; ++i) {
          if (i > 0 && q.m[i] == q.m[i - 1]) continue;
          Query p = drop_entry(q, i);
          auto pit = kb_.find(p);
          if (pit == kb_.end()) continue;
          const Bound& pb = pit->second;
          PremiseRef ref{PremiseRef::Kind::KbQuery, p, pb.lo, pb.hi, ""};
          if (pb.hi) changed |= lower_hi(e, *pb.hi, {"R-drop", 'H', 0, {ref}, {q.m[i]}});
          if (pb.exact() && q.m[i] >= pb.lo) {
            ProvenanceStep s{"R-drop", 'E', pb.lo, {ref}, {q.m[i]}};
            changed |= raise_lo(e, pb.lo, s);
            changed |= lower_hi(e, pb.lo, s);
          }
        }
        if (q.m.back() >= 2) {
          for (const auto& parts : color_partitions(k, cfg_.partition_cap)) {
            std::vector<PremiseRef> refs;
            bool missing = false;
            auto premises = partition_premises(q, parts);
            for (const Query& p : premises) {
              auto b = kb_interval(p);
              if (!b || !b->hi) {
                missing = true;
                break;
              }
              refs.push_back({PremiseRef::Kind::KbQuery, p, b->lo, b->hi, ""});
            }
            if (missing) continue;
            int v = partition_upper_bound(q, parts, kb_interval);
            changed |= lower_hi(e, v, {"R-part", 'H', 0, refs, parts});
          }
        }
      }
      // Monotone lifts across the rest of the knowledge base.
      for (const auto& [p, pb] : kb_) {
        if (p == q) continue;
        PremiseRef ref{PremiseRef::Kind::KbQuery, p, pb.lo, pb.hi, ""};
        if (pb.hi && value_le(q, p)) changed |= lower_hi(e, *pb.hi, {"R-mono", 'H', 0, {ref}, {}});
        if (value_le(p, q)) changed |= raise_lo(e, pb.lo, {"R-mono", 'L', 0, {ref}, {}});
      }
    }
    if (!changed) return;
  }
}

Bound BoundsEngine::bound(const Query& q) {
  Query cq = Query::of(q.m);
  if (certs_.version() != solved_version_) {
    solved_version_ = certs_.version();
    for (auto& [qq, e] : kb_)
      if (!e.exact()) cheap_rules(qq, e);
  }
  ensure(cq);
  run_fixpoint();
  return kb_.at(cq);
}

int replay_step(const Query& q, const ProvenanceStep& step, const EngineConfig& cfg) {
  const auto& m = q.m;
  auto premise = [&](std::size_t i) -> const PremiseRef& {
    if (i >= step.premises.size()) throw MissingPremise("step lacks premise " + std::to_string(i));
    return step.premises[i];
  };
  if (step.rule == "R-one") {
    if (m.back() != 1) throw MissingPremise("R-one without a unit threshold");
    return 1;
  }
  if (step.rule == "R-k1") {
    if (q.k() != 1) throw MissingPremise("R-k1 on multicolor query");
    return m[0];
  }
  if (step.rule == "R-min") {
    auto rest = m;
    auto it = std::find(rest.begin(), rest.end(), 2);
    if (it == rest.end()) throw MissingPremise("R-min without a threshold of 2");
    rest.erase(it);
    return *std::min_element(rest.begin(), rest.end());
  }
  if (step.rule == "R-two") {
    const auto& ref = premise(0);
    if (step.side == 'L') return ref.lo;
    if (!ref.hi) throw MissingPremise("R-two premise lacks hi");
    return *ref.hi;
  }
  if (step.rule == "R-low") {
    if (!std::all_of(m.begin(), m.end(), [&](int v) { return v == m[0]; }))
      throw MissingPremise("R-low on non-uniform query");
    return q.k() > binom2(m[0]) ? m[0] : m[0] + 1;
  }
  if (step.rule == "R-ext") {
    auto n = ext_rule_order(q, cfg.ext_order_limit);
    if (!n) throw MissingPremise("R-ext does not apply");
    return *n;
  }
  if (step.rule == "R-base") return m.back();
  if (step.rule == "R-cert") {
    const auto& ref = premise(0);
    if (ref.query != q) throw MissingPremise("R-cert premise names a different query");
    return ref.lo;
  }
  if (step.rule == "R-mono") {
    const auto& ref = premise(0);
    if (step.side == 'H') {
      if (!value_le(q, ref.query)) throw MissingPremise("R-mono hi premise does not dominate");
      if (!ref.hi) throw MissingPremise("R-mono premise lacks hi");
      return *ref.hi;
    }
    if (!value_le(ref.query, q)) throw MissingPremise("R-mono lo premise not dominated");
    return ref.lo;
  }
  if (step.rule == "R-drop") {
    const auto& ref = premise(0);
    if (step.params.empty()) throw MissingPremise("R-drop lacks the dropped threshold");
    if (step.side == 'E') {
      if (!ref.hi || *ref.hi != ref.lo) throw MissingPremise("R-drop equality premise not exact");
      if (step.params[0] < ref.lo) throw MissingPremise("dropped threshold below premise value");
      return ref.lo;
    }
    if (!ref.hi) throw MissingPremise("R-drop premise lacks hi");
    return *ref.hi;
  }
  if (step.rule == "R-part") {
    auto solved = [&](const Query& p) -> std::optional<BoundInterval> {
      for (const auto& ref : step.premises)
        if (ref.query == p) return BoundInterval{ref.lo, ref.hi};
      return std::nullopt;
    };
    return partition_upper_bound(q, step.params, solved);
  }
  throw MissingPremise("unknown rule " + step.rule);
}

}  // namespace cram
