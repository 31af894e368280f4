#ifndef MINORS_MINOR_MODEL_HPP
#define MINORS_MINOR_MODEL_HPP

#include "minors/graph.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace minors {

/// A family of disjoint, connected branch sets in a host graph; the
/// certificate format for every minor claim in this library.
struct MinorModel {
  Graph host;
  std::map<int, std::vector<int>> branch_sets; // pattern id -> host ids
};

struct VerificationReport {
  bool pass = true;
  std::string failure; // first violated condition, with a witness

  static VerificationReport ok() { return {}; }
  static VerificationReport fail(std::string why) { return {false, std::move(why)}; }
};

/// Checks that branch sets are nonempty, pairwise disjoint, connected, and
/// that every required pattern pair has at least one host edge between its
/// branch sets. Failures are reported, not thrown.
inline VerificationReport
verify_model(const MinorModel &model,
             const std::vector<std::pair<int, int>> &required_pattern_edges) {
  std::set<int> used;
  for (const auto &[pid, bs] : model.branch_sets) {
    if (bs.empty())
      return VerificationReport::fail("empty branch set for pattern vertex " +
                                      std::to_string(pid));
    for (int u : bs) {
      if (!model.host.has_vertex(u))
        return VerificationReport::fail("branch set " + std::to_string(pid) +
                                        " uses unknown host vertex " + std::to_string(u));
      if (!used.insert(u).second)
        return VerificationReport::fail("host vertex " + std::to_string(u) +
                                        " appears in two branch sets");
    }
  }
  for (const auto &[pid, bs] : model.branch_sets)
    if (!is_connected_subset(model.host, bs))
      return VerificationReport::fail("branch set " + std::to_string(pid) +
                                      " is not connected");
  for (auto [a, b] : required_pattern_edges) {
    auto ia = model.branch_sets.find(a);
    auto ib = model.branch_sets.find(b);
    if (ia == model.branch_sets.end() || ib == model.branch_sets.end())
      return VerificationReport::fail("required pattern edge {" + std::to_string(a) +
                                      "," + std::to_string(b) +
                                      "} references a missing branch set");
    bool joined = false;
    for (int u : ia->second) {
      for (int w : model.host.neighbors(u))
        if (std::find(ib->second.begin(), ib->second.end(), w) != ib->second.end()) {
          joined = true;
          break;
        }
      if (joined) break;
    }
    if (!joined)
      return VerificationReport::fail("no host edge between branch sets " +
                                      std::to_string(a) + " and " + std::to_string(b));
  }
  return VerificationReport::ok();
}

/// All pattern pairs realized by the model: pairs of branch sets joined by
/// at least one host edge.
inline std::vector<std::pair<int, int>> realized_edges(const MinorModel &model) {
  std::vector<std::pair<int, int>> out;
  for (auto ia = model.branch_sets.begin(); ia != model.branch_sets.end(); ++ia) {
    auto ib = ia;
    for (++ib; ib != model.branch_sets.end(); ++ib) {
      bool joined = false;
      for (int u : ia->second) {
        for (int w : model.host.neighbors(u))
          if (std::find(ib->second.begin(), ib->second.end(), w) != ib->second.end()) {
            joined = true;
            break;
          }
        if (joined) break;
      }
      if (joined) out.emplace_back(ia->first, ib->first);
    }
  }
  return out;
}

/// Number of branch-set pairs joined by at least one host edge. The model
/// must be structurally valid.
inline long long model_edge_count(const MinorModel &model) {
  auto report = verify_model(model, {});
  if (!report.pass)
    throw std::invalid_argument("model_edge_count: invalid model: " + report.failure);
  return static_cast<long long>(realized_edges(model).size());
}

/// A reduction history: replaying it from the original host reproduces the
/// reduced graph and induces a minor model of that graph in the host.
struct ContractionTrace {
  struct Op {
    enum Kind { Delete, Contract } kind;
    int u = -1;
    int v = -1; // Contract only; surviving id is min(u,v)
  };
  std::vector<Op> ops;

  void record_delete(int u) { ops.push_back({Op::Delete, u, -1}); }
  void record_contract(int u, int v) { ops.push_back({Op::Contract, u, v}); }
  void append(const ContractionTrace &other) {
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
  }
};

struct ReplayResult {
  Graph reduced;
  std::map<int, std::vector<int>> branch; // surviving id -> original host ids
};

inline ReplayResult replay(const Graph &host, const ContractionTrace &trace) {
  ReplayResult r;
  r.reduced = host;
  for (int u : host.vertices()) r.branch[u] = {u};
  for (const auto &op : trace.ops) {
    if (op.kind == ContractionTrace::Op::Delete) {
      if (!r.reduced.has_vertex(op.u))
        throw std::invalid_argument("replay: delete of unknown vertex");
      r.reduced = remove_vertex(r.reduced, op.u);
      r.branch.erase(op.u);
    } else {
      int keep = std::min(op.u, op.v), gone = std::max(op.u, op.v);
      r.reduced = contract(r.reduced, op.u, op.v); // throws on non-edge
      auto &dst = r.branch[keep];
      auto &src = r.branch[gone];
      dst.insert(dst.end(), src.begin(), src.end());
      std::sort(dst.begin(), dst.end());
      r.branch.erase(gone);
    }
  }
  return r;
}

/// Model of the replayed graph (or of its restriction to `keep`) in the
/// original host. Pattern ids are the surviving vertex ids.
inline MinorModel replay_model(const Graph &host, const ContractionTrace &trace,
                               const std::vector<int> *keep = nullptr) {
  ReplayResult r = replay(host, trace);
  MinorModel m;
  m.host = host;
  if (keep) {
    for (int u : *keep) {
      auto it = r.branch.find(u);
      if (it == r.branch.end())
        throw std::invalid_argument("replay_model: kept vertex not in reduced graph");
      m.branch_sets[u] = it->second;
    }
  } else {
    m.branch_sets = r.branch;
  }
  return m;
}

} // namespace minors

#endif
