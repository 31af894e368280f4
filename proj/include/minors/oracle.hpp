#ifndef MINORS_ORACLE_HPP
#define MINORS_ORACLE_HPP

#include "minors/graph.hpp"
#include "minors/minor_model.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace minors {

struct SearchResult {
  long long optimum = -1;
  std::optional<MinorModel> witness_model;  // minor searches
  std::vector<int> witness_vertices;        // subgraph searches
  long long explored = 0;
  bool exhaustive = false; // true: optimum is certified maximal
};

/// A separation (A,B): A ∪ B = V(G), both sides have a private vertex, and
/// no edge runs between the private parts. Order is |A ∩ B|.
struct Separation {
  std::vector<int> a, b;
  int order = 0;
};

struct Report {
  long long checked = 0;
  std::vector<std::string> violations;
  long long runtime_ms = 0;
  bool pass() const { return violations.empty(); }
};

namespace detail {

constexpr int kMinorHostCap = 12;

struct Hash128 {
  std::size_t operator()(__uint128_t v) const {
    std::uint64_t lo = static_cast<std::uint64_t>(v);
    std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
    return std::hash<std::uint64_t>()(lo * 0x9e3779b97f4a7c15ull ^ hi);
  }
};

// Mutable minor-search state over positions 0..n0-1 of the original host.
// Contraction keeps the smaller position, so a surviving position maps
// back to a branch set of original positions via the op path.
struct MState {
  int n0 = 0;
  std::uint16_t vmask = 0;
  std::array<std::uint16_t, kMinorHostCap> adj{};

  int vcount() const { return std::popcount(vmask); }

  int ecount() const {
    int e = 0;
    for (int i = 0; i < n0; ++i)
      if (vmask >> i & 1) e += std::popcount(static_cast<unsigned>(adj[i]));
    return e / 2;
  }

  __uint128_t key() const {
    __uint128_t k = vmask;
    int bit = 16;
    for (int i = 0; i < n0; ++i)
      for (int j = i + 1; j < n0; ++j, ++bit)
        if (adj[i] >> j & 1) k |= static_cast<__uint128_t>(1) << bit;
    return k;
  }

  void del(int i) {
    vmask &= ~(1u << i);
    for (int j = 0; j < n0; ++j) adj[j] &= ~(1u << i);
    adj[i] = 0;
  }

  void contract(int i, int j) { // requires edge ij; survivor min(i,j)
    if (i > j) std::swap(i, j);
    adj[i] |= adj[j];
    adj[i] &= ~(1u << i);
    for (int k = 0; k < n0; ++k)
      if (adj[j] >> k & 1) adj[k] |= 1u << i;
    del(j);
    adj[i] &= ~(1u << i);
  }
};

inline MState mstate_from_graph(const Graph &g, std::vector<int> &ids_out) {
  if (g.v() > kMinorHostCap)
    throw std::invalid_argument("minor search: host graphs capped at " +
                                std::to_string(kMinorHostCap) + " vertices");
  MState s;
  s.n0 = g.v();
  ids_out = g.vertices();
  s.vmask = static_cast<std::uint16_t>((1u << s.n0) - 1);
  for (int i = 0; i < s.n0; ++i)
    for (int w : g.neighbors(ids_out[i])) {
      int j = static_cast<int>(std::lower_bound(ids_out.begin(), ids_out.end(), w) -
                               ids_out.begin());
      s.adj[i] |= 1u << j;
    }
  return s;
}

struct MOp {
  enum Kind { Delete, Contract } kind;
  int i = -1, j = -1;
};

// Exhaustive (or early-exit) search over all t-vertex minors reachable by
// deletions and contractions. `accept` inspects a t-vertex state and
// returns true to stop immediately (early exit); with no accept, the
// search maximizes the edge count. `prune_below`: states whose edge count
// already fell under this can never matter and are cut.
struct MinorSearch {
  int t;
  long long prune_below = 0;
  std::function<bool(const MState &)> accept; // optional
  long long best = -1;
  std::vector<MOp> best_path;
  bool stopped = false;
  long long explored = 0;
  std::unordered_set<__uint128_t, Hash128> visited;
  std::vector<MOp> path;

  void run(const MState &root) { dfs(root); }

private:
  void dfs(const MState &s) {
    if (stopped) return;
    ++explored;
    int e = s.ecount();
    if (s.vcount() == t) {
      if (accept) {
        if (accept(s)) {
          best = e;
          best_path = path;
          stopped = true;
        }
      } else if (e > best) {
        best = e;
        best_path = path;
      }
      return;
    }
    if (!visited.insert(s.key()).second) return;

    // child ops: contractions losing fewest edges first, then deletions of
    // low-degree vertices; finds dense witnesses quickly
    std::vector<std::pair<int, MOp>> ops;
    for (int i = 0; i < s.n0; ++i) {
      if (!(s.vmask >> i & 1)) continue;
      for (int j = i + 1; j < s.n0; ++j)
        if (s.adj[i] >> j & 1)
          ops.push_back({1 + std::popcount(static_cast<unsigned>(s.adj[i] & s.adj[j])),
                         {MOp::Contract, i, j}});
      ops.push_back({std::popcount(static_cast<unsigned>(s.adj[i])),
                     {MOp::Delete, i, -1}});
    }
    std::stable_sort(ops.begin(), ops.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    for (const auto &[cost, op] : ops) {
      MState next = s;
      if (op.kind == MOp::Delete) next.del(op.i);
      else next.contract(op.i, op.j);
      long long ne = next.ecount();
      if (ne < prune_below) continue;
      if (!accept && ne <= best) continue;
      path.push_back(op);
      dfs(next);
      path.pop_back();
      if (stopped) return;
    }
  }
};

inline ContractionTrace trace_from_path(const std::vector<int> &ids,
                                        const std::vector<MOp> &path) {
  ContractionTrace tr;
  for (const auto &op : path) {
    if (op.kind == MOp::Delete) tr.record_delete(ids[op.i]);
    else tr.record_contract(ids[op.i], ids[op.j]);
  }
  return tr;
}

// injective subgraph embedding of H into the alive part of a state
inline bool embeds_as_subgraph(const MState &s, const std::vector<std::uint16_t> &pat_adj) {
  int h = static_cast<int>(pat_adj.size());
  std::vector<int> alive;
  for (int i = 0; i < s.n0; ++i)
    if (s.vmask >> i & 1) alive.push_back(i);
  if (static_cast<int>(alive.size()) < h) return false;
  std::vector<int> map(h, -1);
  std::vector<bool> used(alive.size(), false);
  auto rec = [&](auto &&self, int p) -> bool {
    if (p == h) return true;
    for (std::size_t c = 0; c < alive.size(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int q = 0; q < p; ++q)
        if (pat_adj[p] >> q & 1 && !(s.adj[alive[c]] >> map[q] & 1)) { ok = false; break; }
      if (!ok) continue;
      used[c] = true;
      map[p] = alive[c];
      if (self(self, p + 1)) return true;
      used[c] = false;
      map[p] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

} // namespace detail

/// Exhaustive branch-set search: does G contain H as a minor? Returns a
/// verified model on success.
inline std::pair<bool, std::optional<MinorModel>> has_minor(const Graph &g, const Graph &h) {
  if (h.v() < 1) throw std::invalid_argument("has_minor: pattern must be nonempty");
  if (h.v() > g.v()) return {false, std::nullopt};

  std::vector<int> ids;
  detail::MState root = detail::mstate_from_graph(g, ids);

  // pattern adjacency over 0..h-1 positions
  const auto &hids = h.vertices();
  std::vector<std::uint16_t> pat(h.v(), 0);
  for (int p = 0; p < h.v(); ++p)
    for (int w : h.neighbors(hids[p])) {
      int q = static_cast<int>(std::lower_bound(hids.begin(), hids.end(), w) - hids.begin());
      pat[p] |= 1u << q;
    }

  std::vector<int> embedding; // pattern position -> state position, at acceptance
  detail::MinorSearch search;
  search.t = h.v();
  search.prune_below = h.e();
  search.accept = [&](const detail::MState &s) {
    // need a bijection pattern -> alive positions respecting pattern edges
    std::vector<int> alive;
    for (int i = 0; i < s.n0; ++i)
      if (s.vmask >> i & 1) alive.push_back(i);
    std::vector<int> map(pat.size(), -1);
    std::vector<bool> used(alive.size(), false);
    auto rec = [&](auto &&self, std::size_t p) -> bool {
      if (p == pat.size()) return true;
      for (std::size_t c = 0; c < alive.size(); ++c) {
        if (used[c]) continue;
        bool ok = true;
        for (std::size_t q = 0; q < p; ++q)
          if (pat[p] >> q & 1 && !(s.adj[alive[c]] >> map[q] & 1)) { ok = false; break; }
        if (!ok) continue;
        used[c] = true;
        map[p] = alive[c];
        if (self(self, p + 1)) return true;
        used[c] = false;
      }
      return false;
    };
    if (!rec(rec, 0)) return false;
    embedding = map;
    return true;
  };
  search.run(root);
  if (!search.stopped) return {false, std::nullopt};

  ContractionTrace tr = detail::trace_from_path(ids, search.best_path);
  ReplayResult rr = replay(g, tr);
  MinorModel model;
  model.host = g;
  for (std::size_t p = 0; p < pat.size(); ++p)
    model.branch_sets[hids[p]] = rr.branch.at(ids[embedding[p]]);
  auto report = verify_model(model, h.edge_list());
  if (!report.pass)
    throw std::logic_error("has_minor: produced model failed verification: " + report.failure);
  return {true, std::move(model)};
}

/// Maximum edge count over all t-vertex minors of G, by exhaustive
/// delete/contract search with memoization. Seeds the bound with the best
/// t-vertex subgraph so sparse branches are pruned early.
inline SearchResult max_minor_edges(const Graph &g, int t,
                                    std::optional<long long> early_exit_at = std::nullopt) {
  if (t < 1 || g.v() < t) throw std::invalid_argument("max_minor_edges: need v(G) >= t >= 1");
  std::vector<int> ids;
  detail::MState root = detail::mstate_from_graph(g, ids);

  detail::MinorSearch search;
  search.t = t;
  SearchResult res;

  if (early_exit_at) {
    search.prune_below = *early_exit_at;
    search.accept = [&](const detail::MState &s) {
      return s.ecount() >= *early_exit_at;
    };
    search.run(root);
    res.exhaustive = false;
    res.explored = search.explored;
    res.optimum = search.stopped ? search.best : -1;
    if (!search.stopped) return res;
  } else {
    // seed with the densest t-subset (deletions only)
    {
      std::vector<int> pick;
      long long best_sub = -1;
      std::vector<int> best_pick;
      auto rec = [&](auto &&self, int from) -> void {
        if (static_cast<int>(pick.size()) == t) {
          long long e = 0;
          for (std::size_t a = 0; a < pick.size(); ++a)
            for (std::size_t b = a + 1; b < pick.size(); ++b)
              if (root.adj[pick[a]] >> pick[b] & 1) ++e;
          if (e > best_sub) { best_sub = e; best_pick = pick; }
          return;
        }
        for (int i = from; i <= root.n0 - (t - static_cast<int>(pick.size())); ++i) {
          pick.push_back(i);
          self(self, i + 1);
          pick.pop_back();
        }
      };
      rec(rec, 0);
      search.best = best_sub;
      for (int i = 0; i < root.n0; ++i)
        if (std::find(best_pick.begin(), best_pick.end(), i) == best_pick.end())
          search.best_path.push_back({detail::MOp::Delete, i, -1});
    }
    search.run(root);
    res.exhaustive = true;
    res.explored = search.explored;
    res.optimum = search.best;
  }

  ContractionTrace tr = detail::trace_from_path(ids, search.best_path);
  MinorModel model = replay_model(g, tr);
  if (model_edge_count(model) != res.optimum)
    throw std::logic_error("max_minor_edges: witness does not realize the optimum");
  res.witness_model = std::move(model);
  return res;
}

/// Maximum edge count over induced t-vertex subgraphs; plain exhaustive
/// subset sweep.
inline SearchResult max_subgraph_edges(const Graph &g, int t) {
  if (t < 0 || g.v() < t) throw std::invalid_argument("max_subgraph_edges: need v(G) >= t");
  const auto &ids = g.vertices();
  SearchResult res;
  res.exhaustive = true;
  std::vector<int> pick;
  auto rec = [&](auto &&self, int from) -> void {
    if (static_cast<int>(pick.size()) == t) {
      ++res.explored;
      long long e = 0;
      for (std::size_t a = 0; a < pick.size(); ++a)
        for (std::size_t b = a + 1; b < pick.size(); ++b)
          if (g.has_edge(ids[pick[a]], ids[pick[b]])) ++e;
      if (e > res.optimum) {
        res.optimum = e;
        res.witness_vertices.clear();
        for (int i : pick) res.witness_vertices.push_back(ids[i]);
      }
      return;
    }
    for (int i = from; i <= g.v() - (t - static_cast<int>(pick.size())); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return res;
}

/// v(G) >= k+1 and no separation of order < k. On failure returns a
/// minimum-order separation witness.
inline std::pair<bool, std::optional<Separation>> is_k_connected(const Graph &g, int k) {
  if (k < 0) throw std::invalid_argument("is_k_connected: k >= 0 required");
  if (g.v() < k + 1) return {false, std::nullopt};
  const auto &ids = g.vertices();
  for (int order = 0; order < k; ++order) {
    if (g.v() - order < 2) break;
    std::vector<int> cut;
    std::optional<Separation> found;
    auto rec = [&](auto &&self, int from) -> bool {
      if (static_cast<int>(cut.size()) == order) {
        std::vector<int> rest;
        for (int u : ids)
          if (std::find(cut.begin(), cut.end(), u) == cut.end()) rest.push_back(u);
        // component of rest[0] within G - cut
        std::vector<int> comp{rest[0]};
        std::vector<int> stack{rest[0]};
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (int w : g.neighbors(u)) {
            if (std::find(cut.begin(), cut.end(), w) != cut.end()) continue;
            if (std::find(comp.begin(), comp.end(), w) == comp.end()) {
              comp.push_back(w);
              stack.push_back(w);
            }
          }
        }
        if (comp.size() == rest.size()) return false; // connected
        Separation sep;
        sep.a = comp;
        sep.a.insert(sep.a.end(), cut.begin(), cut.end());
        for (int u : rest)
          if (std::find(comp.begin(), comp.end(), u) == comp.end()) sep.b.push_back(u);
        sep.b.insert(sep.b.end(), cut.begin(), cut.end());
        std::sort(sep.a.begin(), sep.a.end());
        std::sort(sep.b.begin(), sep.b.end());
        sep.order = order;
        found = std::move(sep);
        return true;
      }
      for (int i = from; i < g.v(); ++i) {
        cut.push_back(ids[i]);
        if (self(self, i + 1)) return true;
        cut.pop_back();
      }
      return false;
    };
    if (rec(rec, 0)) return {false, std::move(found)};
  }
  return {true, std::nullopt};
}

/// Brute-force injective subgraph embedding of H into G.
inline bool has_subgraph(const Graph &g, const Graph &h) {
  if (h.v() > g.v() || h.e() > g.e()) return false;
  const auto &gids = g.vertices();
  const auto &hids = h.vertices();
  std::vector<int> map(h.v(), -1);
  std::vector<bool> used(g.v(), false);
  auto rec = [&](auto &&self, int p) -> bool {
    if (p == h.v()) return true;
    for (int c = 0; c < g.v(); ++c) {
      if (used[c]) continue;
      if (g.degree(gids[c]) < h.degree(hids[p])) continue;
      bool ok = true;
      for (int q = 0; q < p; ++q)
        if (h.has_edge(hids[p], hids[q]) && !g.has_edge(gids[c], gids[map[q]])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[c] = true;
      map[p] = c;
      if (self(self, p + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Canonical edge mask by permutation minimization; graphs up to the
/// configured enumeration cap only.
inline std::uint64_t canonical_form(const Graph &g, int cap = 8) {
  int n = g.v();
  if (n > cap) throw std::invalid_argument("canonical_form: graph above enumeration cap");
  const auto &ids = g.vertices();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t best = ~0ull;
  auto pair_index = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  do {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.has_edge(ids[i], ids[j])) mask |= 1ull << pair_index(perm[i], perm[j]);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool is_isomorphic(const Graph &a, const Graph &b, int cap = 8) {
  if (a.v() != b.v() || a.e() != b.e()) return false;
  return canonical_form(a, cap) == canonical_form(b, cap);
}

/// Streams all labeled graphs on n vertices (ids 0..n-1), optionally
/// filtered by minimum edge count and deduplicated to isomorphism classes.
inline void enumerate_graphs(int n, const std::function<void(const Graph &)> &cb,
                             int min_edges = 0, bool dedup = false, int cap = 8) {
  if (n < 1 || n > cap)
    throw std::invalid_argument("enumerate_graphs: n out of range [1, cap=" +
                                std::to_string(cap) + "]");
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_list;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    if (std::popcount(mask) < min_edges) continue;
    std::vector<std::pair<int, int>> es;
    for (int b = 0; b < pairs; ++b)
      if (mask >> b & 1) es.push_back(pair_list[b]);
    Graph g(n, es);
    if (dedup && !seen.insert(canonical_form(g, cap)).second) continue;
    cb(g);
  }
}

namespace detail {

// quick sufficient check + exact fallback: does the n-vertex graph with
// this edge mask have a minor on t vertices with >= bound edges?
struct DenseMinorChecker {
  int n;
  int t;
  long long bound;
  std::vector<std::uint64_t> subset_masks; // edges inside each t-subset
  std::vector<std::pair<int, int>> pair_list;

  DenseMinorChecker(int n, int t, long long bound) : n(n), t(t), bound(bound) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);
    std::vector<int> pick;
    auto rec = [&](auto &&self, int from) -> void {
      if (static_cast<int>(pick.size()) == t) {
        std::uint64_t m = 0;
        for (std::size_t b = 0; b < pair_list.size(); ++b) {
          auto [i, j] = pair_list[b];
          bool ini = std::find(pick.begin(), pick.end(), i) != pick.end();
          bool inj = std::find(pick.begin(), pick.end(), j) != pick.end();
          if (ini && inj) m |= 1ull << b;
        }
        subset_masks.push_back(m);
        return;
      }
      for (int i = from; i <= n - (t - static_cast<int>(pick.size())); ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }

  bool check(std::uint64_t edge_mask) const {
    for (std::uint64_t sm : subset_masks)
      if (std::popcount(edge_mask & sm) >= bound) return true;
    // exact fallback
    MState root;
    root.n0 = n;
    root.vmask = static_cast<std::uint16_t>((1u << n) - 1);
    for (std::size_t b = 0; b < pair_list.size(); ++b)
      if (edge_mask >> b & 1) {
        auto [i, j] = pair_list[b];
        root.adj[i] |= 1u << j;
        root.adj[j] |= 1u << i;
      }
    MinorSearch search;
    search.t = t;
    search.prune_below = bound;
    long long goal = bound;
    search.accept = [goal](const MState &s) { return s.ecount() >= goal; };
    search.run(root);
    return search.stopped;
  }
};

} // namespace detail

/// Sweeps all labeled graphs with t <= v <= n_max and average degree at
/// least t-1, asserting each has a t-vertex minor with at least the
/// guaranteed edge count (1, 3, 5, 8, 11 for t = 2..6).
inline Report verify_small_theorem(int t, int n_max, int cap = 8) {
  static const std::map<int, long long> kBounds{{2, 1}, {3, 3}, {4, 5}, {5, 8}, {6, 11}};
  if (!kBounds.count(t)) throw std::invalid_argument("verify_small_theorem: t must be in 2..6");
  if (n_max > cap) throw std::invalid_argument("verify_small_theorem: n_max above cap");
  long long bound = kBounds.at(t);
  auto start = std::chrono::steady_clock::now();
  Report rep;
  for (int n = t; n <= n_max; ++n) {
    detail::DenseMinorChecker checker(n, t, bound);
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      // avg degree >= t-1  <=>  2e >= (t-1) n
      if (2 * std::popcount(mask) < static_cast<long long>(t - 1) * n) continue;
      ++rep.checked;
      if (!checker.check(mask))
        rep.violations.push_back("n=" + std::to_string(n) +
                                 " mask=" + std::to_string(mask));
    }
  }
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

/// Sweeps all labeled graphs with v <= n_max and e >= 5v/2 - 7/2 that are
/// not K1, K5 minus an edge, or K5, asserting a 6-vertex minor with at
/// least 11 edges exists.
inline Report verify_extremal11(int n_max, int cap = 8) {
  if (n_max > cap) throw std::invalid_argument("verify_extremal11: n_max above cap");
  auto start = std::chrono::steady_clock::now();
  Report rep;
  for (int n = 1; n <= n_max; ++n) {
    long long threshold = (5LL * n - 7 + 1) / 2; // ceil((5n-7)/2)
    if (threshold < 0) threshold = 0;
    int pairs = n * (n - 1) / 2;
    std::optional<detail::DenseMinorChecker> checker;
    if (n >= 6) checker.emplace(n, 6, 11);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      long long e = std::popcount(mask);
      if (e < threshold) continue;
      // exceptions: K1, K5 minus an edge, K5 (any 9-edge 5-vertex graph
      // is K5 minus an edge)
      if (n == 1) continue;
      if (n == 5 && e >= 9) continue;
      ++rep.checked;
      if (n < 6 || !checker->check(mask))
        rep.violations.push_back("n=" + std::to_string(n) +
                                 " mask=" + std::to_string(mask));
    }
  }
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

/// Every 6-vertex graph with at least 12 edges is 3-connected or contains
/// a K5 subgraph; checked by full enumeration (576 labeled graphs).
inline bool verify_6v12e_claim(Report *out = nullptr) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  enumerate_graphs(
      6,
      [&](const Graph &g) {
        ++rep.checked;
        if (is_k_connected(g, 3).first) return;
        if (has_subgraph(g, Graph::complete(5))) return;
        rep.violations.push_back("6-vertex graph with " + std::to_string(g.e()) +
                                 " edges is neither 3-connected nor K5-containing");
      },
      /*min_edges=*/12);
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  bool ok = rep.pass();
  if (out) *out = std::move(rep);
  return ok;
}

} // namespace minors

#include "minors/constructions.hpp"

namespace minors {

/// On the star-of-cliques hosts, minor containment collapses to subgraph
/// containment. Checks the equivalence against every pattern with up to
/// h_max vertices, one representative per isomorphism class.
inline Report verify_lemma32(const SGraphSpec &spec, int h_max, int cap = 8) {
  spec.validate();
  Graph host = s_graph(spec);
  if (host.v() > 10)
    throw std::invalid_argument("verify_lemma32: host capped at 10 vertices");
  if (h_max > host.v())
    throw std::invalid_argument("verify_lemma32: h_max must not exceed v(host)");
  auto start = std::chrono::steady_clock::now();
  Report rep;
  for (int h = 1; h <= h_max; ++h) {
    enumerate_graphs(
        h,
        [&](const Graph &pattern) {
          ++rep.checked;
          bool as_minor = has_minor(host, pattern).first;
          bool as_subgraph = has_subgraph(host, pattern);
          if (as_minor != as_subgraph)
            rep.violations.push_back(
                "pattern on " + std::to_string(h) + " vertices with " +
                std::to_string(pattern.e()) + " edges: minor=" +
                (as_minor ? "yes" : "no") + " subgraph=" + (as_subgraph ? "yes" : "no"));
        },
        /*min_edges=*/0, /*dedup=*/true, cap);
  }
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

} // namespace minors

#endif
