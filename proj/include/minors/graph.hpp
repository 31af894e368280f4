#ifndef MINORS_GRAPH_HPP
#define MINORS_GRAPH_HPP

#include "minors/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace minors {

/// Simple undirected graph with stable integer vertex ids. Ids survive
/// deletions and contractions unchanged (the surviving endpoint of a
/// contraction keeps the smaller id). Instances are immutable once built;
/// every operation returns a new graph.
class Graph {
public:
  Graph() = default;

  /// Graph on ids 0..n-1 with the given edges.
  Graph(int n, const std::vector<std::pair<int, int>> &edges) {
    ids_.resize(n);
    for (int i = 0; i < n; ++i) ids_[i] = i;
    adj_.assign(n, {});
    for (auto [u, v] : edges) add_edge_internal(u, v);
    finish();
  }

  /// Graph on an explicit id set.
  Graph(std::vector<int> ids, const std::vector<std::pair<int, int>> &edges) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    ids_ = std::move(ids);
    adj_.assign(ids_.size(), {});
    for (auto [u, v] : edges) add_edge_internal(u, v);
    finish();
  }

  static Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
  }

  static Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
    return Graph(n, es);
  }

  static Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return Graph(n, es);
  }

  int v() const { return static_cast<int>(ids_.size()); }
  long long e() const { return edges_; }
  bool null() const { return ids_.empty(); }

  const std::vector<int> &vertices() const { return ids_; }

  bool has_vertex(int u) const { return find(u) >= 0; }

  bool has_edge(int u, int v) const {
    int i = find(u);
    if (i < 0) return false;
    return std::binary_search(adj_[i].begin(), adj_[i].end(), v);
  }

  int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

  /// Sorted neighbor ids; O(deg) to iterate.
  const std::vector<int> &neighbors(int u) const {
    int i = find(u);
    if (i < 0) throw std::out_of_range("Graph: unknown vertex id");
    return adj_[i];
  }

  std::vector<int> closed_neighborhood(int u) const {
    std::vector<int> r = neighbors(u);
    r.insert(std::lower_bound(r.begin(), r.end(), u), u);
    return r;
  }

  /// |N(u) ∩ N(v)| by merging the two sorted lists; O(deg(u)+deg(v)).
  int common_neighbor_count(int u, int v) const {
    const auto &a = neighbors(u);
    const auto &b = neighbors(v);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) ++i;
      else if (a[i] > b[j]) ++j;
      else { ++count; ++i; ++j; }
    }
    return count;
  }

  std::optional<int> min_degree() const {
    std::optional<int> d;
    for (const auto &nb : adj_)
      if (!d || static_cast<int>(nb.size()) < *d)
        d = static_cast<int>(nb.size());
    return d;
  }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_);
    for (std::size_t i = 0; i < ids_.size(); ++i)
      for (int w : adj_[i])
        if (ids_[i] < w) es.emplace_back(ids_[i], w);
    return es;
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.ids_ == b.ids_ && a.adj_ == b.adj_;
  }

private:
  int find(int u) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), u);
    if (it == ids_.end() || *it != u) return -1;
    return static_cast<int>(it - ids_.begin());
  }

  void add_edge_internal(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    int i = find(u), j = find(v);
    if (i < 0 || j < 0) throw std::invalid_argument("Graph: edge endpoint is not a vertex");
    adj_[i].push_back(v);
    adj_[j].push_back(u);
  }

  void finish() {
    edges_ = 0;
    for (auto &nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      edges_ += nb.size();
    }
    edges_ /= 2;
  }

  std::vector<int> ids_;               // sorted
  std::vector<std::vector<int>> adj_;  // parallel to ids_, each sorted
  long long edges_ = 0;
};

/// 2e(G)/v(G); 0 for the null graph.
inline Rational avg_degree(const Graph &g) {
  if (g.null()) return Rational(0);
  return Rational(BigInt(2 * g.e()), BigInt(g.v()));
}

/// G[X]. Every id in X must be a vertex of G.
inline Graph induced(const Graph &g, const std::vector<int> &x) {
  std::vector<int> xs(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int u : xs)
    if (!g.has_vertex(u)) throw std::invalid_argument("induced: unknown vertex id");
  std::vector<std::pair<int, int>> es;
  for (int u : xs)
    for (int w : g.neighbors(u))
      if (u < w && std::binary_search(xs.begin(), xs.end(), w))
        es.emplace_back(u, w);
  return Graph(xs, es);
}

inline Graph remove_vertices(const Graph &g, const std::vector<int> &x) {
  std::vector<int> keep;
  for (int u : g.vertices())
    if (std::find(x.begin(), x.end(), u) == x.end()) keep.push_back(u);
  return induced(g, keep);
}

inline Graph remove_vertex(const Graph &g, int u) {
  return remove_vertices(g, {u});
}

/// G/uv; the surviving vertex keeps the smaller id. Requires uv in E(G).
inline Graph contract(const Graph &g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("contract: uv is not an edge");
  int keep = std::min(u, v), gone = std::max(u, v);
  std::vector<int> ids;
  for (int w : g.vertices())
    if (w != gone) ids.push_back(w);
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edge_list()) {
    if (a == gone) a = keep;
    if (b == gone) b = keep;
    if (a == b) continue;
    es.emplace_back(a, b);
  }
  return Graph(ids, es);
}

/// Whether G[X] is connected (true for a single vertex, false for empty X).
inline bool is_connected_subset(const Graph &g, const std::vector<int> &x) {
  if (x.empty()) return false;
  std::vector<int> xs(x);
  std::sort(xs.begin(), xs.end());
  std::vector<int> stack{xs[0]};
  std::vector<bool> seen(xs.size(), false);
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      auto it = std::lower_bound(xs.begin(), xs.end(), w);
      if (it == xs.end() || *it != w) continue;
      std::size_t i = it - xs.begin();
      if (!seen[i]) {
        seen[i] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == xs.size();
}

/// Dense 0..n-1 relabeling of a graph with word-packed adjacency rows,
/// for inner loops that intersect neighborhoods heavily.
struct PackedView {
  std::vector<int> ids;                 // position -> original id
  std::vector<std::vector<std::uint64_t>> rows;
  int words = 0;

  explicit PackedView(const Graph &g) : ids(g.vertices()) {
    int n = static_cast<int>(ids.size());
    words = (n + 63) / 64;
    rows.assign(n, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < n; ++i)
      for (int w : g.neighbors(ids[i])) {
        int j = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), w) - ids.begin());
        rows[i][j >> 6] |= 1ull << (j & 63);
      }
  }

  int n() const { return static_cast<int>(ids.size()); }

  static int intersect_count(const std::vector<std::uint64_t> &a,
                             const std::vector<std::uint64_t> &b) {
    int c = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      c += std::popcount(a[k] & b[k]);
    return c;
  }
};

} // namespace minors

#endif
