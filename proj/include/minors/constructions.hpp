#ifndef MINORS_CONSTRUCTIONS_HPP
#define MINORS_CONSTRUCTIONS_HPP

#include "minors/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace minors {

/// Parameters for the star-of-cliques family: a universal clique C of size
/// k joined to r disjoint cliques of size s.
struct SGraphSpec {
  int k = 1;
  int r = 1;
  int s = 1;

  void validate() const {
    if (k < 1 || r < 1 || s < 1)
      throw std::invalid_argument("SGraphSpec: k, r, s must all be >= 1");
  }
};

struct CockadeSpec {
  Graph base;
  int k = 1;
  int copies = 1;
  enum class Attachment { Star, Chain } attachment = Attachment::Star;

  void validate() const {
    if (k < 1 || copies < 1)
      throw std::invalid_argument("CockadeSpec: k and copies must be >= 1");
  }
};

/// k-th power of a path on n vertices: edge {i,j} iff |i-j| <= k. This is a
/// k-tree with binom(k,2) + k(n-k) edges.
inline Graph path_power(int n, int k) {
  if (n <= k) throw std::invalid_argument("path_power: need n >= k+1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= k; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

/// S_{k,r,s}: ids 0..k-1 form the universal clique, then r blocks of s ids
/// each form the leaf cliques.
inline Graph s_graph(const SGraphSpec &spec) {
  spec.validate();
  int n = spec.k + spec.r * spec.s;
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < spec.k; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  for (int block = 0; block < spec.r; ++block) {
    int base = spec.k + block * spec.s;
    for (int u = 0; u < spec.s; ++u)
      for (int v = u + 1; v < spec.s; ++v) es.emplace_back(base + u, base + v);
  }
  return Graph(n, es);
}

/// Closed-form maximum edge count of a t-vertex subgraph of S_{k,r,s}
/// (for any r with k + rs >= t).
inline long long f_bound(int k, int s, int t) {
  if (t < k) throw std::invalid_argument("f_bound: need t >= k");
  if (s < 1) throw std::invalid_argument("f_bound: need s >= 1");
  auto c2 = [](long long n) { return n < 2 ? 0 : n * (n - 1) / 2; };
  long long full = (t - k) / s;
  long long rest = (t - k) % s;
  return c2(k) + static_cast<long long>(k) * (t - k) + full * c2(s) + c2(rest);
}

namespace detail {

inline std::vector<std::vector<int>> k_cliques(const Graph &g, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const auto &ids = g.vertices();
  auto rec = [&](auto &&self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < ids.size(); ++i) {
      bool ok = true;
      for (int u : cur)
        if (!g.has_edge(u, ids[i])) { ok = false; break; }
      if (ok) {
        cur.push_back(ids[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

// Deterministic designated clique: lexicographically first among the
// k-cliques maximizing the total degree of their vertices. For K5 minus an
// edge with k=2 this picks an edge avoiding the missing edge's endpoints.
inline std::vector<int> designated_clique(const Graph &g, int k) {
  auto cliques = k_cliques(g, k);
  if (cliques.empty())
    throw std::invalid_argument("cockade: base graph has no clique of size k");
  std::vector<int> best;
  long long best_deg = -1;
  for (const auto &c : cliques) {
    long long d = 0;
    for (int u : c) d += g.degree(u);
    if (d > best_deg) { best = c; best_deg = d; }
  }
  return best;
}

} // namespace detail

/// (H,k)-cockade: `copies` copies of the base, each glued to an existing
/// copy along the designated k-clique. "star" glues every copy to the first
/// one; "chain" glues each copy to the previous one.
inline Graph cockade(const CockadeSpec &spec) {
  spec.validate();
  const Graph &h = spec.base;
  std::vector<int> clique = detail::designated_clique(h, spec.k);
  int vh = h.v();
  const auto &hids = h.vertices();
  auto hpos = [&](int id) {
    return static_cast<int>(std::lower_bound(hids.begin(), hids.end(), id) - hids.begin());
  };

  // anchor[c][i] = final id of vertex position i of copy c
  std::vector<std::vector<int>> map(spec.copies, std::vector<int>(vh, -1));
  for (int i = 0; i < vh; ++i) map[0][i] = i;
  int next_id = vh;
  for (int c = 1; c < spec.copies; ++c) {
    int target = spec.attachment == CockadeSpec::Attachment::Star ? 0 : c - 1;
    for (int j = 0; j < spec.k; ++j)
      map[c][hpos(clique[j])] = map[target][hpos(clique[j])];
    for (int i = 0; i < vh; ++i)
      if (map[c][i] < 0) map[c][i] = next_id++;
  }

  std::vector<std::pair<int, int>> es;
  for (int c = 0; c < spec.copies; ++c)
    for (auto [u, v] : h.edge_list())
      es.emplace_back(map[c][hpos(u)], map[c][hpos(v)]);
  return Graph(next_id, es);
}

inline Graph k5_minus() {
  Graph k5 = Graph::complete(5);
  std::vector<std::pair<int, int>> es;
  for (auto e : k5.edge_list())
    if (!(e.first == 3 && e.second == 4)) es.push_back(e);
  return Graph(5, es);
}

/// Line graph of K_n: vertices are the unordered pairs from {0..n-1},
/// adjacent when they share an element. 2(n-2)-regular on binom(n,2)
/// vertices.
inline Graph line_graph_complete(int n) {
  if (n < 2) throw std::invalid_argument("line_graph_complete: need n >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a == c || a == d || b == c || b == d)
        es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(static_cast<int>(pairs.size()), es);
}

/// Witness family for the 3/4 upper bound: S_{k,r,s} with s ~= t/(2i)
/// rounded to an integer >= 1, k = ceil((t-s)/2)+1, and r the smallest
/// count pushing the average degree to at least t.
inline Graph theorem13_witness(int t, int i, SGraphSpec *chosen = nullptr) {
  if (t < 2 || i < 1) throw std::invalid_argument("theorem13_witness: need t >= 2, i >= 1");
  int s = static_cast<int>((Rational(t, 2LL * i) + Rational(1, 2)).floor());
  if (s < 1) s = 1;
  if (s > t) s = t;
  int k = (t - s + 1) / 2 + 1;
  // limit of the average degree in r is s-1+2k >= t+1, so some finite r works
  for (int r = 1;; ++r) {
    SGraphSpec spec{k, r, s};
    Graph g = s_graph(spec);
    if (avg_degree(g) >= Rational(t)) {
      if (chosen) *chosen = spec;
      return g;
    }
  }
}

} // namespace minors

#endif
