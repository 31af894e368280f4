#ifndef MINORS_REDUCTION_HPP
#define MINORS_REDUCTION_HPP

#include "minors/graph.hpp"
#include "minors/minor_model.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>
#include <vector>

namespace minors {

struct ReductionResult {
  Graph reduced;
  ContractionTrace trace;
  Rational threshold; // the input's average degree, fixed at entry
};

/// True iff the number M of edges with at least one end in X satisfies
/// M <= avg_degree(G)*|X|/2. When true, deleting X cannot decrease the
/// average degree.
inline bool removal_preserves(const Graph &g, const std::vector<int> &x) {
  if (static_cast<int>(x.size()) >= g.v())
    throw std::invalid_argument("removal_preserves: X must be a proper subset of V(G)");
  long long m = 0;
  std::vector<int> xs(x);
  std::sort(xs.begin(), xs.end());
  for (int u : xs) {
    if (!g.has_vertex(u))
      throw std::invalid_argument("removal_preserves: unknown vertex id");
    for (int w : g.neighbors(u))
      if (w > u || !std::binary_search(xs.begin(), xs.end(), w)) ++m;
  }
  return Rational(m) <= avg_degree(g) * Rational(static_cast<long long>(xs.size())) / Rational(2);
}

namespace detail {

// min over w in N[u] of |N(w) ∩ N[u]|, i.e. the minimum degree of the
// closed-neighborhood subgraph.
inline int closed_nbhd_min_degree(const PackedView &pv, int pos) {
  std::vector<std::uint64_t> mask(pv.rows[pos]);
  mask[pos >> 6] |= 1ull << (pos & 63);
  int best = std::numeric_limits<int>::max();
  for (int w = 0; w < pv.n(); ++w) {
    if (!((mask[w >> 6] >> (w & 63)) & 1)) continue;
    best = std::min(best, PackedView::intersect_count(pv.rows[w], mask));
  }
  return best;
}

} // namespace detail

/// The contraction pass behind the neighborhood-min-degree guarantee: with
/// tau fixed at half the input's average degree, repeatedly find a vertex u
/// whose closed neighborhood has minimum degree <= tau; delete it if it is
/// isolated, otherwise contract it with a minimum-degree neighbor. The
/// result H is a certified minor with avg_degree(H) >= avg_degree(G) and
/// min degree strictly above tau in every closed neighborhood.
inline ReductionResult mader_reduce(const Graph &input) {
  ReductionResult res;
  res.threshold = avg_degree(input);
  Rational tau = res.threshold / Rational(2);
  Graph g = input;
  for (;;) {
    PackedView pv(g);
    int found = -1;
    for (int pos = 0; pos < pv.n(); ++pos) {
      if (Rational(detail::closed_nbhd_min_degree(pv, pos)) <= tau) {
        found = pos;
        break;
      }
    }
    if (found < 0) break;
    int u = pv.ids[found];
    if (g.degree(u) == 0) {
      res.trace.record_delete(u);
      g = remove_vertex(g, u);
      continue;
    }
    // minimum-degree vertex of G[N[u]] restricted to N(u); ties by id
    std::vector<std::uint64_t> mask(pv.rows[found]);
    mask[found >> 6] |= 1ull << (found & 63);
    int vpos = -1, vdeg = std::numeric_limits<int>::max();
    for (int w = 0; w < pv.n(); ++w) {
      if (w == found || !((mask[w >> 6] >> (w & 63)) & 1)) continue;
      int d = PackedView::intersect_count(pv.rows[w], mask);
      if (d < vdeg) { vdeg = d; vpos = w; }
    }
    assert(vpos >= 0);
    int v = pv.ids[vpos];
    res.trace.record_contract(u, v);
    Graph next = contract(g, u, v);
    assert(avg_degree(next) >= avg_degree(g));
    g = std::move(next);
  }
  res.reduced = std::move(g);
  // edgeless inputs reduce to nothing; otherwise the density never drops
  assert(res.reduced.null() || avg_degree(res.reduced) >= res.threshold);
  return res;
}

/// Repeatedly deletes any single vertex whose removal keeps the average
/// degree at least t, lowest id first. The output has avg degree >= t and
/// every single-vertex deletion drops below t.
inline std::pair<Graph, ContractionTrace> minimalize_vertices(const Graph &input,
                                                              const Rational &t) {
  if (avg_degree(input) < t)
    throw std::invalid_argument("minimalize_vertices: avg_degree(G) < t");
  Graph g = input;
  ContractionTrace trace;
  for (;;) {
    int found = -1;
    for (int u : g.vertices()) {
      // avg(G-u) >= t  <=>  2(e - deg(u)) >= t*(v-1)
      Rational lhs(2 * (g.e() - g.degree(u)));
      if (lhs >= t * Rational(g.v() - 1)) { found = u; break; }
    }
    if (found < 0) break;
    trace.record_delete(found);
    g = remove_vertex(g, found);
  }
  return {std::move(g), std::move(trace)};
}

} // namespace minors

#endif
