#ifndef MINORS_EXTRACTION_HPP
#define MINORS_EXTRACTION_HPP

#include "minors/graph.hpp"
#include "minors/minor_model.hpp"
#include "minors/reduction.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minors {

struct ExtractionParams {
  Rational alpha = Rational(4, 5);
  Rational beta = Rational(6, 5);
  Rational nu = Rational(6, 5);
  Rational lambda = Rational(6, 5);

  void validate() const {
    if (alpha < Rational(1, 2) || !(alpha < beta))
      throw std::invalid_argument("ExtractionParams: need 1/2 <= alpha < beta");
  }
};

/// Three-way outcome of the dense-seed search.
struct SeedOutcome {
  enum Case { Case1 = 1, Case2 = 2, Case3 = 3 };
  Case which;
  std::vector<int> x;
  std::optional<std::vector<int>> y; // Case3 only
};

struct DensityCertificate {
  MinorModel model; // t branch sets, against the original input graph
  long long achieved_edges = 0;
  Rational guaranteed_bound;
  std::string case_path;
};

/// Raised by case2_extract when the input turns out to have a proper
/// subgraph of average degree >= t; the caller deletes the witness and
/// restarts on the smaller graph.
struct RestartNeeded : std::runtime_error {
  std::vector<int> witness; // d̄(G - witness) >= t
  explicit RestartNeeded(std::vector<int> w)
      : std::runtime_error("restart-needed: proper subgraph with avg degree >= t"),
        witness(std::move(w)) {}
};

/// Raised by find_dense_seed when no vertex of small degree exists at all;
/// only possible for small t, where the pipeline falls back to plain
/// min-degree peeling.
struct SeedNotFound : std::runtime_error {
  SeedNotFound() : std::runtime_error("find_dense_seed: no small-degree vertex") {}
};

/// Exact rational strictly below sqrt(2), minus 1 + 24/t: the certified
/// per-instance bound. Under-approximating sqrt(2) keeps "achieved >=
/// bound" exactly decidable and conservative.
inline Rational sqrt2_lower(int t) {
  if (t < 1) throw std::invalid_argument("sqrt2_lower: t >= 1 required");
  return Rational(1414213, 1000000) - Rational(1) - Rational(24, t);
}

/// Greedy min-degree peeling down to t vertices. Each deletion keeps
/// e' >= e*(v-2)/v, which telescopes to the density floor
/// e(G[Z]) >= (avg_degree(G)/v(G)) * binom(t,2).
inline std::vector<int> densify_to_t(const Graph &g, int t) {
  if (t < 1 || g.v() < t) throw std::invalid_argument("densify_to_t: need v(G) >= t >= 1");
  Graph cur = g;
  while (cur.v() > t) {
    int u = -1, d = -1;
    for (int w : cur.vertices()) {
      int dw = cur.degree(w);
      if (u < 0 || dw < d) { u = w; d = dw; }
    }
    long long e_before = cur.e(), v_before = cur.v();
    cur = remove_vertex(cur, u);
    // min-degree <= 2e/v, so the per-step loss is bounded
    assert(Rational(cur.e()) >= Rational(e_before) * Rational(v_before - 2, v_before));
    (void)e_before; (void)v_before;
  }
  return cur.vertices();
}

namespace detail {

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<int> set_union(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> r(a);
  r.insert(r.end(), b.begin(), b.end());
  return sorted_unique(std::move(r));
}

inline std::vector<int> set_difference(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> r;
  for (int u : a)
    if (!std::binary_search(b.begin(), b.end(), u)) r.push_back(u);
  return r;
}

inline Rational induced_min_degree(const Graph &g, const std::vector<int> &x) {
  Graph sub = induced(g, x);
  auto d = sub.min_degree();
  return Rational(d ? *d : 0);
}

// E[e(G[X ∪ Y'])] over uniformly random m-subsets Y' of S, as an exact
// rational: e(G[X]) + (m/|S|)·e(X,S) + (m(m-1)/(|S|(|S|-1)))·e(S,S).
inline Rational expectation_score(long long exx, long long exs, long long ess,
                                  long long m, long long s) {
  Rational f(exx);
  if (s >= 1) f += Rational(m, s) * Rational(exs);
  if (s >= 2 && m >= 2)
    f += Rational(m * (m - 1)) / Rational(s * (s - 1)) * Rational(ess);
  return f;
}

} // namespace detail

/// Derandomized extension of a dense seed X to t vertices inside X ∪ Y, by
/// the method of conditional expectations: while the candidate pool S ⊆
/// Y∖X is larger than t-|X|, remove the vertex whose removal maximizes the
/// expected edge count of a random completion. The score never drops below
/// its initial value, which is at least
/// (1/2·(x + (1-x)²/y) - 1/t)·binom(t,2) with x=|X|/t, y=|Y|/t.
inline std::vector<int> extend_to_t(const Graph &g, const std::vector<int> &x_in,
                                    const std::vector<int> &y_in, int t) {
  std::vector<int> x = detail::sorted_unique(x_in);
  std::vector<int> y = detail::sorted_unique(y_in);
  if (static_cast<int>(x.size()) > t)
    throw std::invalid_argument("extend_to_t: |X| <= t violated");
  if (static_cast<int>(detail::set_union(x, y).size()) < t)
    throw std::invalid_argument("extend_to_t: |X ∪ Y| >= t violated");
  Rational half_t(t, 2);
  if (!x.empty() && detail::induced_min_degree(g, x) < half_t)
    throw std::invalid_argument("extend_to_t: min degree of G[X] >= t/2 violated");
  if (detail::induced_min_degree(g, y) < half_t)
    throw std::invalid_argument("extend_to_t: min degree of G[Y] >= t/2 violated");

  if (static_cast<int>(x.size()) == t) return x;

  std::vector<int> s = detail::set_difference(y, x);
  long long m = t - static_cast<long long>(x.size());

  // edge counters maintained across removals
  long long exx = induced(g, x).e();
  long long exs = 0, ess = 0;
  std::map<int, long long> deg_x, deg_s;
  for (int u : s) {
    long long dx = 0, ds = 0;
    for (int w : g.neighbors(u)) {
      if (std::binary_search(x.begin(), x.end(), w)) ++dx;
      if (std::binary_search(s.begin(), s.end(), w)) ++ds;
    }
    deg_x[u] = dx;
    deg_s[u] = ds;
    exs += dx;
    ess += ds;
  }
  ess /= 2;

  Rational score = detail::expectation_score(exx, exs, ess, m, s.size());
  while (static_cast<long long>(s.size()) > m) {
    long long sz = static_cast<long long>(s.size());
    int best = -1;
    Rational best_score;
    for (int w : s) {
      Rational f = detail::expectation_score(exx, exs - deg_x[w], ess - deg_s[w],
                                             m, sz - 1);
      if (best < 0 || f > best_score) { best = w; best_score = f; }
    }
    // averaging over removals guarantees some removal does not drop the score
    assert(best_score >= score);
    exs -= deg_x[best];
    ess -= deg_s[best];
    for (int w : g.neighbors(best))
      if (deg_s.count(w)) --deg_s[w];
    s.erase(std::find(s.begin(), s.end(), best));
    deg_x.erase(best);
    deg_s.erase(best);
    score = best_score;
  }

  std::vector<int> z = detail::set_union(x, s);
  assert(static_cast<int>(z.size()) == t);
  // with |S| = m the score is the plain edge count of G[Z]
  assert(Rational(induced(g, z).e()) == score);
  return z;
}

/// The seed trichotomy: mirrors the proof case split. Requires every closed
/// neighborhood of G to have minimum degree >= t/2 (established by
/// mader_reduce).
inline SeedOutcome find_dense_seed(const Graph &g, int t, const ExtractionParams &params) {
  params.validate();
  Rational half_t(t, 2);
  PackedView pv(g);
  for (int pos = 0; pos < pv.n(); ++pos)
    if (Rational(detail::closed_nbhd_min_degree(pv, pos)) < half_t)
      throw std::invalid_argument(
          "find_dense_seed: min degree >= t/2 in every closed neighborhood violated");

  Rational at1 = params.alpha * Rational(t) - Rational(1); // αt - 1
  Rational bt1 = params.beta * Rational(t) - Rational(1);  // βt - 1

  auto check_case1 = [&](std::vector<int> x) {
    Rational size(static_cast<long long>(x.size()));
    assert(size >= params.alpha * Rational(t) && size <= params.beta * Rational(t));
    return SeedOutcome{SeedOutcome::Case1, std::move(x), std::nullopt};
  };

  // (i) a single closed neighborhood of the right size
  for (int u : g.vertices()) {
    Rational d(g.degree(u));
    if (at1 <= d && d <= bt1) return check_case1(g.closed_neighborhood(u));
  }

  // (ii) union of all small closed neighborhoods
  std::vector<int> low; // vertices of degree < αt - 1, ascending id
  for (int u : g.vertices())
    if (Rational(g.degree(u)) < at1) low.push_back(u);
  std::vector<int> a;
  for (int u : low) a = detail::set_union(a, g.closed_neighborhood(u));
  if (a.empty()) throw SeedNotFound();
  if (Rational(static_cast<long long>(a.size())) < params.alpha * Rational(t)) {
    assert(Rational(static_cast<long long>(a.size())) >= half_t);
    for (int u : g.vertices())
      if (!std::binary_search(a.begin(), a.end(), u))
        assert(Rational(g.degree(u)) > bt1);
    return SeedOutcome{SeedOutcome::Case2, std::move(a), std::nullopt};
  }

  // (iii) grow neighborhood-by-neighborhood until the size reaches αt
  std::vector<int> b, prefix;
  int last = -1;
  for (int u : low) {
    prefix = b;
    b = detail::set_union(b, g.closed_neighborhood(u));
    last = u;
    if (Rational(static_cast<long long>(b.size())) >= params.alpha * Rational(t)) break;
  }
  assert(Rational(static_cast<long long>(b.size())) >= params.alpha * Rational(t));
  if (Rational(static_cast<long long>(b.size())) <= params.beta * Rational(t))
    return check_case1(std::move(b));
  std::vector<int> y = g.closed_neighborhood(last);
  assert(!prefix.empty());
  assert(Rational(static_cast<long long>(prefix.size())) < params.alpha * Rational(t));
  assert(Rational(static_cast<long long>(y.size())) < params.alpha * Rational(t));
  return SeedOutcome{SeedOutcome::Case3, std::move(prefix), std::move(y)};
}

/// The large-degrees-outside-X route: when all vertices off X have degree
/// above λt-1 and G is single-vertex minimal, the whole graph is small and
/// min-degree peeling already lands above the required floor. Detects a
/// violated minimality premise and reports it as a restart.
inline std::vector<int> case2_extract(const Graph &g, const std::vector<int> &x_in,
                                      const Rational &lambda, int t) {
  std::vector<int> x = detail::sorted_unique(x_in);
  Rational rt(t);
  if (avg_degree(g) < rt)
    throw std::invalid_argument("case2_extract: avg_degree(G) >= t violated");
  for (int u : g.vertices())
    if (avg_degree(remove_vertex(g, u)) >= rt)
      throw std::invalid_argument("case2_extract: single-vertex minimality violated");
  if (x.empty() || static_cast<int>(x.size()) >= g.v())
    throw std::invalid_argument("case2_extract: need empty != X proper subset of V");
  if (detail::induced_min_degree(g, x) < Rational(t, 2))
    throw std::invalid_argument("case2_extract: min degree of G[X] >= t/2 violated");
  Rational lt1 = lambda * rt - Rational(1);
  for (int u : g.vertices())
    if (!std::binary_search(x.begin(), x.end(), u) && !(Rational(g.degree(u)) > lt1))
      throw std::invalid_argument("case2_extract: degree > λt-1 off X violated");
  if (!(lambda > Rational(1) + Rational(3, t)))
    throw std::invalid_argument("case2_extract: λ > 1 + 3/t violated");

  // If deleting X preserves average degree >= t, the minimality premise is
  // violated; the pipeline restarts on G - X.
  if (removal_preserves(g, x)) throw RestartNeeded(x);

  Rational bound_v = (lambda - Rational(3, 4)) * Rational(static_cast<long long>(x.size())) /
                     (lambda - Rational(1) - Rational(3, t));
  if (!(Rational(g.v()) < bound_v))
    throw std::logic_error("case2_extract: v(G) bound failed despite M > t|X|/2");

  std::vector<int> z = densify_to_t(g, t);
  Rational floor = (lambda - Rational(1) - Rational(3, t)) * rt /
                   ((lambda - Rational(3, 4)) * Rational(static_cast<long long>(x.size()))) *
                   Rational(binom2(t));
  if (Rational(induced(g, z).e()) < floor)
    throw std::logic_error("case2_extract: edge floor failed");
  return z;
}

namespace detail {

struct PipelineState {
  Graph reduced;
  ContractionTrace trace;
};

// minimalize + mader passes until neither changes anything
inline PipelineState reduce_to_fixpoint(Graph g, const Rational &t,
                                        ContractionTrace trace) {
  for (;;) {
    auto [g1, tr1] = minimalize_vertices(g, t);
    trace.append(tr1);
    ReductionResult rr = mader_reduce(g1);
    trace.append(rr.trace);
    if (rr.reduced == g1) return {std::move(g1), std::move(trace)};
    g = std::move(rr.reduced);
  }
}

} // namespace detail

/// End-to-end pipeline: reduce, find a seed, run the per-case extraction,
/// and certify the resulting t-vertex minor against the original input.
inline DensityCertificate extract_dense_minor(const Graph &input, int t,
                                              const ExtractionParams &params = {}) {
  params.validate();
  Rational rt(t);
  if (avg_degree(input) < rt)
    throw std::invalid_argument("extract_dense_minor: avg_degree(G) >= t violated");

  bool defaults = params.alpha == Rational(4, 5) && params.beta == Rational(6, 5) &&
                  params.nu == Rational(6, 5);
  Rational highdeg_cutoff = Rational(1) + Rational(3, t);

  Graph work = input;
  ContractionTrace trace;
  std::string path;
  std::vector<int> z;
  int restarts = 0;
  for (;;) {
    auto state = detail::reduce_to_fixpoint(std::move(work), rt, std::move(trace));
    const Graph &h = state.reduced;
    trace = std::move(state.trace);

    Rational floor(0); // per-case guarantee, asserted below when defaults hold
    try {
      SeedOutcome seed = find_dense_seed(h, t, params);
      if (seed.which == SeedOutcome::Case1) {
        std::vector<int> x = std::move(seed.x);
        if (static_cast<int>(x.size()) >= t) {
          z = densify_to_t(induced(h, x), t);
          path = "case1-densify";
          floor = Rational(1) / (Rational(2) * params.beta) * Rational(binom2(t));
        } else {
          // grow X maximally by closed neighborhoods subject to |X| <= t
          for (bool grew = true; grew;) {
            grew = false;
            for (int u : h.vertices()) {
              if (std::binary_search(x.begin(), x.end(), u)) continue;
              auto merged = detail::set_union(x, h.closed_neighborhood(u));
              if (static_cast<int>(merged.size()) <= t) {
                x = std::move(merged);
                grew = true;
                break;
              }
            }
          }
          if (static_cast<int>(x.size()) == t) {
            z = x;
            path = "case1-exact";
            floor = Rational(1, 2) * Rational(binom2(t));
          } else {
            Rational nt1 = params.nu * rt - Rational(1);
            int u_small = -1;
            for (int u : h.vertices())
              if (!std::binary_search(x.begin(), x.end(), u) &&
                  Rational(h.degree(u)) <= nt1) {
                u_small = u;
                break;
              }
            if (u_small >= 0) {
              z = extend_to_t(h, x, h.closed_neighborhood(u_small), t);
              path = "case1-extend";
              floor = (Rational(5, 12) - Rational(1, t)) * Rational(binom2(t));
            } else if (params.nu > highdeg_cutoff) {
              z = case2_extract(h, x, params.nu, t);
              path = "case1-highdeg";
              floor = (Rational(4, 9) - Rational(12, t)) * Rational(binom2(t));
            } else {
              z = densify_to_t(h, t); // t too small for the high-degree route; bound is 0 here
              path = "case1-smallt-densify";
            }
          }
        }
      } else if (seed.which == SeedOutcome::Case2) {
        if (params.beta > highdeg_cutoff) {
          z = case2_extract(h, seed.x, params.beta, t);
          path = "case2-highdeg";
          floor = (Rational(4, 9) - Rational(24, t)) * Rational(binom2(t));
        } else {
          z = densify_to_t(h, t);
          path = "case2-smallt-densify";
        }
      } else {
        std::vector<int> base = std::move(seed.x);
        std::vector<int> other = std::move(*seed.y);
        if (other.size() > base.size()) std::swap(base, other);
        z = extend_to_t(h, base, other, t);
        path = "case3-extend";
        floor = (Rational(1414213, 1000000) - Rational(1) - Rational(1, t)) *
                Rational(binom2(t));
      }
    } catch (const SeedNotFound &) {
      z = densify_to_t(h, t);
      path = "fallback-densify";
    } catch (const RestartNeeded &r) {
      ++restarts;
      if (restarts > input.v())
        throw std::logic_error("extract_dense_minor: restart loop did not terminate");
      for (int u : r.witness) trace.record_delete(u);
      work = remove_vertices(h, r.witness);
      assert(avg_degree(work) >= rt);
      continue;
    }

    long long achieved = induced(h, z).e();
    if (defaults && Rational(achieved) < floor)
      throw std::logic_error("extract_dense_minor: per-case floor failed on path " + path);

    DensityCertificate cert;
    std::sort(z.begin(), z.end());
    cert.model = replay_model(input, trace, &z);
    cert.achieved_edges = model_edge_count(cert.model);
    if (cert.achieved_edges != achieved)
      throw std::logic_error("extract_dense_minor: model edge count mismatch");
    Rational lower = sqrt2_lower(t);
    if (lower < Rational(0)) lower = Rational(0);
    cert.guaranteed_bound = lower * Rational(binom2(t));
    cert.case_path = path + (restarts ? "+restarts=" + std::to_string(restarts) : "");
    if (Rational(cert.achieved_edges) < cert.guaranteed_bound)
      throw std::logic_error("extract_dense_minor: certified bound failed on path " + path);
    auto report = verify_model(cert.model, realized_edges(cert.model));
    if (!report.pass)
      throw std::logic_error("extract_dense_minor: model verification failed: " +
                             report.failure);
    return cert;
  }
}

} // namespace minors

#endif
