#include "minors/graph.hpp"
#include "minors/minor_model.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace minors;

TEST_CASE("basic accessors") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {1, 0}}); // duplicate collapses
  CHECK(g.v() == 5);
  CHECK(g.e() == 4);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.closed_neighborhood(1) == std::vector<int>{0, 1, 2});
  CHECK(g.common_neighbor_count(0, 2) == 1);
  CHECK(g.min_degree() == 1);
  CHECK_THROWS_AS(g.neighbors(9), std::out_of_range);
}

TEST_CASE("named families") {
  CHECK(Graph::complete(6).e() == 15);
  CHECK(Graph::cycle(5).e() == 5);
  CHECK(Graph::path(5).e() == 4);
  CHECK(avg_degree(Graph::complete(7)) == Rational(6));
  CHECK(avg_degree(Graph::cycle(9)) == Rational(2));
  CHECK(Graph().null());
  CHECK(avg_degree(Graph()) == Rational(0));
}

TEST_CASE("non-contiguous vertex ids") {
  Graph g({10, 20, 30}, {{10, 20}, {20, 30}});
  CHECK(g.v() == 3);
  CHECK(g.vertices() == std::vector<int>{10, 20, 30});
  CHECK(g.has_edge(10, 20));
  CHECK_FALSE(g.has_vertex(0));
}

TEST_CASE("induced and removal") {
  Graph g = Graph::complete(5);
  Graph h = induced(g, {0, 2, 4});
  CHECK(h.v() == 3);
  CHECK(h.e() == 3);
  Graph r = remove_vertices(g, {0, 1});
  CHECK(r.v() == 3);
  CHECK(r.e() == 3);
  CHECK(remove_vertex(g, 0).v() == 4);
}

TEST_CASE("contraction edge count identity on random graphs") {
  // e(G/uv) = e(G) - 1 - |N(u) ∩ N(v)|
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> nd(2, 30);
  std::uniform_real_distribution<double> pd(0.05, 0.95);
  int done = 0;
  while (done < 1000) {
    Graph g = random_graph(rng, nd(rng), pd(rng));
    if (g.e() == 0) continue;
    auto es = g.edge_list();
    auto [u, v] = es[std::uniform_int_distribution<std::size_t>(0, es.size() - 1)(rng)];
    Graph c = contract(g, u, v);
    REQUIRE(c.v() == g.v() - 1);
    REQUIRE(c.e() == g.e() - 1 - g.common_neighbor_count(u, v));
    REQUIRE(c.has_vertex(std::min(u, v)));
    REQUIRE_FALSE(c.has_vertex(std::max(u, v)));
    ++done;
  }
}

TEST_CASE("contraction requires an edge") {
  Graph g = Graph::path(3);
  CHECK_THROWS_AS(contract(g, 0, 2), std::invalid_argument);
}

TEST_CASE("connected subset checks") {
  Graph g = Graph::path(5);
  CHECK(is_connected_subset(g, {1, 2, 3}));
  CHECK_FALSE(is_connected_subset(g, {0, 2}));
  CHECK(is_connected_subset(g, {4}));
}

TEST_CASE("trace replay matches direct operation sequence") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = random_graph(rng, 12, 0.5);
    Graph direct = g;
    ContractionTrace tr;
    for (int step = 0; step < 6 && direct.v() > 2; ++step) {
      if (rng() % 2 == 0 || direct.e() == 0) {
        auto ids = direct.vertices();
        int u = ids[rng() % ids.size()];
        tr.record_delete(u);
        direct = remove_vertex(direct, u);
      } else {
        auto es = direct.edge_list();
        auto [u, v] = es[rng() % es.size()];
        tr.record_contract(u, v);
        direct = contract(direct, u, v);
      }
    }
    ReplayResult rr = replay(g, tr);
    REQUIRE(rr.reduced == direct);
    // branch sets of the replay partition exactly the surviving preimages
    std::size_t total = 0;
    for (const auto &[survivor, set] : rr.branch) {
      REQUIRE(direct.has_vertex(survivor));
      REQUIRE(is_connected_subset(g, set));
      total += set.size();
    }
    REQUIRE(static_cast<int>(rr.branch.size()) == direct.v());
    REQUIRE(total <= static_cast<std::size_t>(g.v()));
  }
}

TEST_CASE("packed view intersections agree with the adjacency lists") {
  std::mt19937 rng(99);
  Graph g = random_graph(rng, 70, 0.3);
  PackedView pv(g);
  for (int a = 0; a < pv.n(); a += 7)
    for (int b = a + 1; b < pv.n(); b += 11) {
      int expect = g.common_neighbor_count(pv.ids[a], pv.ids[b]);
      CHECK(PackedView::intersect_count(pv.rows[a], pv.rows[b]) == expect);
    }
}
