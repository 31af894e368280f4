#include "minors/constructions.hpp"
#include "minors/oracle.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace minors;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

} // namespace

TEST_CASE("minor containment") {
  SECTION("Petersen has K5 but not K6") {
    auto [yes, model] = has_minor(petersen(), Graph::complete(5));
    REQUIRE(yes);
    REQUIRE(model.has_value());
    REQUIRE(verify_model(*model, Graph::complete(5).edge_list()).pass);
    CHECK_FALSE(has_minor(petersen(), Graph::complete(6)).first);
  }
  SECTION("K1 is a minor of anything nonempty") {
    CHECK(has_minor(Graph::path(1), Graph::complete(1)).first);
    CHECK(has_minor(Graph::cycle(5), Graph::complete(1)).first);
  }
  SECTION("C6 has a K3 minor but no K3 subgraph") {
    Graph c6 = Graph::cycle(6), k3 = Graph::complete(3);
    CHECK(has_minor(c6, k3).first);
    CHECK_FALSE(has_subgraph(c6, k3));
  }
  SECTION("monotone under pattern subgraphs") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
      Graph g = random_graph(rng, 8, 0.5);
      Graph h = random_graph(rng, 4, 0.6);
      if (!has_minor(g, h).first) continue;
      auto hes = h.edge_list();
      if (hes.empty()) continue;
      std::vector<std::pair<int, int>> fewer(hes.begin(), hes.end() - 1);
      REQUIRE(has_minor(g, Graph(h.v(), fewer)).first);
    }
  }
  SECTION("pattern must be nonempty") {
    CHECK_THROWS_AS(has_minor(Graph::path(3), Graph()), std::invalid_argument);
  }
}

TEST_CASE("densest minors and subgraphs") {
  SECTION("fixed values") {
    CHECK(max_minor_edges(Graph::complete(6), 5).optimum == 10);
    CHECK(max_minor_edges(s_graph({2, 4, 1}), 4).optimum == 5);
    CHECK(max_subgraph_edges(petersen(), 5).optimum == 5);
    CHECK(max_subgraph_edges(Graph::complete(9), 4).optimum == 6);
  }
  SECTION("witnesses verify") {
    auto res = max_minor_edges(petersen(), 5);
    REQUIRE(res.exhaustive);
    REQUIRE(res.witness_model.has_value());
    CHECK(model_edge_count(*res.witness_model) == res.optimum);
    CHECK(res.optimum == 10); // Petersen contracts to K5

    auto sub = max_subgraph_edges(petersen(), 5);
    REQUIRE(static_cast<int>(sub.witness_vertices.size()) == 5);
    CHECK(induced(petersen(), sub.witness_vertices).e() == sub.optimum);
  }
  SECTION("relations between the two optima on random graphs") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 25; ++iter) {
      Graph g = random_graph(rng, 8, 0.5);
      int t = 3 + static_cast<int>(rng() % 4);
      auto mm = max_minor_edges(g, t);
      auto ms = max_subgraph_edges(g, t);
      REQUIRE(mm.optimum >= ms.optimum);
      REQUIRE(mm.optimum <= binom2(t));
      bool complete_minor = has_minor(g, Graph::complete(t)).first;
      REQUIRE((mm.optimum == binom2(t)) == complete_minor);
    }
  }
  SECTION("early exit answers the threshold question") {
    auto res = max_minor_edges(petersen(), 5, 8);
    CHECK(res.optimum >= 8);
    CHECK_FALSE(res.exhaustive);
    auto none = max_minor_edges(petersen(), 6, 15);
    CHECK(none.optimum == -1);
  }
  SECTION("host size guards") {
    CHECK_THROWS_AS(max_minor_edges(Graph::path(3), 4), std::invalid_argument);
    CHECK_THROWS_AS(max_minor_edges(Graph::complete(13), 4), std::invalid_argument);
  }
}

TEST_CASE("connectivity") {
  CHECK(is_k_connected(Graph::complete(4), 3).first);
  CHECK(is_k_connected(Graph::complete(4), 0).first);
  CHECK(is_k_connected(Graph::cycle(5), 2).first);

  SECTION("C5 fails at 3 with a 2-separation") {
    auto [ok, sep] = is_k_connected(Graph::cycle(5), 3);
    REQUIRE_FALSE(ok);
    REQUIRE(sep.has_value());
    CHECK(sep->order == 2);
    // separation invariants, checked verbatim
    std::vector<int> all;
    std::set_union(sep->a.begin(), sep->a.end(), sep->b.begin(), sep->b.end(),
                   std::back_inserter(all));
    CHECK(all == Graph::cycle(5).vertices());
    std::vector<int> priv_a, priv_b, cut;
    std::set_difference(sep->a.begin(), sep->a.end(), sep->b.begin(), sep->b.end(),
                        std::back_inserter(priv_a));
    std::set_difference(sep->b.begin(), sep->b.end(), sep->a.begin(), sep->a.end(),
                        std::back_inserter(priv_b));
    std::set_intersection(sep->a.begin(), sep->a.end(), sep->b.begin(), sep->b.end(),
                          std::back_inserter(cut));
    CHECK_FALSE(priv_a.empty());
    CHECK_FALSE(priv_b.empty());
    CHECK(static_cast<int>(cut.size()) == sep->order);
    for (int u : priv_a)
      for (int w : priv_b) CHECK_FALSE(Graph::cycle(5).has_edge(u, w));
  }
  SECTION("two K4s sharing a vertex have a cut vertex") {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        es.emplace_back(i, j);
        es.emplace_back(i == 0 ? 0 : i + 3, j == 0 ? 0 : j + 3);
      }
    Graph g(7, es);
    auto [ok, sep] = is_k_connected(g, 2);
    REQUIRE_FALSE(ok);
    REQUIRE(sep.has_value());
    CHECK(sep->order == 1);
  }
  SECTION("too few vertices") {
    CHECK_FALSE(is_k_connected(Graph::complete(3), 3).first);
  }
}

TEST_CASE("graph enumeration") {
  SECTION("counts") {
    int labeled = 0;
    enumerate_graphs(3, [&](const Graph &) { ++labeled; });
    CHECK(labeled == 8);
    int classes = 0;
    enumerate_graphs(3, [&](const Graph &) { ++classes; }, 0, true);
    CHECK(classes == 4);
    int dense4 = 0;
    enumerate_graphs(4, [&](const Graph &) { ++dense4; }, 5);
    CHECK(dense4 == 7);
    int singles = 0;
    enumerate_graphs(1, [&](const Graph &g) { ++singles; CHECK(g.v() == 1); });
    CHECK(singles == 1);
  }
  SECTION("cap enforcement") {
    CHECK_THROWS_AS(enumerate_graphs(9, [](const Graph &) {}), std::invalid_argument);
    CHECK_NOTHROW(enumerate_graphs(4, [](const Graph &) {}, 0, false, 4));
  }
  SECTION("isomorphism classifier") {
    CHECK(is_isomorphic(Graph::cycle(4), Graph({0, 1, 2, 3}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})));
    CHECK_FALSE(is_isomorphic(Graph::cycle(4), Graph::path(4)));
    CHECK_FALSE(is_isomorphic(Graph::cycle(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  }
}

TEST_CASE("theorem verifiers at small scale") {
  SECTION("guaranteed minor edges, tiny sweep") {
    auto rep = verify_small_theorem(3, 5);
    CHECK(rep.checked > 0);
    CHECK(rep.pass());
    auto rep2 = verify_small_theorem(2, 5);
    CHECK(rep2.pass());
    CHECK_THROWS_AS(verify_small_theorem(7, 5), std::invalid_argument);
  }
  SECTION("extremal threshold, tiny sweep") {
    auto rep = verify_extremal11(6);
    CHECK(rep.pass());
  }
  SECTION("6-vertex 12-edge structure") {
    Report rep;
    CHECK(verify_6v12e_claim(&rep));
    CHECK(rep.checked == 576);
    CHECK(rep.violations.empty());
  }
  SECTION("minor equals subgraph on small clique-star hosts") {
    auto rep = verify_lemma32({2, 2, 2}, 4);
    CHECK(rep.pass());
    CHECK(rep.checked == 1 + 2 + 4 + 11);
  }
}
