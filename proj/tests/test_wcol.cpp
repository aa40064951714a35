#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "wcolkit/generators.hpp"
#include "wcolkit/wcol.hpp"

using namespace wcolkit;

TEST_CASE("weak reachability examples", "[wcol]") {
  const Graph p3 = gen_path(3).graph;
  const auto natural = VertexOrdering::identity(3);
  CHECK(weak_reachability(p3, natural, 2, 2) == VertexSet{0, 1, 2});
  CHECK(weak_reachability(p3, natural, 2, 2) == oracle::wreach(p3, natural, 2, 2));

  const Graph star = gen_star(5).graph;  // centre 0 comes first
  const auto order = VertexOrdering::identity(5);
  CHECK(weak_reachability(star, order, 2, 3) == VertexSet{0, 3});
  CHECK(weak_reachability(star, order, 2, 3) == oracle::wreach(star, order, 2, 3));

  for (Vertex v = 0; v < 5; ++v) CHECK(weak_reachability(star, order, 0, v) == VertexSet{v});
}

TEST_CASE("inverse weak reachability examples", "[wcol]") {
  const Graph star = gen_star(5).graph;
  const auto order = VertexOrdering::identity(5);
  CHECK(inverse_weak_reachability(star, order, 1, 0) == all_vertices(star));

  Rng rng(4);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const Graph g = oracle::random_graph(rng, n, 1, 2);
    const auto o = oracle::random_order(rng, n);
    const Vertex last = o.at(n - 1);
    CHECK(inverse_weak_reachability(g, o, 3, last) == VertexSet{last});
  }
}

TEST_CASE("forward and inverse sets are consistent", "[wcol][oracle]") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      Rng rng(static_cast<std::uint64_t>(n * 1000 + g.edge_count()));
      const auto o = oracle::random_order(rng, n);
      for (int d = 0; d <= 3; ++d) {
        const ReachTable t(g, o, d);
        for (Vertex u = 0; u < n; ++u)
          for (Vertex w = 0; w < n; ++w) CHECK(contains(t.inverse(w), u) == contains(t.wreach(u), w));
      }
    }
}

TEST_CASE("wcol_of_order examples", "[wcol]") {
  CHECK(wcol_of_order(gen_path(10).graph, VertexOrdering::identity(10), 3).value == 4);
  CHECK(oracle::wcol_of_order(gen_path(10).graph, VertexOrdering::identity(10), 3) == 4);
  Rng rng(9);
  for (int d = 1; d <= 3; ++d) CHECK(wcol_of_order(gen_clique(5).graph, oracle::random_order(rng, 5), d).value == 5);
  for (int d = 0; d <= 4; ++d) CHECK(wcol_of_order(Graph(6), oracle::random_order(rng, 6), d).value == 1);
}

TEST_CASE("wcol_exact examples", "[wcol]") {
  const auto c4 = wcol_exact(gen_cycle(4).graph, 1);
  CHECK(c4.value == 3);
  CHECK(c4.exact);
  CHECK(oracle::wcol_all_orders(gen_cycle(4).graph, 1) == 3);
  for (int t = 1; t <= 4; ++t)
    for (int d = 1; d <= 3; ++d) {
      const Graph k = gen_clique(t + 1).graph;
      CHECK(wcol_exact(k, d).value == t + 1);
      CHECK(oracle::wcol_all_orders(k, d) == t + 1);
    }
  CHECK(wcol_exact(Graph(1), 2).value == 1);
}

TEST_CASE("wcol_exact reports budget exhaustion", "[wcol]") {
  const auto r = wcol_exact(gen_grid(4, 4).graph, 3, 10);
  CHECK_FALSE(r.exact);
  CHECK(r.value == wcol_of_order(gen_grid(4, 4).graph, r.order, 3).value);
}

TEST_CASE("wcol_exact is deterministic", "[wcol]") {
  Rng rng(77);
  const Graph g = oracle::random_graph(rng, 9, 1, 3);
  const auto a = wcol_exact(g, 2);
  const auto b = wcol_exact(g, 2);
  CHECK(a.value == b.value);
  CHECK(a.order == b.order);
}

TEST_CASE("wcol_heuristic bounds and paths", "[wcol]") {
  Rng rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Graph g = oracle::random_graph(rng, n, 1, 2);
    const int d = static_cast<int>(rng.below(4));
    CHECK(wcol_heuristic(g, d).value >= wcol_exact(g, d).value);
  }
  const Graph p10 = gen_path(10).graph;
  for (int d = 1; d <= 9; ++d) CHECK(wcol_heuristic(p10, d).value == d + 1);
  for (int n = 1; n <= 7; ++n) CHECK(wcol_heuristic(gen_clique(n).graph, 2).value == n);
}

TEST_CASE("wcol properties on random graphs", "[wcol][oracle]") {
  Rng rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const Graph g = oracle::random_graph(rng, n, 1 + static_cast<int>(rng.below(3)), 4);
    const auto o = oracle::random_order(rng, n);
    int previous = 0;
    for (int d = 0; d <= 4; ++d) {
      const ReachTable t(g, o, d);
      const int value = wcol_of_order(g, o, d).value;
      CHECK(value >= previous);
      previous = value;
      REQUIRE(value == oracle::wcol_of_order(g, o, d));
      for (Vertex v = 0; v < n; ++v) {
        const auto reach = t.wreach(v);
        REQUIRE(VertexSet(reach.begin(), reach.end()) == oracle::wreach(g, o, d, v));
        CHECK(contains(reach, v));
        for (Vertex u : reach) {
          CHECK(o.rank(u) <= o.rank(v));
          // Every vertex on the stored witness path also reaches u.
          const auto path = t.witness_path(v, u);
          REQUIRE(!path.empty());
          CHECK(static_cast<int>(path.size()) - 1 <= d);
          CHECK(path.front() == v);
          CHECK(path.back() == u);
          for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(g.adjacent(path[i], path[i + 1]));
          for (Vertex w : path) CHECK(t.reaches(w, u));
        }
      }
    }
  }
}

TEST_CASE("wcol_exact agrees with all orderings for n <= 7", "[wcol][oracle]") {
  Rng rng(99);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const Graph g = oracle::random_graph(rng, n, 1 + static_cast<int>(rng.below(3)), 4);
    const int d = 1 + static_cast<int>(rng.below(3));
    const auto r = wcol_exact(g, d);
    REQUIRE(r.exact);
    CHECK(r.value == oracle::wcol_all_orders(g, d));
    CHECK(wcol_of_order(g, r.order, d).value == r.value);
  }
}

TEST_CASE("degeneracy order", "[wcol]") {
  CHECK(degeneracy(gen_clique(5).graph) == 4);
  CHECK(degeneracy(gen_grid(4, 4).graph) == 2);
  CHECK(degeneracy(gen_complete_ktree(2, 3).graph) == 2);
  CHECK(degeneracy(Graph(3)) == 0);
}
