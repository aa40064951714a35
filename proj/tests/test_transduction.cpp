#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "wcolkit/generators.hpp"
#include "wcolkit/transduction.hpp"

using namespace wcolkit;

namespace {

const char* kDistanceTwo = "exists z (adj(x,z) & adj(z,y))";
const char* kSplit = "(A(x) & !A(y)) | (A(y) & !A(x))";

}  // namespace

TEST_CASE("evaluation examples", "[transduction]") {
  const Graph p3 = gen_path(3).graph;
  const auto phi = parse_formula(kDistanceTwo);
  CHECK(eval_formula(phi, p3, 0, 2));
  CHECK(eval_formula(phi, p3, 0, 0));
  CHECK_FALSE(eval_formula(phi, p3, 0, 1));
  CHECK(eval_formula(parse_formula("forall z (z = x | adj(x,z))"), gen_star(4).graph, 0, 1));
  CHECK_FALSE(eval_formula(parse_formula("forall z (z = x | adj(x,z))"), gen_star(4).graph, 1, 0));
  // Colors the graph does not carry are empty.
  CHECK_FALSE(eval_formula(parse_formula("Q(x)"), p3, 0, 0));
}

TEST_CASE("evaluation agrees with direct distance computation", "[transduction][oracle]") {
  Rng rng(3);
  const auto phi = parse_formula(kDistanceTwo);
  const auto within2 = parse_formula("adj(x,y) | exists z (adj(x,z) & adj(z,y))");
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Graph g = oracle::random_graph(rng, n, 1, 3);
    const auto dist = oracle::distances_within(g, all_vertices(g));
    Evaluator e(phi, g);
    Evaluator w(within2, g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        bool common = false;
        for (Vertex z = 0; z < n; ++z) common = common || (g.adjacent(u, z) && g.adjacent(z, v));
        CHECK(e(u, v) == common);
        const int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (u != v) CHECK(w(u, v) == (d >= 1 && d <= 2));
      }
  }
}

TEST_CASE("symmetry checks", "[transduction]") {
  Graph g(3);
  g.add_color("A", 1);
  const auto r = check_symmetric(parse_formula("A(x)"), g);
  CHECK_FALSE(r.symmetric);
  CHECK(r.counterexample == std::pair<Vertex, Vertex>{0, 1});
  CHECK(check_symmetric(parse_formula(kSplit), g).symmetric);
  try {
    (void)apply_interpretation(parse_formula("A(x)"), g);
    FAIL("expected asymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == "asymmetric");
  }
}

TEST_CASE("apply_interpretation examples", "[transduction]") {
  const Graph p5 = gen_path(5).graph;
  const Graph sq = apply_interpretation(parse_formula(kDistanceTwo), p5);
  CHECK(sq.edge_count() == 3);
  CHECK(sq.adjacent(0, 2));
  CHECK(sq.adjacent(2, 4));
  CHECK_FALSE(sq.adjacent(0, 1));

  CHECK(apply_interpretation(parse_formula("adj(x,y)"), p5) == p5);
  CHECK(apply_interpretation(parse_formula("true"), Graph(4)) == gen_clique(4).graph);
  CHECK(apply_interpretation(parse_formula("false"), gen_clique(4).graph) == Graph(4));
}

TEST_CASE("transduce examples", "[transduction]") {
  const Transduction split({"A"}, parse_formula(kSplit));
  const Graph star = transduce(split, Graph(4), {{"A", {0}}}, {0, 1, 2, 3});
  CHECK(isomorphic(star, gen_star(4).graph));
  const Graph kept = transduce(split, Graph(4), {{"A", {0}}}, {1, 2, 3});
  CHECK(kept == Graph(3));

  const Transduction guarded({"B"}, guard(parse_formula("adj(x,y)"), "B"));
  const Graph cut = transduce(guarded, gen_path(4).graph, {{"B", {0, 1, 3}}}, {0, 1, 2, 3});
  CHECK(cut.edge_count() == 1);
  CHECK(cut.adjacent(0, 1));

  CHECK_THROWS_AS(Transduction({}, parse_formula("A(x)")), Error);
  CHECK_THROWS_AS(transduce(split, Graph(2), {{"Z", {0}}}, {0, 1}), Error);
}

TEST_CASE("isomorphism", "[transduction]") {
  CHECK(isomorphic(gen_path(4).graph, apply_interpretation(parse_formula("adj(x,y)"), gen_path(4).graph)));
  Graph relabelled(4);
  relabelled.add_edge(2, 0);
  relabelled.add_edge(0, 3);
  relabelled.add_edge(3, 1);
  CHECK(isomorphic(gen_path(4).graph, relabelled));
  CHECK_FALSE(isomorphic(gen_path(4).graph, gen_star(4).graph));
  CHECK_FALSE(isomorphic(gen_cycle(6).graph, [] {
    Graph two(6);
    for (int base : {0, 3})
      for (int i = 0; i < 3; ++i) two.add_edge(base + i, base + (i + 1) % 3);
    return two;
  }()));

  Rng rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const Graph g = oracle::random_graph(rng, n, 1, 2);
    const auto perm = oracle::random_order(rng, n);
    Graph h(n);
    for (const Edge& e : g.edges()) h.add_edge(perm.at(e.u), perm.at(e.v));
    CHECK(isomorphic(g, h));
    if (g.edge_count() > 0) {
      Graph fewer(n);
      const auto edges = g.edges();
      for (std::size_t i = 1; i < edges.size(); ++i) fewer.add_edge(edges[i].u, edges[i].v);
      CHECK_FALSE(isomorphic(g, fewer));
    }
  }
}

TEST_CASE("search_transduction examples", "[transduction]") {
  const Transduction identity({}, parse_formula("adj(x,y)"));
  const auto same = search_transduction(identity, gen_path(4).graph, gen_path(3).graph);
  CHECK(same.status == SearchStatus::Found);
  CHECK(same.keep == VertexSet{0, 1, 2});

  const Transduction split({"A"}, parse_formula(kSplit));
  for (int n = 1; n <= 6; ++n) {
    const auto r = search_transduction(split, Graph(n), gen_star(n).graph);
    REQUIRE(r.status == SearchStatus::Found);
    if (n >= 2) CHECK(r.expansion.at("A") == VertexSet{n - 1});
    CHECK(isomorphic(transduce(split, Graph(n), r.expansion, r.keep), gen_star(n).graph));
  }

  // Split graphs never contain a triangle.
  const auto none = search_transduction(split, Graph(5), gen_clique(3).graph);
  CHECK(none.status == SearchStatus::None);
  CHECK(search_transduction(identity, Graph(2), Graph(3)).status == SearchStatus::None);
  CHECK(std::string(to_string(SearchStatus::Unknown)) == "unknown");

  const auto capped = search_transduction(split, Graph(6), gen_clique(3).graph, 3);
  CHECK(capped.status == SearchStatus::Unknown);

  const Transduction lopsided({"A"}, parse_formula("A(x) & adj(x,y)"));
  const auto some = search_transduction(lopsided, gen_path(3).graph, Graph(1));
  CHECK(some.status == SearchStatus::Found);
  CHECK(some.skipped_asymmetric == 0);
  const auto skip = search_transduction(lopsided, gen_path(3).graph, gen_path(2).graph);
  CHECK(skip.skipped_asymmetric > 0);
}
