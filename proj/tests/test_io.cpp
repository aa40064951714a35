#include <catch_amalgamated.hpp>

#include <sstream>

#include "wcolkit/generators.hpp"
#include "wcolkit/graph_io.hpp"
#include "wcolkit/model_io.hpp"

using namespace wcolkit;

namespace {

std::string format_code(const std::string& text) {
  std::istringstream in(text);
  try {
    (void)read_graph(in);
  } catch (const Error& e) {
    return e.code();
  }
  return "ok";
}

}  // namespace

TEST_CASE("graph file round trip", "[io]") {
  Graph g = gen_grid(3, 2).graph;
  g.add_color("red", 4);
  g.add_color("blue", 0);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  CHECK(read_graph(in) == g);
}

TEST_CASE("graph file comments, blank lines and colors", "[io]") {
  std::istringstream in("# a triangle\n\np 3 3\ne 0 1\ne 1 2\n# inner comment\ne 2 0\nc 1 A\nc 1 B\n");
  const Graph g = read_graph(in);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_color("A", 1));
  CHECK(g.has_color("B", 1));
}

TEST_CASE("malformed graph files are format errors", "[io]") {
  CHECK(format_code("") == "format");
  CHECK(format_code("p 3\n") == "format");
  CHECK(format_code("p 2 1\ne 0 0\n") == "format");
  CHECK(format_code("p 2 2\ne 0 1\ne 1 0\n") == "format");
  CHECK(format_code("p 2 1\ne 0 2\n") == "format");
  CHECK(format_code("p 2 2\ne 0 1\n") == "format");
  CHECK(format_code("p 2 1\ne 0 x\n") == "format");
  CHECK(format_code("p 2 0\nq 1\n") == "format");
  CHECK(format_code("p 2 1\ne 0 1\n") == "ok");
}

TEST_CASE("ordering files", "[io]") {
  std::istringstream in("2 0\n1\n");
  const auto o = read_ordering(in, 3);
  CHECK(o.at(0) == 2);
  CHECK(o.rank(1) == 2);
  std::istringstream bad("0 0 1\n");
  CHECK_THROWS_AS(read_ordering(bad, 3), Error);
  std::istringstream short_one("0 1\n");
  CHECK_THROWS_AS(read_ordering(short_one, 3), Error);
  std::ostringstream out;
  write_ordering(out, o);
  CHECK(out.str() == "2 0 1\n");
}

TEST_CASE("edge list files", "[io]") {
  std::istringstream in("0 1\ne 2 1\n");
  const auto edges = read_edge_list(in, 3);
  REQUIRE(edges.size() == 2);
  CHECK(edges[1] == Edge{1, 2});
  std::istringstream loop("1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop, 3), Error);
}

TEST_CASE("model file round trip", "[io]") {
  const Graph host = gen_path(4).graph;
  std::istringstream in("model 2 c=1 d=1\n0 : 0 1\n1 : 2 3\nhe 0 1\n");
  const MinorModel m = read_model(in, host);
  CHECK(m.pattern.vertex_count() == 2);
  CHECK(m.pattern.adjacent(0, 1));
  CHECK(m.branch_sets[1] == VertexSet{2, 3});
  CHECK(m.depth == 1);
  std::ostringstream out;
  write_model(out, m);
  CHECK(out.str() == "model 2 c=1 d=1\n0 : 0 1\n1 : 2 3\nhe 0 1\n");

  std::istringstream inf("model 1 c=2 d=inf\n0 : 0 3\n");
  CHECK(read_model(inf, host).depth == kUnboundedDepth);
  std::istringstream bad("model 1 c=1 d=1\n0 : 9\n");
  CHECK_THROWS_AS(read_model(bad, host), Error);
}
