#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "wcolkit/formula.hpp"
#include "wcolkit/transduction.hpp"

using namespace wcolkit;

namespace {

std::string error_code(const std::string& text) {
  try {
    (void)parse_formula(text);
  } catch (const Error& e) {
    return e.code();
  }
  return "ok";
}

}  // namespace

TEST_CASE("parse examples", "[formula]") {
  const auto phi = parse_formula("exists z (adj(x,z) & adj(z,y))");
  CHECK(phi.quantifier_rank() == 1);
  CHECK(phi.root().kind == Formula::Kind::Exists);
  CHECK(phi.root().a.slot == 2);

  CHECK(parse_formula("adj(x,y)").quantifier_rank() == 0);
  CHECK(parse_formula("exists a exists b (adj(x,a) & adj(a,b) & adj(b,y))").quantifier_rank() == 2);
  CHECK(parse_formula("(exists a adj(x,a)) & (forall b adj(b,y))").quantifier_rank() == 1);
  CHECK(parse_formula("A(x) & !B(y)").colors() == std::set<std::string>{"A", "B"});
  CHECK(parse_formula("x = y").root().kind == Formula::Kind::Eq);
  CHECK(parse_formula("# comment\n  true\n").root().kind == Formula::Kind::True);
}

TEST_CASE("precedence and associativity", "[formula]") {
  CHECK(parse_formula("true | false & false") == parse_formula("true | (false & false)"));
  CHECK(parse_formula("true -> false -> true") == parse_formula("true -> (false -> true)"));
  CHECK(parse_formula("true <-> false <-> true") == parse_formula("(true <-> false) <-> true"));
  CHECK(parse_formula("!true & false") == parse_formula("(!true) & false"));
  CHECK(parse_formula("exists z adj(x,z) & adj(z,y)") == parse_formula("exists z (adj(x,z) & adj(z,y))"));
  CHECK(parse_formula("true | false -> true") == parse_formula("(true | false) -> true"));
}

TEST_CASE("parse errors", "[formula]") {
  CHECK(error_code("adj(x,z)") == "unbound-variable");
  CHECK(error_code("exists z adj(z,w)") == "unbound-variable");
  CHECK(error_code("(exists z true) & adj(x,z)") == "unbound-variable");
  CHECK(error_code("adj(x,y) && adj(y,x)") == "unknown-connective");
  CHECK(error_code("adj(x,y) => true") == "unknown-connective");
  CHECK(error_code("adj(x,y) and true") == "unknown-connective");
  CHECK(error_code("not adj(x,y)") == "unknown-connective");
  CHECK(error_code("adj(x,") == "syntax");
  CHECK(error_code("(adj(x,y)") == "syntax");
  CHECK(error_code("") == "syntax");
  CHECK(error_code("adj(x,y) adj(x,y)") == "syntax");
  CHECK(error_code("exists adj(x,y)") == "syntax");
  CHECK(error_code("& true") == "syntax");
}

TEST_CASE("syntax errors carry line and column", "[formula]") {
  try {
    (void)parse_formula("true &\n  (adj(x,y)");
    FAIL("expected syntax");
  } catch (const Error& e) {
    CHECK(e.code() == "syntax");
    CHECK(std::string(e.what()).find("2:") != std::string::npos);
  }
}

TEST_CASE("to_string round trips", "[formula][property]") {
  const std::vector<std::string> samples{
      "exists z (adj(x,z) & adj(z,y))",
      "forall a (adj(x,a) -> exists b (adj(a,b) & B(b)))",
      "!(x = y) <-> (A(x) | !A(y))",
      "true -> false -> x = y",
  };
  for (const auto& s : samples) {
    const auto phi = parse_formula(s);
    CHECK(parse_formula(phi.to_string()) == phi);
  }
  Rng rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    const auto qf = oracle::QF::random(rng, 4, {"A", "B"});
    const auto phi = parse_formula(qf.text());
    CHECK(parse_formula(phi.to_string()) == phi);
    CHECK(phi.quantifier_rank() == 0);
  }
}

TEST_CASE("quantifier-free formulas agree with the truth-table oracle", "[formula][oracle]") {
  Rng rng(99);
  std::vector<oracle::QF> formulas;
  for (int i = 0; i < 40; ++i) formulas.push_back(oracle::QF::random(rng, 3, {"A", "B"}));
  for (int n = 1; n <= 4; ++n)
    for (Graph g : oracle::all_graphs(n)) {
      for (Vertex v = 0; v < n; ++v) {
        if (rng.chance(1, 2)) g.add_color("A", v);
        if (rng.chance(1, 3)) g.add_color("B", v);
      }
      for (const auto& qf : formulas) {
        Evaluator eval(parse_formula(qf.text()), g);
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = 0; v < n; ++v) REQUIRE(eval(u, v) == qf.eval(g, u, v));
      }
    }
}

TEST_CASE("swap_free, symmetrize and guard", "[formula]") {
  const auto phi = parse_formula("A(x) & !A(y)");
  CHECK(swap_free(phi) == parse_formula("A(y) & !A(x)"));
  const auto sym = symmetrize(phi);
  CHECK(parse_formula(sym.to_string()) == sym);

  const auto bound = parse_formula("exists y adj(x,y)");
  const auto swapped = swap_free(bound);
  CHECK(parse_formula(swapped.to_string()) == swapped);
  Graph g(3);
  g.add_edge(0, 1);
  // The bound y must not capture the swapped free variable.
  CHECK(eval_formula(swapped, g, 2, 0));
  CHECK_FALSE(eval_formula(swapped, g, 0, 2));

  Rng rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    Graph h = oracle::random_graph(rng, 5, 1, 2);
    for (Vertex v = 0; v < 5; ++v)
      if (rng.chance(1, 2)) h.add_color("A", v);
    const auto f = parse_formula(oracle::QF::random(rng, 3, {"A"}).text());
    CHECK(check_symmetric(symmetrize(f), h).symmetric);
    const auto guarded = guard(f, "A");
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = 0; v < 5; ++v)
        CHECK(eval_formula(guarded, h, u, v) == (eval_formula(f, h, u, v) && h.has_color("A", u) && h.has_color("A", v)));
  }
}
