#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "wcolkit/bollobas.hpp"

using namespace wcolkit;

TEST_CASE("bollobas bound examples", "[bollobas]") {
  CHECK(bollobas_bound(0, 5) == 1);
  CHECK(bollobas_bound(1, 1) == 2);
  CHECK(bollobas_bound(2, 2) == 7);
  CHECK(bollobas_bound(3, 3) == 40);
  CHECK(bollobas_bound(2, 10) == 111);
  CHECK(bollobas_bound(40, 40) > BigInt(1) << 200);
}

TEST_CASE("bollobas_check examples", "[bollobas]") {
  std::vector<VertexSet> A{{1}, {2}};
  std::vector<VertexSet> B{{3}, {1}};
  auto v = bollobas_check(A, B, 1, 1);
  CHECK(v.premise());
  CHECK(v.n == 2);
  CHECK(v.bound == 2);
  CHECK(v.holds());

  B = {{2}, {3}};
  v = bollobas_check(A, B, 1, 1);
  CHECK_FALSE(v.cross_ok);
  CHECK(v.cross_failure == std::pair<int, int>{0, 1});
  CHECK(v.holds());

  v = bollobas_check({{1}}, {{1}}, 1, 1);
  CHECK_FALSE(v.disjoint_ok);
  CHECK(v.disjoint_failure == 0);

  v = bollobas_check({{1, 2}}, {{3}}, 1, 1);
  CHECK_FALSE(v.sizes_ok);
  CHECK(v.size_failure == 0);

  CHECK_FALSE(bollobas_check({{1}}, {}, 1, 1).lengths_ok);

  // Three pairs with a = b = 1 exceed the bound 2.
  A = {{1}, {2}, {3}};
  B = {{4}, {1}, {1}};
  v = bollobas_check(A, B, 1, 1);
  CHECK_FALSE(v.cross_ok);
}

TEST_CASE("empty sequences satisfy the premise", "[bollobas]") {
  const auto v = bollobas_check({}, {}, 0, 0);
  CHECK(v.premise());
  CHECK(v.n == 0);
  CHECK(v.holds());
}

TEST_CASE("extremal search agrees with the plain oracle", "[bollobas][oracle]") {
  for (int u = 0; u <= 3; ++u)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        const auto r = bollobas_extremal(u, a, b);
        INFO("u=" << u << " a=" << a << " b=" << b);
        CHECK(r.best == oracle::bollobas_longest(u, a, b));
      }
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) CHECK(bollobas_extremal(4, a, b).best == oracle::bollobas_longest(4, a, b));
}

TEST_CASE("extremal witnesses satisfy the premise and the bound", "[bollobas][property]") {
  for (int u = 0; u <= 6; ++u)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        if (u == 6 && a + b > 4) continue;
        const auto r = bollobas_extremal(u, a, b);
        INFO("u=" << u << " a=" << a << " b=" << b);
        CHECK(static_cast<int>(r.A.size()) == r.best);
        const auto v = bollobas_check(r.A, r.B, a, b);
        CHECK(v.premise());
        CHECK(v.conclusion_ok);
        CHECK(BigInt(r.best) <= bollobas_bound(a, b));
        for (const auto& s : r.A)
          for (Vertex x : s) CHECK((x >= 1 && x <= u));
      }
}

TEST_CASE("known extremal values", "[bollobas]") {
  CHECK(bollobas_extremal(5, 2, 2).best == 6);
  CHECK(bollobas_extremal(4, 3, 3).best == 14);
  CHECK(bollobas_extremal(5, 3, 3).best == 20);
  CHECK(bollobas_extremal(4, 1, 1).best == 2);
  CHECK_THROWS_AS(bollobas_extremal(17, 1, 1), Error);
}
