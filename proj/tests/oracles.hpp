#pragma once

// Brute-force reference implementations. They share only the Graph and
// VertexOrdering containers with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wcolkit/graph.hpp"
#include "wcolkit/rng.hpp"

namespace oracle {

using wcolkit::Edge;
using wcolkit::Graph;
using wcolkit::Vertex;
using wcolkit::VertexOrdering;
using wcolkit::VertexSet;

/// Every graph on n labelled vertices, n <= 5.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1u) g.add_edge(slots[i].first, slots[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

inline Graph random_graph(wcolkit::Rng& rng, int n, int num, int den) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) g.add_edge(u, v);
  return g;
}

inline VertexOrdering random_order(wcolkit::Rng& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  rng.shuffle(perm);
  return VertexOrdering(perm);
}

/// Calls f on every simple path starting at `from` with at most `max_len` edges.
inline void for_each_path(const Graph& g, Vertex from, int max_len,
                          const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> path{from};
  std::vector<char> on(static_cast<std::size_t>(g.vertex_count()), 0);
  on[static_cast<std::size_t>(from)] = 1;
  std::function<void()> rec = [&] {
    f(path);
    if (static_cast<int>(path.size()) - 1 == max_len) return;
    for (Vertex y : g.neighbors(path.back())) {
      if (on[static_cast<std::size_t>(y)]) continue;
      on[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      rec();
      path.pop_back();
      on[static_cast<std::size_t>(y)] = 0;
    }
  };
  rec();
}

/// WReach_d[v] straight from the definition: u is reached if some path from v
/// to u of length <= d never visits a vertex ranked below u.
inline VertexSet wreach(const Graph& g, const VertexOrdering& order, int d, Vertex v) {
  std::set<Vertex> out;
  for_each_path(g, v, d, [&](const std::vector<Vertex>& p) {
    const Vertex u = p.back();
    bool ok = true;
    for (Vertex w : p) ok = ok && order.rank(w) >= order.rank(u);
    if (ok) out.insert(u);
  });
  return {out.begin(), out.end()};
}

inline int wcol_of_order(const Graph& g, const VertexOrdering& order, int d) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, static_cast<int>(wreach(g, order, d, v).size()));
  return best;
}

/// min over all n! orderings.
inline int wcol_all_orders(const Graph& g, int d) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  int best = std::numeric_limits<int>::max();
  do {
    best = std::min(best, wcol_of_order(g, VertexOrdering(perm), d));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Floyd-Warshall distances inside G[A] (indices into A); -1 = unreachable.
inline std::vector<std::vector<int>> distances_within(const Graph& g, const VertexSet& A) {
  const std::size_t k = A.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> dist(k, std::vector<int>(k, inf));
  for (std::size_t i = 0; i < k; ++i) {
    dist[i][i] = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (g.adjacent(A[i], A[j])) dist[i][j] = 1;
  }
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) dist[i][j] = std::min(dist[i][j], dist[i][m] + dist[m][j]);
  for (auto& row : dist)
    for (int& x : row)
      if (x == inf) x = -1;
  return dist;
}

/// nullopt = infinite.
inline std::optional<int> radius(const Graph& g, const VertexSet& A) {
  const auto dist = distances_within(g, A);
  int best = std::numeric_limits<int>::max();
  for (const auto& row : dist) {
    int ecc = 0;
    for (int x : row) ecc = x < 0 ? std::numeric_limits<int>::max() : std::max(ecc, x);
    best = std::min(best, ecc);
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

inline std::optional<int> diameter(const Graph& g, const VertexSet& A) {
  int best = 0;
  for (const auto& row : distances_within(g, A))
    for (int x : row) {
      if (x < 0) return std::nullopt;
      best = std::max(best, x);
    }
  return best;
}

/// Some K_{t,t} subgraph, by trying all pairs of disjoint t-subsets.
inline bool has_ktt(const Graph& g, int t) {
  const int n = g.vertex_count();
  if (2 * t > n) return false;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) != t) continue;
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      if (std::popcount(b) != t || (a & b) != 0) continue;
      bool all = true;
      for (Vertex x = 0; x < n && all; ++x)
        for (Vertex y = 0; y < n && all; ++y)
          if ((a >> x & 1u) && (b >> y & 1u)) all = g.adjacent(x, y);
      if (all) return true;
    }
  }
  return false;
}

/// Lexicographically smallest minimum vertex cover, trying every subset of
/// the endpoints in order of size and then lexicographically.
inline VertexSet min_vertex_cover(const std::vector<Edge>& edges) {
  std::set<Vertex> ends;
  for (const Edge& e : edges) {
    ends.insert(e.u);
    ends.insert(e.v);
  }
  const std::vector<Vertex> vs(ends.begin(), ends.end());
  const auto k = vs.size();
  std::optional<VertexSet> best;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) s.push_back(vs[i]);
    bool covers = true;
    for (const Edge& e : edges)
      covers = covers && (std::binary_search(s.begin(), s.end(), e.u) || std::binary_search(s.begin(), s.end(), e.v));
    if (!covers) continue;
    if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best)) best = s;
  }
  return best.value_or(VertexSet{});
}

/// Exact treewidth by the subset recurrence TW(S) = min_v max(TW(S - v),
/// |Q(S - v, v)|), where Q(S, v) are the vertices outside S + v reachable
/// from v through S. n <= 12.
inline int treewidth(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return -1;
  const std::uint32_t full = (1u << n) - 1u;
  auto q_size = [&](std::uint32_t S, Vertex v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, outside = 0;
    while (frontier) {
      const Vertex x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (Vertex y : g.neighbors(x)) {
        if (seen >> y & 1u) continue;
        seen |= 1u << y;
        if (S >> y & 1u) {
          frontier |= 1u << y;
        } else {
          outside |= 1u << y;
        }
      }
    }
    return std::popcount(outside);
  };
  std::vector<int> tw(static_cast<std::size_t>(full) + 1, std::numeric_limits<int>::max());
  tw[0] = -1;
  for (std::uint32_t S = 1; S <= full; ++S)
    for (Vertex v = 0; v < n; ++v) {
      if (!(S >> v & 1u)) continue;
      const std::uint32_t rest = S & ~(1u << v);
      tw[S] = std::min(tw[S], std::max(tw[rest], q_size(rest, v)));
    }
  return tw[full];
}

/// Longest premise-satisfying set-pair sequence over {1..u}, plain DFS over
/// all pairs without symmetry breaking or maximality.
inline int bollobas_longest(int u, int a, int b) {
  struct P {
    std::uint32_t a, b;
  };
  std::vector<P> pairs;
  for (std::uint32_t x = 0; x < (1u << u); ++x)
    for (std::uint32_t y = 0; y < (1u << u); ++y)
      if ((x & y) == 0 && std::popcount(x) <= a && std::popcount(y) <= b) pairs.push_back({x, y});
  int best = 0;
  std::vector<P> chain;
  std::function<void()> rec = [&] {
    best = std::max(best, static_cast<int>(chain.size()));
    for (const P& p : pairs) {
      bool ok = true;
      for (const P& q : chain) ok = ok && (q.a & p.b) != 0;
      if (!ok) continue;
      chain.push_back(p);
      rec();
      chain.pop_back();
    }
  };
  rec();
  return best;
}

/// Independent quantifier-free formula in x, y, with a printer producing the
/// library's concrete syntax.
struct QF {
  enum Kind { T, F, Adj, Eq, Col, Not, And, Or, Imp, Iff } kind;
  int a = 0, b = 0;  // variables: 0 = x, 1 = y
  std::string color;
  std::vector<QF> kids;

  static QF random(wcolkit::Rng& rng, int depth, const std::vector<std::string>& colors) {
    QF f;
    const int leaf_kinds = 5;
    const int pick = depth == 0 ? static_cast<int>(rng.below(leaf_kinds)) : static_cast<int>(rng.below(10));
    f.kind = static_cast<Kind>(pick);
    f.a = static_cast<int>(rng.below(2));
    f.b = static_cast<int>(rng.below(2));
    f.color = colors[rng.below(colors.size())];
    if (f.kind == Not) f.kids.push_back(random(rng, depth - 1, colors));
    if (f.kind >= And) {
      f.kids.push_back(random(rng, depth - 1, colors));
      f.kids.push_back(random(rng, depth - 1, colors));
    }
    return f;
  }

  std::string text() const {
    const char* var[] = {"x", "y"};
    switch (kind) {
      case T:
        return "true";
      case F:
        return "false";
      case Adj:
        return std::string("adj(") + var[a] + "," + var[b] + ")";
      case Eq:
        return std::string("(") + var[a] + " = " + var[b] + ")";
      case Col:
        return color + "(" + var[a] + ")";
      case Not:
        return "!" + kids[0].text();
      case And:
        return "(" + kids[0].text() + " & " + kids[1].text() + ")";
      case Or:
        return "(" + kids[0].text() + " | " + kids[1].text() + ")";
      case Imp:
        return "(" + kids[0].text() + " -> " + kids[1].text() + ")";
      case Iff:
        return "(" + kids[0].text() + " <-> " + kids[1].text() + ")";
    }
    return {};
  }

  /// Truth value once the atoms are fixed by the graph and (u, v).
  bool eval(const Graph& g, Vertex u, Vertex v) const {
    const Vertex val[] = {u, v};
    switch (kind) {
      case T:
        return true;
      case F:
        return false;
      case Adj:
        return g.adjacent(val[a], val[b]);
      case Eq:
        return val[a] == val[b];
      case Col:
        return g.has_color(color, val[a]);
      case Not:
        return !kids[0].eval(g, u, v);
      case And:
        return kids[0].eval(g, u, v) && kids[1].eval(g, u, v);
      case Or:
        return kids[0].eval(g, u, v) || kids[1].eval(g, u, v);
      case Imp:
        return !kids[0].eval(g, u, v) || kids[1].eval(g, u, v);
      case Iff:
        return kids[0].eval(g, u, v) == kids[1].eval(g, u, v);
    }
    return false;
  }
};

}  // namespace oracle
