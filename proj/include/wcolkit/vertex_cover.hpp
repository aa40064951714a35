#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wcolkit/graph.hpp"

namespace wcolkit {

namespace detail {

/// Minimum vertex cover size by branching on a maximum-degree vertex v:
/// either v is in the cover, or all of its neighbours are.
class CoverSolver {
 public:
  explicit CoverSolver(std::uint64_t budget) : budget_(budget) {}

  /// Size of a minimum cover of `edges`, or nullopt when the budget runs out.
  std::optional<int> minimum(std::vector<Edge> edges) {
    exhausted_ = false;
    const int hint = upper_bound_hint(edges);
    const int best = solve(std::move(edges), 0, hint);
    if (exhausted_) return std::nullopt;
    return best;
  }

 private:
  static int upper_bound_hint(const std::vector<Edge>& edges) {
    // Both endpoints of a maximal matching form a cover.
    VertexSet matched;
    for (const Edge& e : edges) {
      if (contains(matched, e.u) || contains(matched, e.v)) continue;
      matched.insert(std::lower_bound(matched.begin(), matched.end(), e.u), e.u);
      matched.insert(std::lower_bound(matched.begin(), matched.end(), e.v), e.v);
    }
    return static_cast<int>(matched.size());
  }

  /// Best total cover size below `best` given `used` vertices already chosen.
  int solve(std::vector<Edge> edges, int used, int best) {
    if (edges.empty()) return std::min(best, used);
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return best;
    }
    if (used + 1 >= best) return best;

    std::vector<std::pair<Vertex, int>> degree;
    for (const Edge& e : edges)
      for (Vertex x : {e.u, e.v}) {
        auto it = std::find_if(degree.begin(), degree.end(), [&](const auto& p) { return p.first == x; });
        if (it == degree.end()) {
          degree.emplace_back(x, 1);
        } else {
          ++it->second;
        }
      }
    auto pick = degree.front();
    for (const auto& p : degree)
      if (p.second > pick.second || (p.second == pick.second && p.first < pick.first)) pick = p;
    const Vertex v = pick.first;

    if (pick.second == 1) {
      // Every remaining edge is isolated: one vertex each.
      return std::min(best, used + static_cast<int>(edges.size()));
    }

    VertexSet neighbours;
    std::vector<Edge> without_v;
    for (const Edge& e : edges) {
      if (e.u == v) {
        neighbours.push_back(e.v);
      } else if (e.v == v) {
        neighbours.push_back(e.u);
      } else {
        without_v.push_back(e);
      }
    }
    neighbours = normalized(std::move(neighbours));
    best = solve(without_v, used + 1, best);
    if (exhausted_) return best;

    std::vector<Edge> without_n;
    for (const Edge& e : edges)
      if (!contains(neighbours, e.u) && !contains(neighbours, e.v)) without_n.push_back(e);
    return solve(std::move(without_n), used + static_cast<int>(neighbours.size()), best);
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultCoverBudget = 2'000'000;

/// Lexicographically smallest (as a sorted id list) minimum vertex cover, or
/// nullopt if the search budget is exhausted.
///
/// The minimum size k is found first; vertices are then decided in id order,
/// forcing v into the cover whenever a size-k cover containing the choices so
/// far still exists, and excluding it (which forces its neighbours) otherwise.
inline std::optional<VertexSet> minimum_vertex_cover(std::span<const Edge> input,
                                                     std::uint64_t budget = kDefaultCoverBudget) {
  std::vector<Edge> edges;
  for (const Edge& e : input) edges.push_back(make_edge(e.u, e.v));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) return VertexSet{};

  detail::CoverSolver solver(budget);
  const auto k = solver.minimum(edges);
  if (!k) return std::nullopt;

  VertexSet vertices;
  for (const Edge& e : edges) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  vertices = normalized(std::move(vertices));

  VertexSet chosen;
  VertexSet excluded;
  // Size of the best cover extending chosen/excluded, nullopt if infeasible.
  auto completion = [&](const VertexSet& in, const VertexSet& out) -> std::optional<int> {
    VertexSet forced = in;
    std::vector<Edge> rest;
    for (const Edge& e : edges) {
      const bool uin = contains(in, e.u), vin = contains(in, e.v);
      if (uin || vin) continue;
      const bool uout = contains(out, e.u), vout = contains(out, e.v);
      if (uout && vout) return std::nullopt;
      if (uout) {
        forced.push_back(e.v);
      } else if (vout) {
        forced.push_back(e.u);
      } else {
        rest.push_back(e);
      }
    }
    forced = normalized(std::move(forced));
    std::vector<Edge> residual;
    for (const Edge& e : rest)
      if (!contains(forced, e.u) && !contains(forced, e.v)) residual.push_back(e);
    const auto extra = solver.minimum(residual);
    if (!extra) throw Error("budget", "vertex cover search budget exhausted");
    return static_cast<int>(forced.size()) + *extra;
  };

  try {
    for (Vertex v : vertices) {
      VertexSet with = chosen;
      with.insert(std::lower_bound(with.begin(), with.end(), v), v);
      const auto size = completion(with, excluded);
      if (size && *size == *k) {
        chosen = std::move(with);
      } else {
        excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
      }
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return chosen;
}

/// Endpoints of a greedy maximal matching taken in sorted edge order.
inline VertexSet matching_cover(std::span<const Edge> input) {
  std::vector<Edge> edges;
  for (const Edge& e : input) edges.push_back(make_edge(e.u, e.v));
  std::sort(edges.begin(), edges.end());
  VertexSet matched;
  for (const Edge& e : edges) {
    if (contains(matched, e.u) || contains(matched, e.v)) continue;
    matched.insert(std::lower_bound(matched.begin(), matched.end(), e.u), e.u);
    matched.insert(std::lower_bound(matched.begin(), matched.end(), e.v), e.v);
  }
  return matched;
}

inline bool is_vertex_cover(std::span<const Edge> edges, std::span<const Vertex> cover) {
  for (const Edge& e : edges)
    if (!contains(cover, e.u) && !contains(cover, e.v)) return false;
  return true;
}

}  // namespace wcolkit
