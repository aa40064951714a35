#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "wcolkit/graph.hpp"

namespace wcolkit {

/// Weak d-reachability sets of every vertex under a fixed order.
///
/// For every vertex u a BFS of depth d is run inside the vertices ranked at
/// or after u; each vertex v it reaches has u in WReach_d[v]. The BFS tree is
/// kept, so every membership carries a witness path whose vertices are all
/// ranked at or after u.
class ReachTable {
 public:
  ReachTable(const Graph& g, const VertexOrdering& order, int d) : d_(d) {
    if (d < 0) throw Error("precondition-violated", "negative reach distance");
    if (order.size() != g.vertex_count()) throw Error("invalid-ordering", "ordering does not cover the graph");
    const int n = g.vertex_count();
    trees_.resize(static_cast<std::size_t>(n));
    inverse_.resize(static_cast<std::size_t>(n));
    forward_.resize(static_cast<std::size_t>(n));

    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> touched;
    for (Vertex u = 0; u < n; ++u) {
      const int floor = order.rank(u);
      touched.assign({u});
      dist[static_cast<std::size_t>(u)] = 0;
      parent[static_cast<std::size_t>(u)] = u;
      for (std::size_t head = 0; head < touched.size(); ++head) {
        const Vertex x = touched[head];
        if (dist[static_cast<std::size_t>(x)] == d) continue;
        for (Vertex y : g.neighbors(x)) {
          if (order.rank(y) < floor || dist[static_cast<std::size_t>(y)] != -1) continue;
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(y)] = x;
          touched.push_back(y);
        }
      }
      auto& tree = trees_[static_cast<std::size_t>(u)];
      tree.reserve(touched.size());
      for (Vertex v : touched) {
        tree.emplace_back(v, parent[static_cast<std::size_t>(v)]);
        dist[static_cast<std::size_t>(v)] = -1;
      }
      std::sort(tree.begin(), tree.end());
      auto& inv = inverse_[static_cast<std::size_t>(u)];
      inv.reserve(tree.size());
      for (const auto& [v, p] : tree) {
        inv.push_back(v);
        forward_[static_cast<std::size_t>(v)].push_back(u);
      }
    }
    // forward_ lists were filled in increasing u, so they are already sorted.
  }

  int distance() const { return d_; }
  int vertex_count() const { return static_cast<int>(forward_.size()); }

  /// WReach_d[v], sorted by id.
  std::span<const Vertex> wreach(Vertex v) const { return forward_[static_cast<std::size_t>(v)]; }

  /// WReach^{-1}_d[u] = { v : u in WReach_d[v] }, sorted by id.
  std::span<const Vertex> inverse(Vertex u) const { return inverse_[static_cast<std::size_t>(u)]; }

  bool reaches(Vertex v, Vertex u) const { return contains(wreach(v), u); }

  /// A path v = p0, ..., pk = u of length <= d whose vertices all rank at or
  /// after u. Empty if u is not in WReach_d[v].
  std::vector<Vertex> witness_path(Vertex v, Vertex u) const {
    const auto& tree = trees_[static_cast<std::size_t>(u)];
    std::vector<Vertex> path;
    Vertex cur = v;
    while (true) {
      auto it = std::lower_bound(tree.begin(), tree.end(), std::pair<Vertex, Vertex>{cur, -1});
      if (it == tree.end() || it->first != cur) return {};
      path.push_back(cur);
      if (cur == u) return path;
      cur = it->second;
    }
  }

 private:
  int d_ = 0;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> trees_;  // root u -> (reached v, BFS parent)
  std::vector<VertexSet> inverse_;
  std::vector<VertexSet> forward_;
};

inline VertexSet weak_reachability(const Graph& g, const VertexOrdering& order, int d, Vertex v) {
  if (!g.valid_vertex(v)) throw Error("out-of-range", "vertex not in graph");
  const ReachTable table(g, order, d);
  const auto s = table.wreach(v);
  return {s.begin(), s.end()};
}

inline VertexSet inverse_weak_reachability(const Graph& g, const VertexOrdering& order, int d, Vertex w) {
  if (!g.valid_vertex(w)) throw Error("out-of-range", "vertex not in graph");
  const ReachTable table(g, order, d);
  const auto s = table.inverse(w);
  return {s.begin(), s.end()};
}

struct WcolResult {
  int value = 0;
  VertexOrdering order;
  Vertex witness_vertex = -1;  // smallest id attaining the maximum
  bool exact = false;
};

/// max_v |WReach_d[v]| under `order`.
inline WcolResult wcol_of_order(const Graph& g, const VertexOrdering& order, int d) {
  const ReachTable table(g, order, d);
  WcolResult result{0, order, -1, false};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int size = static_cast<int>(table.wreach(v).size());
    if (size > result.value) {
      result.value = size;
      result.witness_vertex = v;
    }
  }
  return result;
}

/// Smallest-last order: repeatedly delete a minimum-degree vertex (smallest
/// id on ties); deleted vertices fill the order from the back.
inline VertexOrdering degeneracy_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(g.degree(v), v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int pos = n - 1; pos >= 0; --pos) {
    const auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = 1;
    perm[static_cast<std::size_t>(pos)] = v;
    for (Vertex w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      queue.erase({degree[static_cast<std::size_t>(w)], w});
      queue.emplace(--degree[static_cast<std::size_t>(w)], w);
    }
  }
  return VertexOrdering(std::move(perm));
}

/// Degeneracy of g (max over the smallest-last sequence of the deleted degree).
inline int degeneracy(const Graph& g) {
  const auto order = degeneracy_order(g);
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int back = 0;
    for (Vertex w : g.neighbors(v))
      if (order.before(w, v)) ++back;
    best = std::max(best, back);
  }
  return best;
}

/// Min-degree elimination order, plus the caller's canonical order when one
/// is supplied; the better value wins (ties keep the degeneracy order).
inline WcolResult wcol_heuristic(const Graph& g, int d, const VertexOrdering* canonical = nullptr) {
  WcolResult best = wcol_of_order(g, degeneracy_order(g), d);
  if (canonical != nullptr) {
    WcolResult other = wcol_of_order(g, *canonical, d);
    if (other.value < best.value) best = std::move(other);
  }
  best.exact = false;
  return best;
}

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

namespace detail {

/// Left-to-right branch and bound over order prefixes.
///
/// Once vertex u is placed, every vertex ranked after it is unplaced or
/// placed later, so u belongs to WReach_d[v] exactly when v is reachable from
/// u by a path of length <= d avoiding the vertices placed before u. Placing u
/// therefore adds one to the counter of every unplaced vertex within distance
/// d of u in G minus the prefix, and u's own counter becomes final. The
/// maximum counter is a lower bound for every completion.
class OrderSearch {
 public:
  OrderSearch(const Graph& g, int d, std::uint64_t budget)
      : g_(g), d_(d), n_(g.vertex_count()), budget_(budget),
        placed_(static_cast<std::size_t>(n_), 0), counts_(static_cast<std::size_t>(n_), 1),
        dist_(static_cast<std::size_t>(n_), -1) {}

  /// Searches for an order of value strictly below `incumbent`.
  void run(int incumbent, int lower_bound) {
    best_ = incumbent;
    lower_bound_ = lower_bound;
    if (best_ > lower_bound_) recurse();
  }

  int best_value() const { return best_; }
  const std::optional<std::vector<Vertex>>& best_order() const { return best_order_; }
  bool completed() const { return !exhausted_; }

 private:
  void recurse() {
    if (exhausted_ || best_ <= lower_bound_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (static_cast<int>(prefix_.size()) == n_) {
      int value = 0;
      for (int c : counts_) value = std::max(value, c);
      if (value < best_) {
        best_ = value;
        best_order_ = prefix_;
      }
      return;
    }
    for (Vertex u = 0; u < n_; ++u) {
      if (placed_[static_cast<std::size_t>(u)] || counts_[static_cast<std::size_t>(u)] >= best_) continue;
      const auto reached = reach_from(u);
      bool ok = true;
      for (Vertex v : reached)
        if (++counts_[static_cast<std::size_t>(v)] >= best_) ok = false;
      if (ok) {
        placed_[static_cast<std::size_t>(u)] = 1;
        prefix_.push_back(u);
        recurse();
        prefix_.pop_back();
        placed_[static_cast<std::size_t>(u)] = 0;
      }
      for (Vertex v : reached) --counts_[static_cast<std::size_t>(v)];
      if (exhausted_ || best_ <= lower_bound_) return;
    }
  }

  /// Unplaced vertices other than u within distance d of u in G - prefix.
  std::vector<Vertex> reach_from(Vertex u) {
    std::vector<Vertex> seen{u};
    dist_[static_cast<std::size_t>(u)] = 0;
    for (std::size_t head = 0; head < seen.size(); ++head) {
      const Vertex x = seen[head];
      if (dist_[static_cast<std::size_t>(x)] == d_) continue;
      for (Vertex y : g_.neighbors(x)) {
        if (placed_[static_cast<std::size_t>(y)] || dist_[static_cast<std::size_t>(y)] != -1) continue;
        dist_[static_cast<std::size_t>(y)] = dist_[static_cast<std::size_t>(x)] + 1;
        seen.push_back(y);
      }
    }
    for (Vertex v : seen) dist_[static_cast<std::size_t>(v)] = -1;
    seen.erase(seen.begin());
    return seen;
  }

  const Graph& g_;
  int d_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  int best_ = 0;
  int lower_bound_ = 0;
  std::vector<char> placed_;
  std::vector<int> counts_;
  std::vector<int> dist_;
  std::vector<Vertex> prefix_;
  std::optional<std::vector<Vertex>> best_order_;
};

}  // namespace detail

/// Exact wcol_d(G) with a witnessing order. Starts from the heuristic value
/// and uses degeneracy + 1 (for d >= 1) as a lower bound; on budget
/// exhaustion the best order found so far is returned with exact = false.
inline WcolResult wcol_exact(const Graph& g, int d, std::uint64_t node_budget = kDefaultNodeBudget) {
  if (d < 0) throw Error("precondition-violated", "negative reach distance");
  WcolResult incumbent = wcol_heuristic(g, d);
  if (g.vertex_count() == 0) {
    incumbent.exact = true;
    return incumbent;
  }
  const int lower = d >= 1 ? degeneracy(g) + 1 : 1;
  detail::OrderSearch search(g, d, node_budget);
  search.run(incumbent.value, lower);
  WcolResult result = search.best_order() ? wcol_of_order(g, VertexOrdering(*search.best_order()), d)
                                          : std::move(incumbent);
  result.exact = search.completed();
  return result;
}

}  // namespace wcolkit
