#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wcolkit/error.hpp"

namespace wcolkit {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Edge with endpoints swapped so that u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool intersects(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

inline bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

/// Simple undirected graph on vertices 0..n-1 with optional named vertex
/// colors. A vertex may carry any number of colors.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(check_count(n))) {}

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// Inserts uv; returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw Error("malformed", "loop at vertex " + std::to_string(u));
    auto& nu = adjacency_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adjacency_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return false;
    return contains(neighbors(u), v);
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.push_back({u, v});
    return out;
  }

  void add_color(const std::string& name, Vertex v) {
    require_vertex(v);
    auto& set = colors_[name];
    auto it = std::lower_bound(set.begin(), set.end(), v);
    if (it == set.end() || *it != v) set.insert(it, v);
  }

  void set_color(const std::string& name, VertexSet members) {
    members = normalized(std::move(members));
    for (Vertex v : members) require_vertex(v);
    colors_[name] = std::move(members);
  }

  void clear_colors() { colors_.clear(); }

  /// Color name -> members. Colors absent from the map denote empty sets.
  const std::map<std::string, VertexSet>& colors() const { return colors_; }

  bool has_color(const std::string& name, Vertex v) const {
    auto it = colors_.find(name);
    return it != colors_.end() && contains(it->second, v);
  }

  bool operator==(const Graph&) const = default;

 private:
  static int check_count(int n) {
    if (n < 0) throw Error("malformed", "negative vertex count");
    return n;
  }

  void require_vertex(Vertex v) const {
    if (!valid_vertex(v))
      throw Error("malformed", "vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
  std::map<std::string, VertexSet> colors_;
};

/// A total order on the vertices 0..n-1, stored with its inverse.
class VertexOrdering {
 public:
  VertexOrdering() = default;

  explicit VertexOrdering(std::vector<Vertex> perm) : perm_(std::move(perm)), rank_(perm_.size(), -1) {
    const int n = size();
    for (int pos = 0; pos < n; ++pos) {
      const Vertex v = perm_[static_cast<std::size_t>(pos)];
      if (v < 0 || v >= n || rank_[static_cast<std::size_t>(v)] != -1)
        throw Error("invalid-ordering", "not a permutation of 0.." + std::to_string(n - 1));
      rank_[static_cast<std::size_t>(v)] = pos;
    }
  }

  static VertexOrdering identity(int n) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    return VertexOrdering(std::move(perm));
  }

  int size() const { return static_cast<int>(perm_.size()); }
  Vertex at(int position) const { return perm_[static_cast<std::size_t>(position)]; }
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
  bool before(Vertex a, Vertex b) const { return rank(a) < rank(b); }
  std::span<const Vertex> perm() const { return perm_; }

  bool operator==(const VertexOrdering& other) const { return perm_ == other.perm_; }

 private:
  std::vector<Vertex> perm_;
  std::vector<int> rank_;
};

namespace detail {

inline std::vector<char> membership_mask(int n, std::span<const Vertex> set) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : set) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

inline void require_subset(const Graph& g, std::span<const Vertex> set) {
  for (Vertex v : set)
    if (!g.valid_vertex(v)) throw Error("out-of-range", "vertex " + std::to_string(v) + " not in graph");
}

/// BFS distances from `source` inside the vertices where `allowed` is set,
/// stopping at `max_depth` (negative = unbounded). Unreached vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<char>& allowed,
                                      int max_depth = -1) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  if (!allowed[static_cast<std::size_t>(source)]) return dist;
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    const int dx = dist[static_cast<std::size_t>(x)];
    if (max_depth >= 0 && dx == max_depth) continue;
    for (Vertex y : g.neighbors(x)) {
      if (!allowed[static_cast<std::size_t>(y)] || dist[static_cast<std::size_t>(y)] != -1) continue;
      dist[static_cast<std::size_t>(y)] = dx + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace detail

/// Radius of G[A]: min over centres u in A of the max BFS distance inside
/// G[A]. std::nullopt stands for "infinite" (G[A] disconnected).
inline std::optional<int> radius(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) throw Error("empty-set", "radius of an empty vertex set");
  detail::require_subset(g, set);
  const auto allowed = detail::membership_mask(g.vertex_count(), set);
  std::optional<int> best;
  for (Vertex centre : set) {
    const auto dist = detail::bfs_distances(g, centre, allowed);
    int ecc = 0;
    bool connected = true;
    for (Vertex v : set) {
      const int dv = dist[static_cast<std::size_t>(v)];
      if (dv < 0) {
        connected = false;
        break;
      }
      ecc = std::max(ecc, dv);
    }
    if (!connected) return std::nullopt;
    if (!best || ecc < *best) best = ecc;
  }
  return best;
}

/// Eccentricity of `centre` inside G[A], nullopt if some vertex is unreachable.
inline std::optional<int> eccentricity_within(const Graph& g, std::span<const Vertex> set, Vertex centre) {
  const auto allowed = detail::membership_mask(g.vertex_count(), set);
  const auto dist = detail::bfs_distances(g, centre, allowed);
  int ecc = 0;
  for (Vertex v : set) {
    if (dist[static_cast<std::size_t>(v)] < 0) return std::nullopt;
    ecc = std::max(ecc, dist[static_cast<std::size_t>(v)]);
  }
  return ecc;
}

/// True iff A and B share a vertex or some a in A is adjacent to some b in B.
inline bool touch(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  detail::require_subset(g, a);
  detail::require_subset(g, b);
  const auto in_b = detail::membership_mask(g.vertex_count(), b);
  for (Vertex x : a) {
    if (in_b[static_cast<std::size_t>(x)]) return true;
    for (Vertex y : g.neighbors(x))
      if (in_b[static_cast<std::size_t>(y)]) return true;
  }
  return false;
}

/// True iff every u-v path of length at most d meets S. Holds trivially when
/// u or v lies in S.
inline bool d_separated(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> separator, int d) {
  if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw Error("out-of-range", "endpoint not in graph");
  const VertexSet sep = normalized({separator.begin(), separator.end()});
  if (contains(sep, u) || contains(sep, v)) return true;
  std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count()), 1);
  for (Vertex s : sep)
    if (g.valid_vertex(s)) allowed[static_cast<std::size_t>(s)] = 0;
  const auto dist = detail::bfs_distances(g, u, allowed, d);
  return dist[static_cast<std::size_t>(v)] < 0;
}

/// A K_{t,t} subgraph: two disjoint t-sets with all cross pairs adjacent.
struct Biclique {
  VertexSet left;
  VertexSet right;
};

/// Searches t-subsets L (vertices of degree >= t, in id order) keeping the
/// running common neighbourhood; prunes once it drops below t.
inline std::optional<Biclique> find_ktt(const Graph& g, int t) {
  if (t < 1) throw Error("precondition-violated", "t must be positive");
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= t) candidates.push_back(v);

  VertexSet chosen;
  std::optional<Biclique> found;
  auto search = [&](auto&& self, std::size_t from, const VertexSet& common) -> bool {
    if (static_cast<int>(chosen.size()) == t) {
      found = Biclique{chosen, VertexSet(common.begin(), common.begin() + t)};
      return true;
    }
    const std::size_t need = static_cast<std::size_t>(t) - chosen.size();
    for (std::size_t i = from; i + need <= candidates.size(); ++i) {
      const Vertex v = candidates[i];
      const auto nv = g.neighbors(v);
      VertexSet next = chosen.empty() ? VertexSet(nv.begin(), nv.end()) : set_intersection(common, nv);
      if (static_cast<int>(next.size()) < t) continue;
      chosen.push_back(v);
      if (self(self, i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  search(search, 0, {});
  return found;
}

inline bool ktt_free(const Graph& g, int t) { return !find_ktt(g, t).has_value(); }

/// G with a new vertex n adjacent to every existing vertex. Colors are kept;
/// the new vertex carries none.
inline Graph add_universal(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n + 1);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (Vertex v = 0; v < n; ++v) out.add_edge(v, n);
  for (const auto& [name, members] : g.colors()) out.set_color(name, members);
  return out;
}

/// p-blowup: vertex i becomes the clique p*i .. p*i+p-1, copies of adjacent
/// vertices are pairwise adjacent, copies inherit colors.
inline Graph blowup(const Graph& g, int p) {
  if (p < 1) throw Error("precondition-violated", "blowup factor must be positive");
  const int n = g.vertex_count();
  Graph out(n * p);
  for (Vertex i = 0; i < n; ++i)
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b) out.add_edge(p * i + a, p * i + b);
  for (const Edge& e : g.edges())
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) out.add_edge(p * e.u + a, p * e.v + b);
  for (const auto& [name, members] : g.colors()) {
    VertexSet copies;
    for (Vertex v : members)
      for (int a = 0; a < p; ++a) copies.push_back(p * v + a);
    out.set_color(name, std::move(copies));
  }
  return out;
}

/// G[keep] relabelled so that the i-th smallest kept vertex becomes i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  const VertexSet kept = normalized({keep.begin(), keep.end()});
  detail::require_subset(g, kept);
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  Graph out(static_cast<int>(kept.size()));
  for (Vertex u : kept)
    for (Vertex v : g.neighbors(u))
      if (u < v && index[static_cast<std::size_t>(v)] >= 0)
        out.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
  for (const auto& [name, members] : g.colors()) {
    VertexSet mapped;
    for (Vertex v : members)
      if (index[static_cast<std::size_t>(v)] >= 0) mapped.push_back(index[static_cast<std::size_t>(v)]);
    if (!mapped.empty()) out.set_color(name, std::move(mapped));
  }
  return out;
}

/// Same vertices and edges, no colors.
inline Graph uncolored(const Graph& g) {
  Graph out = g;
  out.clear_colors();
  return out;
}

inline VertexSet all_vertices(const Graph& g) {
  VertexSet out(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

/// Shortest path from `from` to `to` using only vertices of `within`; empty
/// when none exists. The path is listed from `from` to `to`.
inline std::vector<Vertex> shortest_path_within(const Graph& g, std::span<const Vertex> within, Vertex from,
                                                Vertex to) {
  const auto allowed = detail::membership_mask(g.vertex_count(), within);
  if (!allowed[static_cast<std::size_t>(from)] || !allowed[static_cast<std::size_t>(to)]) return {};
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<Vertex> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (Vertex y : g.neighbors(x)) {
      if (!allowed[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace wcolkit
