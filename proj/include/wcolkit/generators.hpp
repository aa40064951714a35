#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wcolkit/error.hpp"
#include "wcolkit/graph.hpp"
#include "wcolkit/rng.hpp"

namespace wcolkit {

struct GeneratedGraph {
  std::string label;  // normalized spec, e.g. "kpath 2 15"
  Graph graph;
  std::optional<VertexOrdering> canonical;
  std::optional<int> treewidth_bound;
  bool ktree_order = false;  // canonical order attaches each vertex to a clique of size <= treewidth_bound
};

inline constexpr int kMaxGeneratedVertices = 1'000'000;

namespace detail {

inline void require_param(bool ok, const std::string& what) {
  if (!ok) throw Error("invalid-parameters", what);
}

inline void require_size(long long n) {
  require_param(n <= kMaxGeneratedVertices, "generated graph would exceed " + std::to_string(kMaxGeneratedVertices) +
                                                " vertices");
}

inline Graph clique_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline std::vector<std::pair<Vertex, Vertex>> clique_edges(int t) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < t; ++u)
    for (Vertex v = u + 1; v < t; ++v) edges.emplace_back(u, v);
  return edges;
}

inline Graph graph_from_pairs(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Graph g(n);
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

inline void gen_kpath_drops(int level, int t, int m, std::vector<int>& out) {
  if (level == t - 1) {
    out.push_back(t - 1);
    return;
  }
  for (int i = 0; i < m; ++i) gen_kpath_drops(level + 1, t, m, out);
  out.push_back(level);
}

}  // namespace detail

inline GeneratedGraph gen_path(int n) {
  detail::require_param(n >= 1, "path needs n >= 1");
  detail::require_size(n);
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return {"path " + std::to_string(n), std::move(g), VertexOrdering::identity(n), 1, true};
}

inline GeneratedGraph gen_cycle(int n) {
  detail::require_param(n >= 3, "cycle needs n >= 3");
  detail::require_size(n);
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return {"cycle " + std::to_string(n), std::move(g), VertexOrdering::identity(n), 2};
}

/// K_{1,n-1}: n vertices in total, centre 0.
inline GeneratedGraph gen_star(int n) {
  detail::require_param(n >= 1, "star needs n >= 1");
  detail::require_size(n);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return {"star " + std::to_string(n), std::move(g), VertexOrdering::identity(n), n > 1 ? 1 : 0, true};
}

/// w x h grid, vertex (col, row) = row * w + col; canonical order row-major.
inline GeneratedGraph gen_grid(int w, int h) {
  detail::require_param(w >= 1 && h >= 1, "grid needs w, h >= 1");
  detail::require_size(static_cast<long long>(w) * h);
  Graph g(w * h);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      const Vertex v = r * w + c;
      if (c + 1 < w) g.add_edge(v, v + 1);
      if (r + 1 < h) g.add_edge(v, v + w);
    }
  return {"grid " + std::to_string(w) + "x" + std::to_string(h), std::move(g), VertexOrdering::identity(w * h),
          std::min(w, h)};
}

inline GeneratedGraph gen_edgeless(int n) {
  detail::require_param(n >= 0, "edgeless needs n >= 0");
  detail::require_size(n);
  return {"edgeless " + std::to_string(n), Graph(n), VertexOrdering::identity(n), 0, true};
}

inline GeneratedGraph gen_clique(int n) {
  detail::require_param(n >= 1, "clique needs n >= 1");
  detail::require_size(n);
  return {"clique " + std::to_string(n), detail::clique_graph(n), VertexOrdering::identity(n), n - 1};
}

/// Starts from K_t; every t-clique created at height < h receives two new
/// vertices adjacent to it, and each new vertex v creates the t cliques
/// (Q - q) + v. For t = 1 this is the complete binary tree of height h.
inline GeneratedGraph gen_complete_ktree(int t, int h) {
  detail::require_param(t >= 1, "complete-ktree needs t >= 1");
  detail::require_param(h >= 0, "complete-ktree needs h >= 0");
  // t + 2 * sum_{i<h} (2t)^i vertices.
  long long total = t, layer = 2;
  for (int i = 0; i < h; ++i) {
    total += layer;
    detail::require_size(total);
    layer *= 2 * t;
  }
  auto pairs = detail::clique_edges(t);
  std::vector<std::vector<Vertex>> frontier;
  std::vector<Vertex> base;
  for (Vertex v = 0; v < t; ++v) base.push_back(v);
  frontier.push_back(base);
  Vertex next = t;
  for (int level = 0; level < h; ++level) {
    std::vector<std::vector<Vertex>> created;
    for (const auto& q : frontier)
      for (int child = 0; child < 2; ++child) {
        const Vertex v = next++;
        for (Vertex u : q) pairs.emplace_back(u, v);
        for (std::size_t drop = 0; drop < q.size(); ++drop) {
          std::vector<Vertex> nq;
          for (std::size_t j = 0; j < q.size(); ++j)
            if (j != drop) nq.push_back(q[j]);
          nq.push_back(v);
          created.push_back(std::move(nq));
        }
      }
    frontier = std::move(created);
  }
  const int n = next;
  return {"complete-ktree " + std::to_string(t) + " " + std::to_string(h), detail::graph_from_pairs(n, pairs),
          VertexOrdering::identity(n), t == 1 && n == 1 ? 0 : t, true};
}

/// Starts from K_t; each further vertex attaches to a t-clique chosen
/// uniformly among all t-cliques created so far.
inline GeneratedGraph gen_random_ktree(int t, int n, std::uint64_t seed) {
  detail::require_param(t >= 1, "random-ktree needs t >= 1");
  detail::require_param(n >= t, "random-ktree needs n >= t");
  detail::require_size(n);
  Rng rng(seed);
  auto pairs = detail::clique_edges(t);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> base;
  for (Vertex v = 0; v < t; ++v) base.push_back(v);
  cliques.push_back(base);
  for (Vertex v = t; v < n; ++v) {
    const auto q = cliques[rng.below(cliques.size())];
    for (Vertex u : q) pairs.emplace_back(u, v);
    for (std::size_t drop = 0; drop < q.size(); ++drop) {
      std::vector<Vertex> nq;
      for (std::size_t j = 0; j < q.size(); ++j)
        if (j != drop) nq.push_back(q[j]);
      nq.push_back(v);
      cliques.push_back(std::move(nq));
    }
  }
  return {"random-ktree " + std::to_string(t) + " " + std::to_string(n) + " " + std::to_string(seed),
          detail::graph_from_pairs(n, pairs), VertexOrdering::identity(n), n > t ? t : t - 1, true};
}

/// A t-path: a current t-clique K (kept oldest first) starts as K_t; each new
/// vertex is joined to all of K, then replaces K[drop]. The drop positions
/// run a mixed-radix counter: one block is m blocks of level 1 followed by
/// drop 0, recursively, down to level t-1 which is the single drop t-1. The
/// block is repeated `reps` times (default m + 1). Under the construction
/// order, wcol_d reaches binom(d+t, t) for d <= m.
inline GeneratedGraph gen_kpath(int t, int m, int reps = -1) {
  detail::require_param(t >= 1, "kpath needs t >= 1");
  detail::require_param(m >= 1, "kpath needs m >= 1");
  if (reps < 0) reps = m + 1;
  detail::require_param(reps >= 1, "kpath needs reps >= 1");
  long long block = 1;
  for (int level = t - 2; level >= 0; --level) {
    block = block * m + 1;
    detail::require_size(block);
  }
  detail::require_size(t + block * reps);

  std::vector<int> drops;
  for (int r = 0; r < reps; ++r) detail::gen_kpath_drops(0, t, m, drops);
  auto pairs = detail::clique_edges(t);
  std::vector<Vertex> current;
  for (Vertex v = 0; v < t; ++v) current.push_back(v);
  Vertex v = t;
  for (int drop : drops) {
    for (Vertex u : current) pairs.emplace_back(u, v);
    current.erase(current.begin() + drop);
    current.push_back(v++);
  }
  const int n = v;
  return {"kpath " + std::to_string(t) + " " + std::to_string(m) + " " + std::to_string(reps),
          detail::graph_from_pairs(n, pairs), VertexOrdering::identity(n), t, true};
}

/// Parses a family spec such as "path 5", "grid 3x4", "random-ktree 2 10 7".
inline GeneratedGraph gen_family(const std::string& spec) {
  std::istringstream in(spec);
  std::vector<std::string> tok;
  for (std::string s; in >> s;) tok.push_back(s);
  if (tok.empty()) throw Error("invalid-parameters", "empty family spec");

  auto number = [&](std::size_t i, long long limit = kMaxGeneratedVertices) -> long long {
    if (i >= tok.size()) throw Error("invalid-parameters", "'" + tok[0] + "' is missing a parameter");
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok[i].size()) throw Error("invalid-parameters", "not an integer: '" + tok[i] + "'");
    if (value < 0 || value > limit) throw Error("invalid-parameters", "parameter out of range: " + tok[i]);
    return value;
  };
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (tok.size() < lo + 1 || tok.size() > hi + 1)
      throw Error("invalid-parameters", "wrong number of parameters for '" + tok[0] + "'");
  };

  const std::string kind = tok[0];
  if (kind == "path" || kind == "cycle" || kind == "star" || kind == "edgeless" || kind == "clique") {
    arity(1, 1);
    const int n = static_cast<int>(number(1));
    if (kind == "path") return gen_path(n);
    if (kind == "cycle") return gen_cycle(n);
    if (kind == "star") return gen_star(n);
    if (kind == "edgeless") return gen_edgeless(n);
    return gen_clique(n);
  }
  if (kind == "grid") {
    std::string w = tok.size() > 1 ? tok[1] : "", h;
    if (tok.size() == 2) {
      const auto x = w.find('x');
      if (x == std::string::npos) throw Error("invalid-parameters", "grid expects WxH");
      h = w.substr(x + 1);
      w = w.substr(0, x);
    } else {
      arity(2, 2);
      h = tok[2];
    }
    tok = {"grid", w, h};
    return gen_grid(static_cast<int>(number(1)), static_cast<int>(number(2)));
  }
  if (kind == "complete-ktree") {
    arity(2, 2);
    return gen_complete_ktree(static_cast<int>(number(1)), static_cast<int>(number(2)));
  }
  if (kind == "random-ktree") {
    arity(3, 3);
    return gen_random_ktree(static_cast<int>(number(1)), static_cast<int>(number(2)),
                            static_cast<std::uint64_t>(number(3, std::numeric_limits<long long>::max())));
  }
  if (kind == "kpath") {
    arity(2, 3);
    return gen_kpath(static_cast<int>(number(1)), static_cast<int>(number(2)),
                     tok.size() > 3 ? static_cast<int>(number(3)) : -1);
  }
  throw Error("invalid-parameters", "unknown family '" + kind + "'");
}

}  // namespace wcolkit
