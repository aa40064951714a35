#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcolkit/graph.hpp"
#include "wcolkit/rng.hpp"
#include "wcolkit/wcol.hpp"

namespace wcolkit {

/// Depth sentinel: only connectivity of branch sets is checked.
inline constexpr int kUnboundedDepth = -1;

/// A model of `pattern` (H) in `host` (G): branch set per H-vertex, with the
/// congestion and depth it claims. H is stored explicitly; H-non-edges whose
/// branch sets touch are allowed.
struct MinorModel {
  Graph pattern;
  Graph host;
  std::vector<VertexSet> branch_sets;
  int congestion = 1;
  int depth = 0;
};

struct ValidationReport {
  bool radius_ok = true;
  bool congestion_ok = true;
  bool touch_ok = true;

  std::optional<Vertex> radius_failure;  // H-vertex whose branch set is too wide or disconnected
  std::optional<int> failing_radius;     // nullopt inside a failure means disconnected
  std::optional<Vertex> congestion_failure;  // G-vertex lying in too many branch sets
  int failing_congestion = 0;
  std::optional<Edge> touch_failure;  // H-edge whose branch sets do not touch

  int observed_congestion = 0;
  int observed_depth = 0;

  bool valid() const { return radius_ok && congestion_ok && touch_ok; }
};

namespace detail {

inline std::vector<VertexSet> checked_branch_sets(const MinorModel& m) {
  const int h = m.pattern.vertex_count();
  if (static_cast<int>(m.branch_sets.size()) != h)
    throw Error("malformed", "model maps " + std::to_string(m.branch_sets.size()) + " of " + std::to_string(h) +
                                 " H-vertices");
  std::vector<VertexSet> sets;
  sets.reserve(m.branch_sets.size());
  for (int u = 0; u < h; ++u) {
    VertexSet s = normalized(m.branch_sets[static_cast<std::size_t>(u)]);
    if (s.empty()) throw Error("malformed", "empty branch set for H-vertex " + std::to_string(u));
    for (Vertex v : s)
      if (!m.host.valid_vertex(v))
        throw Error("malformed", "branch set of " + std::to_string(u) + " leaves the host graph");
    sets.push_back(std::move(s));
  }
  return sets;
}

}  // namespace detail

/// Checks radius/depth, congestion and edge touching. Counterexamples are the
/// smallest ids failing each condition.
inline ValidationReport validate_model(const MinorModel& m) {
  const auto sets = detail::checked_branch_sets(m);
  ValidationReport report;

  for (Vertex u = 0; u < m.pattern.vertex_count(); ++u) {
    const auto r = radius(m.host, sets[static_cast<std::size_t>(u)]);
    const bool ok = r.has_value() && (m.depth == kUnboundedDepth || *r <= m.depth);
    if (r) report.observed_depth = std::max(report.observed_depth, *r);
    if (!ok && report.radius_ok) {
      report.radius_ok = false;
      report.radius_failure = u;
      report.failing_radius = r;
    }
  }

  std::vector<int> load(static_cast<std::size_t>(m.host.vertex_count()), 0);
  for (const auto& s : sets)
    for (Vertex v : s) ++load[static_cast<std::size_t>(v)];
  for (Vertex v = 0; v < m.host.vertex_count(); ++v) {
    const int c = load[static_cast<std::size_t>(v)];
    report.observed_congestion = std::max(report.observed_congestion, c);
    if (c > m.congestion && report.congestion_ok) {
      report.congestion_ok = false;
      report.congestion_failure = v;
      report.failing_congestion = c;
    }
  }

  for (const Edge& e : m.pattern.edges()) {
    if (!touch(m.host, sets[static_cast<std::size_t>(e.u)], sets[static_cast<std::size_t>(e.v)])) {
      report.touch_ok = false;
      report.touch_failure = e;
      break;
    }
  }
  return report;
}

/// gamma(u): the order-minimal vertex of the branch set of u.
inline std::vector<Vertex> branch_minima(const MinorModel& m, const VertexOrdering& host_order) {
  const auto sets = detail::checked_branch_sets(m);
  std::vector<Vertex> gamma;
  gamma.reserve(sets.size());
  for (const auto& s : sets)
    gamma.push_back(*std::min_element(s.begin(), s.end(),
                                      [&](Vertex a, Vertex b) { return host_order.rank(a) < host_order.rank(b); }));
  return gamma;
}

/// Orders H-vertices by the host rank of gamma(u), ties by H-vertex id.
inline VertexOrdering pull_back_order(const MinorModel& m, const VertexOrdering& host_order) {
  if (host_order.size() != m.host.vertex_count())
    throw Error("invalid-ordering", "host ordering does not cover the host graph");
  const auto gamma = branch_minima(m, host_order);
  std::vector<Vertex> perm = all_vertices(m.pattern);
  std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) {
    return host_order.rank(gamma[static_cast<std::size_t>(a)]) < host_order.rank(gamma[static_cast<std::size_t>(b)]);
  });
  return VertexOrdering(std::move(perm));
}

struct EdgeWalk {
  Edge edge;                  // H-edge xy
  std::vector<Vertex> path;   // gamma(x) ... gamma(y) inside eta(x) u eta(y)
  int length() const { return static_cast<int>(path.size()) - 1; }
};

struct TransferReport {
  int k = 0;
  int d = 0;
  int lhs = 0;  // wcol_d(H, pulled-back order)
  int rhs = 0;  // k * wcol_{(4k+1)d}(G, order)
  int host_value = 0;
  bool holds = false;
  Vertex witness = -1;     // H-vertex attaining lhs
  VertexSet witness_reach; // its weak reachability set in H
  VertexOrdering pulled;
  std::vector<EdgeWalk> walks;
  int max_walk_length = 0;
  bool walks_ok = true;

  bool ok() const { return holds && walks_ok; }
};

/// Evaluates wcol_d(H, pulled) <= k * wcol_{(4k+1)d}(G, order) for a model
/// validated at congestion k and depth k, and builds for every H-edge xy a
/// gamma(x)-gamma(y) path inside eta(x) u eta(y), which must have length at
/// most 4k+1.
inline TransferReport check_transfer_inequality(const MinorModel& m, const VertexOrdering& host_order, int k, int d) {
  if (k < 1) throw Error("precondition-violated", "k must be positive");
  if (d < 0) throw Error("precondition-violated", "negative reach distance");
  MinorModel at_k = m;
  at_k.congestion = k;
  at_k.depth = k;
  const auto validation = validate_model(at_k);
  if (!validation.valid()) throw Error("invalid-model", "model is not valid at congestion " + std::to_string(k) +
                                                            " and depth " + std::to_string(k));

  TransferReport report;
  report.k = k;
  report.d = d;
  report.pulled = pull_back_order(m, host_order);
  const auto lhs = wcol_of_order(m.pattern, report.pulled, d);
  report.lhs = lhs.value;
  report.witness = lhs.witness_vertex;
  if (report.witness >= 0) report.witness_reach = weak_reachability(m.pattern, report.pulled, d, report.witness);
  report.host_value = wcol_of_order(m.host, host_order, (4 * k + 1) * d).value;
  report.rhs = k * report.host_value;
  report.holds = report.lhs <= report.rhs;

  const auto sets = detail::checked_branch_sets(m);
  const auto gamma = branch_minima(m, host_order);
  for (const Edge& e : m.pattern.edges()) {
    const VertexSet region = set_union(sets[static_cast<std::size_t>(e.u)], sets[static_cast<std::size_t>(e.v)]);
    EdgeWalk walk{e, shortest_path_within(m.host, region, gamma[static_cast<std::size_t>(e.u)],
                                          gamma[static_cast<std::size_t>(e.v)])};
    if (walk.path.empty() || walk.length() > 4 * k + 1) report.walks_ok = false;
    report.max_walk_length = std::max(report.max_walk_length, walk.length());
    report.walks.push_back(std::move(walk));
  }
  return report;
}

struct RandomModelOptions {
  int branch_sets = -1;            // -1: uniform in [1, n]
  double grow_probability = 0.6;   // chance to absorb each discovered neighbour
  bool seed_every_vertex = false;  // branch set i is grown from vertex i
};

/// Random congestion-k depth-k model: each branch set is a randomized BFS
/// ball of radius <= k around a seed, never entering a vertex already in k
/// sets. H has one vertex per branch set and an edge wherever two sets touch.
inline MinorModel random_model(const Graph& g, int k, std::uint64_t seed, const RandomModelOptions& options = {}) {
  if (k < 1) throw Error("precondition-violated", "k must be positive");
  const int n = g.vertex_count();
  Rng rng(seed);
  MinorModel model;
  model.host = g;
  model.congestion = k;
  model.depth = k;
  if (n == 0) return model;

  const int wanted = options.seed_every_vertex ? n
                     : options.branch_sets > 0 ? options.branch_sets
                                               : rng.between(1, n);
  std::vector<int> load(static_cast<std::size_t>(n), 0);
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < wanted; ++i) {
    Vertex root = -1;
    if (options.seed_every_vertex) {
      if (load[static_cast<std::size_t>(i)] < k) root = i;
    } else {
      std::vector<Vertex> open;
      for (Vertex v = 0; v < n; ++v)
        if (load[static_cast<std::size_t>(v)] < k) open.push_back(v);
      if (open.empty()) break;
      root = open[rng.below(open.size())];
    }
    if (root < 0) continue;

    const int reach = rng.between(0, k);
    VertexSet members{root};
    in_set[static_cast<std::size_t>(root)] = 1;
    std::vector<Vertex> layer{root};
    for (int depth = 0; depth < reach && !layer.empty(); ++depth) {
      std::vector<Vertex> next;
      for (Vertex x : layer)
        for (Vertex y : g.neighbors(x)) {
          if (in_set[static_cast<std::size_t>(y)] || load[static_cast<std::size_t>(y)] >= k) continue;
          if (!rng.chance(options.grow_probability)) continue;
          in_set[static_cast<std::size_t>(y)] = 1;
          members.push_back(y);
          next.push_back(y);
        }
      layer = std::move(next);
    }
    for (Vertex v : members) {
      in_set[static_cast<std::size_t>(v)] = 0;
      ++load[static_cast<std::size_t>(v)];
    }
    model.branch_sets.push_back(normalized(std::move(members)));
  }

  const int h = static_cast<int>(model.branch_sets.size());
  model.pattern = Graph(h);
  for (int a = 0; a < h; ++a)
    for (int b = a + 1; b < h; ++b)
      if (touch(g, model.branch_sets[static_cast<std::size_t>(a)], model.branch_sets[static_cast<std::size_t>(b)]))
        model.pattern.add_edge(a, b);
  return model;
}

/// H = G with singleton branch sets.
inline MinorModel identity_model(const Graph& g) {
  MinorModel m;
  m.pattern = uncolored(g);
  m.host = g;
  for (Vertex v = 0; v < g.vertex_count(); ++v) m.branch_sets.push_back({v});
  m.congestion = 1;
  m.depth = 0;
  return m;
}

}  // namespace wcolkit
