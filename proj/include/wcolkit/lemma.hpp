#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wcolkit/graph.hpp"
#include "wcolkit/minor_model.hpp"
#include "wcolkit/numeric.hpp"
#include "wcolkit/vertex_cover.hpp"
#include "wcolkit/wcol.hpp"

namespace wcolkit {

struct IntersectionReport {
  bool holds = true;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;  // first (u, v), u < v, with disjoint WReach_d sets
};

/// Checks WReach_d[u] and WReach_d[v] meet for every pair u < v.
inline IntersectionReport check_wreach_intersections(const ReachTable& table) {
  IntersectionReport report;
  const int n = table.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!intersects(table.wreach(u), table.wreach(v))) {
        report.holds = false;
        report.failing_pair = std::pair{u, v};
        return report;
      }
  return report;
}

inline IntersectionReport check_wreach_intersections(const Graph& g, const VertexOrdering& order, int d) {
  return check_wreach_intersections(ReachTable(g, order, d));
}

/// sigma(uv) = WReach_d[u] n WReach_d[v] and rho(uv) = its order-maximum,
/// for each listed H-edge (normalized to u < v, in input order).
struct EdgeLabeling {
  std::vector<Edge> edges;
  std::vector<VertexSet> sigma;
  std::vector<Vertex> rho;
};

namespace detail {

inline std::vector<Edge> checked_hedges(const Graph& g, std::span<const Edge> hedges) {
  std::vector<Edge> edges;
  edges.reserve(hedges.size());
  for (const Edge& e : hedges) {
    if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v)) throw Error("malformed", "H-edge endpoint out of range");
    if (e.u == e.v) throw Error("malformed", "H-edge is a loop");
    edges.push_back(make_edge(e.u, e.v));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("malformed", "duplicate H-edge");
  return edges;
}

inline std::string edge_name(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace detail

/// Computes sigma and rho, and re-establishes sigma(uv) within
/// WReach_{2d}[rho(uv)]: a failure there would be an internal error.
inline EdgeLabeling label_edges(const Graph& g, const VertexOrdering& order, int d, std::span<const Edge> hedges) {
  const ReachTable reach(g, order, d);
  const ReachTable reach2(g, order, 2 * d);
  EdgeLabeling labeling;
  labeling.edges = detail::checked_hedges(g, hedges);
  for (const Edge& e : labeling.edges) {
    VertexSet sigma = set_intersection(reach.wreach(e.u), reach.wreach(e.v));
    if (sigma.empty())
      throw Error("precondition-violated", "WReach sets of H-edge " + detail::edge_name(e) + " are disjoint");
    const Vertex rho = *std::max_element(sigma.begin(), sigma.end(),
                                         [&](Vertex a, Vertex b) { return order.rank(a) < order.rank(b); });
    if (!is_subset(sigma, reach2.wreach(rho)))
      throw Error("internal-error", "sigma(" + detail::edge_name(e) + ") escapes WReach_2d[rho]");
    labeling.sigma.push_back(std::move(sigma));
    labeling.rho.push_back(rho);
  }
  return labeling;
}

/// Per host vertex w: X_w covers every H-edge with rho(uv) = w.
struct CoverFamily {
  std::vector<std::vector<Edge>> fiber;  // rho^{-1}(w)
  std::vector<VertexSet> cover;          // X_w
  std::vector<char> exact;               // 0 where the matching fallback was used

  int max_cover() const {
    std::size_t best = 0;
    for (const auto& x : cover) best = std::max(best, x.size());
    return static_cast<int>(best);
  }
};

struct CoverOptions {
  std::uint64_t budget = kDefaultCoverBudget;
  bool fallback_to_matching = false;
};

/// X_w is the lexicographically smallest minimum vertex cover of rho^{-1}(w).
/// Fiber endpoints lie in WReach^{-1}_d[w], so X_w does too; this is checked.
inline CoverFamily compute_covers(const EdgeLabeling& labeling, const Graph& g, const VertexOrdering& order, int d,
                                  const CoverOptions& options = {}) {
  const int n = g.vertex_count();
  CoverFamily family;
  family.fiber.assign(static_cast<std::size_t>(n), {});
  family.cover.assign(static_cast<std::size_t>(n), {});
  family.exact.assign(static_cast<std::size_t>(n), 1);
  for (std::size_t i = 0; i < labeling.edges.size(); ++i)
    family.fiber[static_cast<std::size_t>(labeling.rho[i])].push_back(labeling.edges[i]);

  const ReachTable reach(g, order, d);
  for (Vertex w = 0; w < n; ++w) {
    const auto& fiber = family.fiber[static_cast<std::size_t>(w)];
    if (fiber.empty()) continue;
    auto cover = minimum_vertex_cover(fiber, options.budget);
    if (!cover) {
      if (!options.fallback_to_matching)
        throw Error("budget", "exact cover of the fiber of " + std::to_string(w) + " exceeded the budget");
      cover = matching_cover(fiber);
      family.exact[static_cast<std::size_t>(w)] = 0;
    }
    if (!is_subset(*cover, reach.inverse(w)))
      throw Error("internal-error", "X_" + std::to_string(w) + " leaves WReach^{-1}_d");
    family.cover[static_cast<std::size_t>(w)] = std::move(*cover);
  }
  return family;
}

/// Outcome of the three structural claims on the constructed model.
struct ClaimReport {
  bool edges_ok = true;       // u in eta(v) or v in eta(u) for every H-edge
  bool radius_ok = true;      // G[eta(u)] connected with radius <= 2d
  bool congestion_ok = true;  // congestion <= s * max|X_w| + 1
  std::optional<Edge> edge_failure;
  std::optional<Vertex> radius_failure;
  std::optional<Vertex> congestion_failure;

  int s = 0;  // wcol_{2d}(G, order)
  int max_cover = 0;
  int observed_congestion = 0;
  int congestion_bound = 0;

  bool all_hold() const { return edges_ok && radius_ok && congestion_ok; }
};

struct BuildResult {
  MinorModel model;
  ClaimReport claims;
};

/// eta(u) = {u} u union of WReach^{-1}_d[w] over all w with u in X_w; the
/// model of H = (V(G), hedges) has depth 2d and its observed congestion.
///
/// The congestion bound carries a +1: u always lies in eta(u), also when u
/// belongs to no X_w, and that membership is not charged to any (w, X_w).
inline BuildResult build_model(const Graph& g, const VertexOrdering& order, int d, const CoverFamily& covers,
                               std::span<const Edge> hedges) {
  const int n = g.vertex_count();
  const auto edges = detail::checked_hedges(g, hedges);
  const ReachTable reach(g, order, d);

  std::vector<VertexSet> eta(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) eta[static_cast<std::size_t>(u)] = {u};
  for (Vertex w = 0; w < n; ++w)
    for (Vertex u : covers.cover[static_cast<std::size_t>(w)])
      eta[static_cast<std::size_t>(u)] = set_union(eta[static_cast<std::size_t>(u)], reach.inverse(w));

  BuildResult result;
  auto& model = result.model;
  model.host = g;
  model.pattern = Graph::from_edges(n, edges);
  model.branch_sets = eta;
  model.depth = 2 * d;

  std::vector<int> load(static_cast<std::size_t>(n), 0);
  for (const auto& s : eta)
    for (Vertex v : s) ++load[static_cast<std::size_t>(v)];
  int congestion = n > 0 ? 1 : 0;
  for (int c : load) congestion = std::max(congestion, c);
  model.congestion = std::max(congestion, 1);

  auto& claims = result.claims;
  claims.s = wcol_of_order(g, order, 2 * d).value;
  claims.max_cover = covers.max_cover();
  claims.observed_congestion = congestion;
  claims.congestion_bound = claims.s * claims.max_cover + 1;

  for (const Edge& e : edges) {
    if (!contains(eta[static_cast<std::size_t>(e.v)], e.u) && !contains(eta[static_cast<std::size_t>(e.u)], e.v)) {
      claims.edges_ok = false;
      claims.edge_failure = e;
      break;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    const auto r = radius(g, eta[static_cast<std::size_t>(u)]);
    if (!r || *r > 2 * d) {
      claims.radius_ok = false;
      claims.radius_failure = u;
      break;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (load[static_cast<std::size_t>(v)] > claims.congestion_bound) {
      claims.congestion_ok = false;
      claims.congestion_failure = v;
      break;
    }
  }
  return result;
}

/// Ramsey(a, b) <= C(a + b - 2, a - 1).
inline BigInt ramsey_upper_bound(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) throw Error("precondition-violated", "Ramsey arguments must be positive");
  return binomial(a + b - 2, static_cast<long long>(std::min<BigInt>(a - 1, b - 1)));
}

/// f(s, t, |Lambda|) = 2^s * |Lambda|^2 * Ramsey(2t, s^s), evaluated with the
/// binomial Ramsey upper bound. Only reported next to observed cover sizes.
inline BigInt theoretical_cover_bound(int s, int t, int lambda_size) {
  if (s < 2) throw Error("precondition-violated", "s must be at least 2");
  if (t < 1 || lambda_size < 1) throw Error("precondition-violated", "t and |Lambda| must be positive");
  const BigInt ss = power(BigInt(s), static_cast<unsigned long long>(s));
  return power(BigInt(2), static_cast<unsigned long long>(s)) * BigInt(lambda_size) * BigInt(lambda_size) *
         ramsey_upper_bound(BigInt(2 * t), ss);
}

/// Smallest t >= 1 such that g has no K_{t,t} subgraph.
inline int smallest_excluded_biclique(const Graph& g) {
  int t = 1;
  while (!ktt_free(g, t)) ++t;
  return t;
}

/// Everything the lemma pipeline produces for one (G, order, d, H-edges).
struct LemmaRun {
  EdgeLabeling labeling;
  CoverFamily covers;
  BuildResult build;
  ValidationReport validation;
  int t = 1;
  int lambda_size = 1;
  BigInt cover_bound;

  bool ok() const { return build.claims.all_hold() && validation.valid() && BigInt(covers.max_cover()) <= cover_bound; }
};

/// label_edges -> compute_covers -> build_model -> validate_model, plus the
/// theoretical cover bound with s = max(2, wcol_{2d}) and t the smallest
/// excluded biclique of H. |Lambda| is a caller parameter (default 1).
inline LemmaRun run_lemma_pipeline(const Graph& g, const VertexOrdering& order, int d, std::span<const Edge> hedges,
                                   int lambda_size = 1, const CoverOptions& options = {}) {
  LemmaRun run;
  run.labeling = label_edges(g, order, d, hedges);
  run.covers = compute_covers(run.labeling, g, order, d, options);
  run.build = build_model(g, order, d, run.covers, hedges);
  run.validation = validate_model(run.build.model);
  run.t = smallest_excluded_biclique(run.build.model.pattern);
  run.lambda_size = lambda_size;
  run.cover_bound = theoretical_cover_bound(std::max(2, run.build.claims.s), run.t, lambda_size);
  return run;
}

}  // namespace wcolkit
