#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcolkit/formula.hpp"
#include "wcolkit/graph.hpp"

namespace wcolkit {

/// Evaluates one formula on one colored graph. Colors the graph does not
/// carry are empty.
class Evaluator {
 public:
  Evaluator(const Formula& phi, const Graph& g)
      : phi_(phi), n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    for (const Edge& e : g.edges()) {
      adj_[index(e.u, e.v)] = 1;
      adj_[index(e.v, e.u)] = 1;
    }
    for (const auto& name : phi.colors()) {
      std::vector<char> mask(static_cast<std::size_t>(n_), 0);
      auto it = g.colors().find(name);
      if (it != g.colors().end())
        for (Vertex v : it->second) mask[static_cast<std::size_t>(v)] = 1;
      masks_.emplace(name, std::move(mask));
    }
    slots_.assign(static_cast<std::size_t>(phi.slot_count()), 0);
  }

  bool operator()(Vertex u, Vertex v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw Error("out-of-range", "evaluation vertex not in graph");
    slots_[0] = u;
    slots_[1] = v;
    return eval(phi_.root());
  }

  int vertex_count() const { return n_; }

 private:
  using Kind = Formula::Kind;

  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  Vertex value(const Var& v) const { return slots_[static_cast<std::size_t>(v.slot)]; }

  bool eval(const Formula::Node& node) {
    switch (node.kind) {
      case Kind::True:
        return true;
      case Kind::False:
        return false;
      case Kind::Adj:
        return adj_[index(value(node.a), value(node.b))] != 0;
      case Kind::Eq:
        return value(node.a) == value(node.b);
      case Kind::Color:
        return masks_.at(node.color)[static_cast<std::size_t>(value(node.a))] != 0;
      case Kind::Not:
        return !eval(*node.left);
      case Kind::And:
        return eval(*node.left) && eval(*node.right);
      case Kind::Or:
        return eval(*node.left) || eval(*node.right);
      case Kind::Imp:
        return !eval(*node.left) || eval(*node.right);
      case Kind::Iff:
        return eval(*node.left) == eval(*node.right);
      case Kind::Exists:
      case Kind::Forall: {
        const bool want = node.kind == Kind::Exists;
        auto& slot = slots_[static_cast<std::size_t>(node.a.slot)];
        const Vertex saved = slot;
        bool result = !want;
        for (Vertex w = 0; w < n_; ++w) {
          slot = w;
          if (eval(*node.left) == want) {
            result = want;
            break;
          }
        }
        slot = saved;
        return result;
      }
    }
    return false;
  }

  Formula phi_;
  int n_;
  std::vector<char> adj_;
  std::map<std::string, std::vector<char>> masks_;
  std::vector<Vertex> slots_;
};

inline bool eval_formula(const Formula& phi, const Graph& g, Vertex u, Vertex v) { return Evaluator(phi, g)(u, v); }

struct SymmetryReport {
  bool symmetric = true;
  std::optional<std::pair<Vertex, Vertex>> counterexample;  // first u < v with phi(u,v) != phi(v,u)
};

inline SymmetryReport check_symmetric(const Formula& phi, const Graph& g) {
  Evaluator eval(phi, g);
  SymmetryReport report;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (eval(u, v) != eval(v, u)) {
        report.symmetric = false;
        report.counterexample = std::pair{u, v};
        return report;
      }
  return report;
}

/// Uncolored graph on V(g) with uv an edge iff phi(u, v) holds, u != v.
inline Graph apply_interpretation(const Formula& phi, const Graph& g) {
  const int n = g.vertex_count();
  Evaluator eval(phi, g);
  Graph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool forward = eval(u, v);
      if (forward != eval(v, u))
        throw Error("asymmetric",
                    "formula is not symmetric on the pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
      if (forward) out.add_edge(u, v);
    }
  return out;
}

/// Color name -> members, for the colors of a transduction.
using Expansion = std::map<std::string, VertexSet>;

struct Transduction {
  std::vector<std::string> colors;
  Formula formula;

  Transduction() = default;
  Transduction(std::vector<std::string> c, Formula f) : colors(std::move(c)), formula(std::move(f)) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (const auto& name : formula.colors())
      if (!std::binary_search(colors.begin(), colors.end(), name))
        throw Error("malformed", "formula uses color '" + name + "' outside the transduction's colors");
  }
};

/// g with the colors of `expansion` assigned (replacing any same-named
/// colors g already carries).
inline Graph expand(const Graph& g, const Expansion& expansion) {
  Graph out = g;
  for (const auto& [name, members] : expansion) out.set_color(name, members);
  return out;
}

/// Induced subgraph on `keep` of phi evaluated on the expansion of g.
/// Kept vertices are relabelled 0.. in increasing id order.
inline Graph transduce(const Transduction& t, const Graph& g, const Expansion& expansion, const VertexSet& keep) {
  for (const auto& [name, members] : expansion)
    if (!std::binary_search(t.colors.begin(), t.colors.end(), name))
      throw Error("malformed", "expansion assigns color '" + name + "' outside the transduction");
  return induced_subgraph(apply_interpretation(t.formula, expand(g, expansion)), normalized(keep));
}

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), map_(a.vertex_count(), -1), used_(b.vertex_count(), 0) {}

  bool run() {
    if (a_.vertex_count() != b_.vertex_count() || a_.edge_count() != b_.edge_count()) return false;
    auto da = degrees(a_), db = degrees(b_);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return extend(0);
  }

 private:
  static std::vector<int> degrees(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    return d;
  }

  bool extend(Vertex x) {
    if (x == a_.vertex_count()) return true;
    for (Vertex y = 0; y < b_.vertex_count(); ++y) {
      if (used_[static_cast<std::size_t>(y)] || a_.degree(x) != b_.degree(y)) continue;
      bool ok = true;
      for (Vertex p = 0; p < x && ok; ++p)
        ok = a_.adjacent(x, p) == b_.adjacent(y, map_[static_cast<std::size_t>(p)]);
      if (!ok) continue;
      map_[static_cast<std::size_t>(x)] = y;
      used_[static_cast<std::size_t>(y)] = 1;
      if (extend(x + 1)) return true;
      used_[static_cast<std::size_t>(y)] = 0;
    }
    map_[static_cast<std::size_t>(x)] = -1;
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace detail

/// Isomorphism of uncolored graphs by backtracking with degree pruning.
inline bool isomorphic(const Graph& a, const Graph& b) { return detail::IsoSearch(a, b).run(); }

enum class SearchStatus { Found, None, Unknown };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::None:
      return "none";
    case SearchStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

struct TransductionSearchResult {
  SearchStatus status = SearchStatus::None;
  Expansion expansion;
  VertexSet keep;
  std::uint64_t candidates = 0;  // (expansion, keep) pairs compared with the target
  std::uint64_t skipped_asymmetric = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

/// First expansion (then keep set) whose transduction is isomorphic to the
/// target. Expansions run over per-vertex color masks in lexicographic order
/// with vertex 0 most significant and bit i of a mask meaning colors[i];
/// keep sets run over |V(target)|-subsets in lexicographic order. Expansions
/// on which the formula is not symmetric are skipped.
inline TransductionSearchResult search_transduction(const Transduction& t, const Graph& g, const Graph& target,
                                                    std::uint64_t budget = kDefaultSearchBudget) {
  TransductionSearchResult result;
  const int n = g.vertex_count();
  const int k = target.vertex_count();
  if (k > n) return result;
  const int c = static_cast<int>(t.colors.size());
  if (static_cast<long long>(n) * c > 62) throw Error("precondition-violated", "too many vertex-color slots to enumerate");
  const std::uint64_t per_vertex = std::uint64_t{1} << c;

  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
  while (true) {
    Expansion expansion;
    for (int i = 0; i < c; ++i) {
      VertexSet members;
      for (Vertex v = 0; v < n; ++v)
        if (masks[static_cast<std::size_t>(v)] >> i & 1u) members.push_back(v);
      expansion[t.colors[static_cast<std::size_t>(i)]] = std::move(members);
    }
    const Graph colored = expand(g, expansion);
    if (check_symmetric(t.formula, colored).symmetric) {
      const Graph image = apply_interpretation(t.formula, colored);
      std::vector<int> pick(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        if (++result.candidates > budget) {
          result.status = SearchStatus::Unknown;
          return result;
        }
        const VertexSet keep(pick.begin(), pick.end());
        if (isomorphic(induced_subgraph(image, keep), target)) {
          result.status = SearchStatus::Found;
          result.expansion = std::move(expansion);
          result.keep = keep;
          return result;
        }
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    } else {
      ++result.skipped_asymmetric;
    }

    int v = n - 1;
    while (v >= 0 && masks[static_cast<std::size_t>(v)] + 1 == per_vertex) masks[static_cast<std::size_t>(v--)] = 0;
    if (v < 0) break;
    ++masks[static_cast<std::size_t>(v)];
  }
  return result;
}

}  // namespace wcolkit
