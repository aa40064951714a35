#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcolkit/error.hpp"
#include "wcolkit/graph.hpp"
#include "wcolkit/numeric.hpp"

namespace wcolkit {

/// b^0 + b^1 + ... + b^a, with 0^0 = 1.
inline BigInt bollobas_bound(int a, int b) {
  if (a < 0 || b < 0) throw Error("precondition-violated", "negative Bollobas parameter");
  BigInt sum = 0;
  BigInt term = 1;
  for (int i = 0; i <= a; ++i) {
    sum += term;
    term *= b;
  }
  return sum;
}

struct BollobasVerdict {
  bool lengths_ok = true;   // |A| = |B|
  bool sizes_ok = true;     // |A_i| <= a and |B_i| <= b
  bool disjoint_ok = true;  // A_i n B_i empty
  bool cross_ok = true;     // A_i n B_j nonempty for i < j
  std::optional<int> size_failure;
  std::optional<int> disjoint_failure;
  std::optional<std::pair<int, int>> cross_failure;  // (i, j), 0-based

  int n = 0;
  BigInt bound;
  bool conclusion_ok = true;  // n <= bound; vacuous when the premise fails

  bool premise() const { return lengths_ok && sizes_ok && disjoint_ok && cross_ok; }
  bool holds() const { return !premise() || conclusion_ok; }
};

inline BollobasVerdict bollobas_check(const std::vector<VertexSet>& A, const std::vector<VertexSet>& B, int a, int b) {
  BollobasVerdict verdict;
  verdict.bound = bollobas_bound(a, b);
  verdict.n = static_cast<int>(A.size());
  if (A.size() != B.size()) {
    verdict.lengths_ok = false;
    return verdict;
  }
  std::vector<VertexSet> as, bs;
  for (std::size_t i = 0; i < A.size(); ++i) {
    as.push_back(normalized(A[i]));
    bs.push_back(normalized(B[i]));
  }
  const int n = verdict.n;
  for (int i = 0; i < n; ++i) {
    const auto& ai = as[static_cast<std::size_t>(i)];
    const auto& bi = bs[static_cast<std::size_t>(i)];
    if (verdict.sizes_ok && (static_cast<int>(ai.size()) > a || static_cast<int>(bi.size()) > b)) {
      verdict.sizes_ok = false;
      verdict.size_failure = i;
    }
    if (verdict.disjoint_ok && intersects(ai, bi)) {
      verdict.disjoint_ok = false;
      verdict.disjoint_failure = i;
    }
  }
  for (int i = 0; i < n && verdict.cross_ok; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!intersects(as[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(j)])) {
        verdict.cross_ok = false;
        verdict.cross_failure = std::pair{i, j};
        break;
      }
  if (verdict.premise()) verdict.conclusion_ok = BigInt(n) <= verdict.bound;
  return verdict;
}

struct BollobasSearchResult {
  int universe = 0;
  int a = 0;
  int b = 0;
  int best = 0;  // longest premise-satisfying sequence
  std::vector<VertexSet> A;
  std::vector<VertexSet> B;
  std::uint64_t nodes = 0;
};

namespace detail {

class BollobasSearch {
 public:
  BollobasSearch(int universe, int a, int b) : universe_(universe) {
    // Enlarging A_i or B_i keeps a valid chain valid, so only pairs where
    // neither side can grow (size limit reached or the universe used up)
    // need to be searched.
    const std::uint32_t full = universe == 0 ? 0u : (1u << universe) - 1u;
    for (std::uint32_t x = 0; x <= full; ++x) {
      if (std::popcount(x) > a) continue;
      for (std::uint32_t y = 0; y <= full; ++y) {
        if ((x & y) != 0 || std::popcount(y) > b) continue;
        const bool saturated = (x | y) == full;
        if ((std::popcount(x) == a || saturated) && (std::popcount(y) == b || saturated)) pairs_.push_back({x, y});
      }
    }
  }

  void run() {
    // Relabelling the universe maps solutions to solutions, so the first pair
    // is taken to be ({0..|A|-1}, {|A|..|A|+|B|-1}).
    for (const auto& [x, y] : pairs_) {
      if (!canonical(x, y)) continue;
      std::vector<Pair> cands;
      for (const auto& p : pairs_)
        if ((p.b & x) != 0) cands.push_back(p);
      chain_.push_back({x, y});
      extend(cands);
      chain_.pop_back();
    }
  }

  int best() const { return static_cast<int>(best_chain_.size()); }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<VertexSet> sets(bool first) const {
    std::vector<VertexSet> out;
    for (const auto& p : best_chain_) {
      const std::uint32_t mask = first ? p.a : p.b;
      VertexSet s;
      for (int i = 0; i < universe_; ++i)
        if (mask & (1u << i)) s.push_back(i + 1);
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  struct Pair {
    std::uint32_t a;
    std::uint32_t b;
  };

  static bool canonical(std::uint32_t x, std::uint32_t y) {
    const int ca = std::popcount(x);
    const int cb = std::popcount(y);
    const std::uint32_t wa = (1u << ca) - 1u;
    const std::uint32_t wb = ((1u << (ca + cb)) - 1u) & ~wa;
    return x == wa && y == wb;
  }

  // cands: pairs whose B meets every A already in the chain.
  void extend(const std::vector<Pair>& cands) {
    ++nodes_;
    if (chain_.size() > best_chain_.size()) best_chain_ = chain_;
    if (chain_.size() + cands.size() <= best_chain_.size()) return;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const Pair p = cands[i];
      std::vector<Pair> next;
      for (const auto& q : cands)
        if ((q.b & p.a) != 0) next.push_back(q);
      chain_.push_back(p);
      extend(next);
      chain_.pop_back();
    }
  }

  int universe_;
  std::vector<Pair> pairs_;
  std::vector<Pair> chain_;
  std::vector<Pair> best_chain_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Longest sequence (A_i, B_i) over the universe {1..universe} satisfying the
/// premise of bollobas_check, by exhaustive branch and bound.
inline BollobasSearchResult bollobas_extremal(int universe, int a, int b) {
  if (universe < 0 || universe > 16) throw Error("precondition-violated", "universe size must be in 0..16");
  if (a < 0 || b < 0) throw Error("precondition-violated", "negative Bollobas parameter");
  detail::BollobasSearch search(universe, a, b);
  search.run();
  BollobasSearchResult result;
  result.universe = universe;
  result.a = a;
  result.b = b;
  result.best = search.best();
  result.A = search.sets(true);
  result.B = search.sets(false);
  result.nodes = search.nodes();
  return result;
}

}  // namespace wcolkit
