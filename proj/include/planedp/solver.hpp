#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planedp/dp_core.hpp"
#include "planedp/error.hpp"
#include "planedp/graph.hpp"
#include "planedp/theorem.hpp"

namespace planedp {

enum class SearchStatus { Extended, NoExtension, BudgetExhausted };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Extended: return "Extended";
    case SearchStatus::NoExtension: return "NoExtension";
    case SearchStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;
  int max_depth = 0;
  double elapsed_ms = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::NoExtension;
  Coloring coloring;
  SearchStats stats;
  std::optional<TheoremId> theorem;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchProblem {
  Graph graph;
  ListAssignment lists;
  MatchingAssignment matching;
  /// Precolored vertices carry their color, all others 0. Empty means none.
  Coloring precolored;
  std::uint64_t budget = kDefaultBudget;
};

namespace detail {

/// Backtracking with forward checking. Variables: smallest candidate set
/// first, ties by index; values ascending.
class McoloringSearch {
 public:
  McoloringSearch(const Graph& g, const ListAssignment& L, const MatchingAssignment& M, std::uint64_t budget)
      : g_(g), L_(L), budget_(budget) {
    const int n = g.order();
    partner_.resize(n);
    for (int v = 0; v < n; ++v) {
      if (L[v].size() > 64) throw Error(ErrorCode::TooLarge, "lists longer than 64 colors");
      const auto& nbs = g.neighbors(v);
      partner_[v].resize(nbs.size());
      for (std::size_t j = 0; j < nbs.size(); ++j) {
        int x = nbs[j];
        auto& row = partner_[v][j];
        row.assign(L[v].size(), -1);
        for (std::size_t a = 0; a < L[v].size(); ++a) {
          auto c = M.partner(v, L[v][a], x);
          if (!c) continue;
          auto it = std::lower_bound(L[x].begin(), L[x].end(), *c);
          if (it != L[x].end() && *it == *c) row[a] = static_cast<int>(it - L[x].begin());
        }
      }
    }
  }

  SearchOutcome run(const Coloring& pre) {
    auto t0 = std::chrono::steady_clock::now();
    const int n = g_.order();
    cand_.assign(n, 0);
    assigned_.assign(n, -1);
    for (int v = 0; v < n; ++v) cand_[v] = L_[v].size() == 64 ? ~0ULL : ((1ULL << L_[v].size()) - 1);

    SearchOutcome out;
    bool dead = false;
    for (int v = 0; v < n; ++v) {
      if (pre.empty() || pre[v] == 0) continue;
      auto it = std::lower_bound(L_[v].begin(), L_[v].end(), pre[v]);
      assigned_[v] = static_cast<int>(it - L_[v].begin());
      cand_[v] = 1ULL << assigned_[v];
    }
    for (int v = 0; v < n && !dead; ++v)
      if (assigned_[v] >= 0) dead = !prune(v, assigned_[v]);
    free_ = 0;
    for (int v = 0; v < n; ++v) free_ += assigned_[v] < 0 ? 1 : 0;

    if (!dead) {
      switch (dfs(0)) {
        case Result::Found: out.status = SearchStatus::Extended; break;
        case Result::Exhausted: out.status = SearchStatus::BudgetExhausted; break;
        case Result::None: out.status = SearchStatus::NoExtension; break;
      }
    }
    if (out.status == SearchStatus::Extended) {
      out.coloring.resize(n);
      for (int v = 0; v < n; ++v) out.coloring[v] = L_[v][assigned_[v]];
    }
    out.stats.nodes = nodes_;
    out.stats.max_depth = max_depth_;
    out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }

 private:
  enum class Result { Found, None, Exhausted };

  // Removes partners of (v, a) from unassigned neighbors; false on a wipe-out.
  bool prune(int v, int a) {
    const auto& nbs = g_.neighbors(v);
    bool ok = true;
    for (std::size_t j = 0; j < nbs.size(); ++j) {
      int x = nbs[j];
      int b = partner_[v][j][a];
      if (b < 0 || assigned_[x] >= 0) continue;
      if (cand_[x] & (1ULL << b)) {
        trail_.emplace_back(x, cand_[x]);
        cand_[x] &= ~(1ULL << b);
        if (cand_[x] == 0) ok = false;
      }
    }
    return ok;
  }

  Result dfs(int depth) {
    max_depth_ = std::max(max_depth_, depth);
    if (depth == free_) return Result::Found;
    int best = -1, best_count = 65;
    for (int v = 0; v < g_.order(); ++v) {
      if (assigned_[v] >= 0) continue;
      int c = std::popcount(cand_[v]);
      if (c < best_count) {
        best = v;
        best_count = c;
      }
    }
    std::uint64_t mask = cand_[best];
    while (mask) {
      int a = std::countr_zero(mask);
      mask &= mask - 1;
      if (++nodes_ > budget_) return Result::Exhausted;
      std::size_t mark = trail_.size();
      assigned_[best] = a;
      if (prune(best, a)) {
        Result r = dfs(depth + 1);
        if (r != Result::None) return r;
      }
      assigned_[best] = -1;
      while (trail_.size() > mark) {
        cand_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
    }
    return Result::None;
  }

  const Graph& g_;
  const ListAssignment& L_;
  std::uint64_t budget_;
  std::vector<std::vector<std::vector<int>>> partner_;
  std::vector<std::uint64_t> cand_;
  std::vector<int> assigned_;
  std::vector<std::pair<int, std::uint64_t>> trail_;
  int free_ = 0;
  std::uint64_t nodes_ = 0;
  int max_depth_ = 0;
};

inline void check_precoloring(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                              const Coloring& pre) {
  if (pre.empty()) return;
  if (static_cast<int>(pre.size()) != g.order()) throw Error(ErrorCode::BadPrecoloring, "precoloring size mismatch");
  for (int v = 0; v < g.order(); ++v)
    if (pre[v] != 0 && !L.contains(v, pre[v]))
      throw Error(ErrorCode::BadPrecoloring, "color " + std::to_string(pre[v]) + " not in list of vertex " +
                                                 std::to_string(g.label(v)));
  for (const Edge& e : g.edges())
    if (pre[e.u] != 0 && pre[e.v] != 0 && M.matched(e.u, pre[e.u], e.v, pre[e.v]))
      throw Error(ErrorCode::BadPrecoloring, "precolored edge " + edge_name(g, e) + " uses a matched pair");
}

}  // namespace detail

/// Complete search for an M-coloring agreeing with the precoloring.
/// BudgetExhausted is reported separately from NoExtension.
inline SearchOutcome find_mcoloring(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                                    const Coloring& precolored = {}, std::uint64_t budget = kDefaultBudget) {
  if (L.order() != g.order()) throw Error(ErrorCode::MalformedInput, "list assignment does not cover the graph");
  detail::check_precoloring(g, L, M, precolored);
  detail::McoloringSearch search(g, L, M, budget);
  return search.run(precolored);
}

inline SearchOutcome find_mcoloring(const SearchProblem& p) {
  return find_mcoloring(p.graph, p.lists, p.matching, p.precolored, p.budget);
}

/// Validates the shape of S for the theorem (one vertex, or a cycle of
/// bounded length given in cyclic order) and searches for an extension of phi.
/// `phi` is aligned with `s`.
inline SearchOutcome extend_precolored(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                                       const std::vector<int>& s, const std::vector<Color>& phi, TheoremId theorem,
                                       std::uint64_t budget = kDefaultBudget) {
  if (theorem != TheoremId::MRA && theorem != TheoremId::MRB && theorem != TheoremId::MRC)
    throw Error(ErrorCode::BadS, "theorem has no extension statement");
  if (s.size() != phi.size()) throw Error(ErrorCode::BadPrecoloring, "precoloring does not match S");
  for (int v : s)
    if (!g.valid_vertex(v)) throw Error(ErrorCode::BadS, "S names an unknown vertex");
  if (s.size() == 1) {
    if (!allows_single_vertex(theorem)) throw Error(ErrorCode::BadS, "single-vertex S not allowed");
  } else {
    if (static_cast<int>(s.size()) > max_precolored_cycle(theorem))
      throw Error(ErrorCode::BadS, "cycle of length " + std::to_string(s.size()) + " is too long");
    if (!is_cycle_of(g, s)) throw Error(ErrorCode::BadS, "S is not a cycle of the graph");
  }
  Coloring pre(g.order(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (phi[i] == 0) throw Error(ErrorCode::BadPrecoloring, "S vertex left uncolored");
    pre[s[i]] = phi[i];
  }
  auto out = find_mcoloring(g, L, M, pre, budget);
  out.theorem = theorem;
  return out;
}

/// Colors the listed vertices in order with the smallest color not matched
/// to an already colored neighbor. Returns nullopt when some vertex is stuck.
inline std::optional<Coloring> extend_greedily(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                                               Coloring partial, const std::vector<int>& order) {
  for (int v : order) {
    std::optional<Color> pick;
    for (Color c : L[v]) {
      bool ok = true;
      for (int x : g.neighbors(v))
        if (partial[x] != 0 && M.matched(v, c, x, partial[x])) ok = false;
      if (ok) {
        pick = c;
        break;
      }
    }
    if (!pick) return std::nullopt;
    partial[v] = *pick;
  }
  return partial;
}

// ---------------------------------------------------------------------------
// Adversarial DP-chromatic number

struct ChiDpOptions {
  int max_edges = 12;
  int max_k = 4;
  std::uint64_t max_assignments = 20'000'000;
};

struct ChiDpResult {
  /// Smallest k <= k_max for which every full k-matching assignment admits
  /// an M-coloring; nullopt if none does.
  std::optional<int> chi;
  /// An uncolorable full assignment for k = hard_k (chi - 1, or k_max when chi is unknown).
  int hard_k = 0;
  std::optional<MatchingAssignment> hard_assignment;
  std::uint64_t assignments_checked = 0;
};

/// Enumerates all full (perfect) k-matching assignments for k = 1..k_max.
/// With symmetry reduction, a BFS spanning forest is fixed straight, which
/// loses nothing because tree edges can always be straightened by renaming.
inline ChiDpResult adversarial_chi_dp(const Graph& g, int k_max, bool symmetry_reduction, ChiDpOptions opt = {}) {
  if (static_cast<int>(g.size()) > opt.max_edges || k_max > opt.max_k || k_max < 1)
    throw Error(ErrorCode::TooLarge, "graph or k_max beyond the enumeration guard");
  std::vector<Edge> tree = symmetry_reduction ? spanning_forest(g) : std::vector<Edge>{};
  std::sort(tree.begin(), tree.end());
  std::vector<Edge> free_edges;
  for (const Edge& e : g.edges())
    if (!std::binary_search(tree.begin(), tree.end(), e)) free_edges.push_back(e);

  ChiDpResult res;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<std::vector<Color>> perms;
    std::vector<Color> p(k);
    for (int i = 0; i < k; ++i) p[i] = i + 1;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    double total = 1;
    for (std::size_t i = 0; i < free_edges.size(); ++i) total *= static_cast<double>(perms.size());
    if (total > static_cast<double>(opt.max_assignments))
      throw Error(ErrorCode::TooLarge, "too many assignments to enumerate at k=" + std::to_string(k));

    auto L = ListAssignment::uniform(g.order(), k);
    MatchingAssignment base;
    for (const Edge& e : tree) {
      MatchingAssignment::Pairs ps;
      for (int c = 1; c <= k; ++c) ps.emplace_back(c, c);
      base.set(e, ps);
    }
    std::vector<std::size_t> odo(free_edges.size(), 0);
    std::optional<MatchingAssignment> bad;
    while (true) {
      MatchingAssignment M = base;
      for (std::size_t i = 0; i < free_edges.size(); ++i) {
        MatchingAssignment::Pairs ps;
        for (int c = 1; c <= k; ++c) ps.emplace_back(c, perms[odo[i]][c - 1]);
        M.set(free_edges[i], ps);
      }
      ++res.assignments_checked;
      auto out = find_mcoloring(g, L, M);
      if (out.status == SearchStatus::BudgetExhausted) throw Error(ErrorCode::TooLarge, "search budget exhausted");
      if (out.status == SearchStatus::NoExtension) {
        bad = std::move(M);
        break;
      }
      std::size_t i = 0;
      while (i < odo.size() && ++odo[i] == perms.size()) odo[i++] = 0;
      if (i == odo.size()) break;
    }
    if (!bad) {
      res.chi = k;
      return res;
    }
    res.hard_k = k;
    res.hard_assignment = std::move(bad);
  }
  return res;
}

}  // namespace planedp
