#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "planedp/error.hpp"
#include "planedp/graph.hpp"

namespace planedp {

using Color = int;

/// One color per vertex; 0 means "not colored" in partial colorings.
using Coloring = std::vector<Color>;

class ListAssignment {
 public:
  ListAssignment() = default;

  explicit ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (auto& l : lists_) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
      for (Color c : l)
        if (c <= 0) throw Error(ErrorCode::MalformedInput, "colors are positive integers");
    }
  }

  /// L(v) = {1..k} for every vertex.
  static ListAssignment uniform(int n, int k) {
    std::vector<Color> base(k);
    for (int c = 0; c < k; ++c) base[c] = c + 1;
    return ListAssignment(std::vector<std::vector<Color>>(n, base));
  }

  int order() const { return static_cast<int>(lists_.size()); }
  const std::vector<Color>& operator[](int v) const { return lists_[v]; }

  bool contains(int v, Color c) const { return std::binary_search(lists_[v].begin(), lists_[v].end(), c); }

  /// k when every list is exactly {1..k}.
  std::optional<int> uniform_k() const {
    if (lists_.empty()) return std::nullopt;
    const int k = static_cast<int>(lists_[0].size());
    for (const auto& l : lists_) {
      if (static_cast<int>(l.size()) != k) return std::nullopt;
      for (int c = 0; c < k; ++c)
        if (l[c] != c + 1) return std::nullopt;
    }
    return k;
  }

  std::vector<std::vector<Color>>& raw() { return lists_; }

 private:
  std::vector<std::vector<Color>> lists_;
};

/// Per-edge matchings between endpoint color sets. Pairs on edge {u,v} (u < v)
/// are stored as (color at u, color at v). Absent edges have empty matchings.
class MatchingAssignment {
 public:
  using Pairs = std::vector<std::pair<Color, Color>>;

  void add(int x, Color cx, int y, Color cy) {
    Edge e(x, y);
    auto& ps = map_[e];
    std::pair<Color, Color> p = x == e.u ? std::pair{cx, cy} : std::pair{cy, cx};
    ps.insert(std::upper_bound(ps.begin(), ps.end(), p), p);
  }

  void set(const Edge& e, Pairs pairs) {
    std::sort(pairs.begin(), pairs.end());
    if (pairs.empty())
      map_.erase(e);
    else
      map_[e] = std::move(pairs);
  }

  const Pairs& pairs(const Edge& e) const {
    static const Pairs kEmpty;
    auto it = map_.find(e);
    return it == map_.end() ? kEmpty : it->second;
  }

  /// Color at y matched with (x, cx), if any.
  std::optional<Color> partner(int x, Color cx, int y) const {
    Edge e(x, y);
    for (auto [a, b] : pairs(e)) {
      if (x == e.u && a == cx) return b;
      if (x == e.v && b == cx) return a;
    }
    return std::nullopt;
  }

  bool matched(int x, Color cx, int y, Color cy) const {
    auto p = partner(x, cx, y);
    return p && *p == cy;
  }

  const std::map<Edge, Pairs>& entries() const { return map_; }

  friend bool operator==(const MatchingAssignment&, const MatchingAssignment&) = default;

 private:
  std::map<Edge, Pairs> map_;
};

// ---------------------------------------------------------------------------
// Cover validation and edge predicates

struct CoverReport {
  std::size_t cover_vertices = 0;
  std::size_t cover_edges = 0;
};

/// Checks that every per-edge matching is a matching inside the endpoint lists.
inline CoverReport validate_cover(const Graph& g, const ListAssignment& L, const MatchingAssignment& M) {
  if (L.order() != g.order()) throw Error(ErrorCode::MalformedInput, "list assignment does not cover the graph");
  CoverReport r;
  for (int v = 0; v < g.order(); ++v) r.cover_vertices += L[v].size();
  for (const auto& [e, ps] : M.entries()) {
    if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v) || !g.adjacent(e.u, e.v))
      throw Error(ErrorCode::UnknownEdge, "matching on non-edge");
    std::set<Color> left, right;
    for (auto [a, b] : ps) {
      if (!L.contains(e.u, a) || !L.contains(e.v, b))
        throw Error(ErrorCode::ColorOutsideList, edge_name(g, e) + " pair " + std::to_string(a) + "-" + std::to_string(b));
      if (!left.insert(a).second || !right.insert(b).second)
        throw Error(ErrorCode::NotAMatching, edge_name(g, e));
    }
    r.cover_edges += ps.size();
  }
  return r;
}

struct EdgePredicates {
  bool is_straight = false;
  bool is_full = false;
};

inline EdgePredicates edge_predicates(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                                      const Edge& e) {
  if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v) || !g.adjacent(e.u, e.v))
    throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  const auto& ps = M.pairs(e);
  EdgePredicates p;
  p.is_straight = std::all_of(ps.begin(), ps.end(), [](auto pr) { return pr.first == pr.second; });
  p.is_full = ps.size() == L[e.u].size() && ps.size() == L[e.v].size();
  return p;
}

// ---------------------------------------------------------------------------
// Consistency on closed walks

struct ConsistencyResult {
  bool consistent = true;
  /// Colors c_1..c_m along the walk with c_1 != c_m, when inconsistent.
  std::vector<Color> witness;
};

/// `walk` lists w_1..w_m with w_m == w_1. Since each matching pairs a color with
/// at most one partner, the chain from each starting color is unique.
inline ConsistencyResult is_consistent(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                                       const std::vector<int>& walk) {
  if (walk.size() < 4 || walk.front() != walk.back())
    throw Error(ErrorCode::MalformedInput, "closed walk needs w_m = w_1 and at least three edges");
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (!g.valid_vertex(walk[i]) || !g.valid_vertex(walk[i + 1]) || !g.adjacent(walk[i], walk[i + 1]))
      throw Error(ErrorCode::MalformedInput, "walk uses a non-edge");
  ConsistencyResult r;
  for (Color start : L[walk[0]]) {
    std::vector<Color> chain{start};
    bool alive = true;
    for (std::size_t i = 0; i + 1 < walk.size() && alive; ++i) {
      auto next = M.partner(walk[i], chain.back(), walk[i + 1]);
      if (next)
        chain.push_back(*next);
      else
        alive = false;
    }
    if (alive && chain.back() != start) {
      r.consistent = false;
      r.witness = std::move(chain);
      return r;
    }
  }
  return r;
}

inline bool is_mcoloring(const Graph& g, const ListAssignment& L, const MatchingAssignment& M, const Coloring& phi) {
  if (static_cast<int>(phi.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!L.contains(v, phi[v])) return false;
  for (const Edge& e : g.edges())
    if (M.matched(e.u, phi[e.u], e.v, phi[e.v])) return false;
  return true;
}

/// Partial version: uncolored (0) vertices are ignored.
inline bool is_partial_mcoloring(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                                 const Coloring& phi) {
  if (static_cast<int>(phi.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (phi[v] != 0 && !L.contains(v, phi[v])) return false;
  for (const Edge& e : g.edges())
    if (phi[e.u] != 0 && phi[e.v] != 0 && M.matched(e.u, phi[e.u], e.v, phi[e.v])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Straightening

class PreconditionError : public Error {
 public:
  PreconditionError(Cycle cycle, const std::string& detail)
      : Error(ErrorCode::PreconditionViolated, detail), cycle_(std::move(cycle)) {}
  const Cycle& cycle() const { return cycle_; }

 private:
  Cycle cycle_;
};

/// rename[v][c] is the new name of color c at v (index 0 unused).
using Renaming = std::vector<std::vector<Color>>;

struct StraightenResult {
  MatchingAssignment matching;
  Renaming rename;
};

inline MatchingAssignment apply_renaming(const MatchingAssignment& M, const Renaming& rename) {
  MatchingAssignment out;
  for (const auto& [e, ps] : M.entries()) {
    MatchingAssignment::Pairs renamed;
    for (auto [a, b] : ps) renamed.emplace_back(rename[e.u][a], rename[e.v][b]);
    out.set(e, std::move(renamed));
  }
  return out;
}

inline Coloring apply_renaming(const Coloring& phi, const Renaming& rename) {
  Coloring out(phi.size(), 0);
  for (std::size_t v = 0; v < phi.size(); ++v) out[v] = phi[v] == 0 ? 0 : rename[v][phi[v]];
  return out;
}

inline Renaming invert(const Renaming& rename) {
  Renaming inv = rename;
  for (std::size_t v = 0; v < rename.size(); ++v)
    for (std::size_t c = 1; c < rename[v].size(); ++c) inv[v][rename[v][c]] = static_cast<Color>(c);
  return inv;
}

namespace detail {

inline std::optional<Cycle> path_cycle_through(const Graph& g, const std::vector<Edge>& h, const Edge& e) {
  std::vector<std::vector<int>> adj(g.order());
  for (const Edge& x : h) {
    if (x == e) continue;
    adj[x.u].push_back(x.v);
    adj[x.v].push_back(x.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> parent(g.order(), -2);
  std::queue<int> q;
  parent[e.u] = -1;
  q.push(e.u);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (parent[w] != -2) continue;
      parent[w] = v;
      q.push(w);
    }
  }
  if (parent[e.v] == -2) return std::nullopt;
  Cycle c;
  for (int x = e.v; x != -1; x = parent[x]) c.push_back(x);
  return c;
}

}  // namespace detail

/// Renames colors on the vertices of subgraph h (given by its edges) so that
/// every edge of h becomes straight. Requires a k-matching assignment in which
/// every cycle of h is consistent and has only full edges.
inline StraightenResult straighten(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                                   std::vector<Edge> h) {
  auto k = L.uniform_k();
  if (!k || L.order() != g.order()) throw Error(ErrorCode::MalformedInput, "straighten needs a k-matching assignment");
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  for (const Edge& e : h)
    if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v) || !g.adjacent(e.u, e.v))
      throw Error(ErrorCode::UnknownEdge, "subgraph edge not in graph");

  // Edges on a cycle of h must be full.
  for (const Edge& e : h) {
    if (edge_predicates(g, L, M, e).is_full) continue;
    if (auto c = detail::path_cycle_through(g, h, e))
      throw PreconditionError(*c, "edge " + edge_name(g, e) + " lies on a cycle but is not full");
  }

  // Breadth-first forest of h; each child's renaming composes the tree edge's
  // matching with its parent's renaming. Colors unmatched on a tree edge take
  // the unused names in ascending order.
  std::vector<int> parent(g.order(), -1);
  std::vector<int> depth(g.order(), 0);
  std::vector<Edge> tree;
  Renaming rename(g.order(), std::vector<Color>(*k + 1, 0));
  for (int v = 0; v < g.order(); ++v)
    for (int c = 1; c <= *k; ++c) rename[v][c] = c;
  std::vector<std::vector<int>> adj(g.order());
  for (const Edge& e : h) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<bool> seen(g.order(), false);
  for (int r = 0; r < g.order(); ++r) {
    if (seen[r] || adj[r].empty()) continue;
    seen[r] = true;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int p = q.front();
      q.pop();
      for (int c : adj[p]) {
        if (seen[c]) continue;
        seen[c] = true;
        parent[c] = p;
        depth[c] = depth[p] + 1;
        tree.emplace_back(p, c);
        std::vector<bool> used(*k + 1, false);
        std::vector<Color> perm(*k + 1, 0);
        for (Color a = 1; a <= *k; ++a) {
          auto b = M.partner(p, a, c);
          if (!b) continue;
          perm[*b] = rename[p][a];
          used[rename[p][a]] = true;
        }
        Color fill = 1;
        for (Color b = 1; b <= *k; ++b) {
          if (perm[b] != 0) continue;
          while (used[fill]) ++fill;
          perm[b] = fill;
          used[fill] = true;
        }
        rename[c] = perm;
        q.push(c);
      }
    }
  }

  StraightenResult out;
  out.matching = apply_renaming(M, rename);
  out.rename = rename;
  std::vector<Edge> sorted_tree = tree;
  std::sort(sorted_tree.begin(), sorted_tree.end());
  for (const Edge& e : h) {
    if (std::binary_search(sorted_tree.begin(), sorted_tree.end(), e)) continue;
    if (edge_predicates(g, L, out.matching, e).is_straight) continue;
    // Fundamental cycle of e: tree paths from both ends to their common ancestor.
    std::vector<int> a{e.u}, b{e.v};
    while (a.back() != b.back()) {
      if (depth[a.back()] >= depth[b.back()])
        a.push_back(parent[a.back()]);
      else
        b.push_back(parent[b.back()]);
    }
    b.pop_back();
    Cycle c = a;
    c.insert(c.end(), b.rbegin(), b.rend());
    throw PreconditionError(c, "assignment is inconsistent on the cycle closed by " + edge_name(g, e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vertex identification

struct IdentifyResult {
  Graph graph;
  ListAssignment lists;
  MatchingAssignment matching;
  /// Index of the merged vertex w* in `graph` (it keeps the label of u).
  int merged = -1;
  /// Old index -> new index; -1 for removed vertices. Both u and v map to `merged`.
  std::vector<int> new_index;
};

/// Deletes `removed`, then merges u and v into one vertex that inherits both
/// neighborhoods. Matchings of surviving edges are kept; edges formerly at u or
/// v are re-anchored at the merged vertex.
inline IdentifyResult identify(const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                               const std::vector<int>& removed, int u, int v) {
  std::vector<bool> gone(g.order(), false);
  for (int x : removed) {
    if (!g.valid_vertex(x)) throw Error(ErrorCode::UnknownId, "removed vertex");
    gone[x] = true;
  }
  if (!g.valid_vertex(u) || !g.valid_vertex(v) || u == v || gone[u] || gone[v])
    throw Error(ErrorCode::MalformedInput, "identified vertices must be distinct survivors");
  if (g.adjacent(u, v)) throw Error(ErrorCode::LoopCreated, "identified vertices are adjacent");
  if (L[u] != L[v]) throw Error(ErrorCode::MalformedInput, "identified vertices need equal lists");

  IdentifyResult r;
  r.new_index.assign(g.order(), -1);
  std::vector<int> labels;
  std::vector<std::vector<Color>> lists;
  for (int x = 0; x < g.order(); ++x) {
    if (gone[x] || x == v) continue;
    r.new_index[x] = static_cast<int>(labels.size());
    labels.push_back(g.label(x));
    lists.push_back(L[x]);
  }
  r.new_index[v] = r.new_index[u];
  r.merged = r.new_index[u];

  std::map<Edge, MatchingAssignment::Pairs> merged_pairs;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (gone[e.u] || gone[e.v]) continue;
    int a = r.new_index[e.u], b = r.new_index[e.v];
    Edge ne(a, b);
    auto [it, fresh] = merged_pairs.try_emplace(ne);
    if (fresh) edges.push_back(ne);
    for (auto [ca, cb] : M.pairs(e)) {
      // (color at e.u, color at e.v) -> orientation of ne
      Color at_a = ca, at_b = cb;
      std::pair<Color, Color> p = a == ne.u ? std::pair{at_a, at_b} : std::pair{at_b, at_a};
      it->second.push_back(p);
    }
    if (!fresh) {
      auto& ps = it->second;
      std::set<Color> left, right;
      for (auto [x, y] : ps) {
        if (!left.insert(x).second || !right.insert(y).second)
          throw Error(ErrorCode::MatchingConflict,
                      "common neighbor " + std::to_string(g.label(e.u == u || e.u == v ? e.v : e.u)) +
                          ": merged matchings collide");
      }
      std::sort(ps.begin(), ps.end());
      ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    }
  }
  r.graph = Graph(labels, edges);
  r.lists = ListAssignment(lists);
  for (auto& [e, ps] : merged_pairs) r.matching.set(e, ps);
  return r;
}

/// Pulls a coloring of the identified graph back to the original graph: u and
/// v both take the merged vertex's color; removed vertices stay uncolored (0).
inline Coloring lift(const IdentifyResult& r, const Coloring& phi_prime) {
  Coloring out(r.new_index.size(), 0);
  for (std::size_t x = 0; x < r.new_index.size(); ++x)
    if (r.new_index[x] >= 0) out[x] = phi_prime[r.new_index[x]];
  return out;
}

// ---------------------------------------------------------------------------
// Encodings and random assignments

/// Identity matchings on shared colors: M-colorings are exactly the proper L-colorings.
inline MatchingAssignment encode_list_coloring(const Graph& g, const ListAssignment& L) {
  MatchingAssignment M;
  for (const Edge& e : g.edges()) {
    MatchingAssignment::Pairs ps;
    for (Color c : L[e.u])
      if (L.contains(e.v, c)) ps.emplace_back(c, c);
    M.set(e, std::move(ps));
  }
  return M;
}

inline MatchingAssignment encode_proper_coloring(const Graph& g, int k) {
  return encode_list_coloring(g, ListAssignment::uniform(g.order(), k));
}

struct AssignmentProfile {
  enum class Kind { FullRandomPerfect, IdentityWithTwists, Sparse };
  Kind kind = Kind::FullRandomPerfect;
  double p = 0.0;

  static AssignmentProfile full() { return {Kind::FullRandomPerfect, 1.0}; }
  static AssignmentProfile twists(double p) { return {Kind::IdentityWithTwists, p}; }
  static AssignmentProfile sparse(double p) { return {Kind::Sparse, p}; }

  /// Accepts "full", "twists:<p>", "sparse:<p>".
  static AssignmentProfile parse(const std::string& s) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    double p = colon == std::string::npos ? 0.0 : std::stod(s.substr(colon + 1));
    if (head == "full") return full();
    if (head == "twists") return twists(p);
    if (head == "sparse") return sparse(p);
    throw Error(ErrorCode::MalformedInput, "unknown assignment profile " + s);
  }

  std::string name() const {
    switch (kind) {
      case Kind::FullRandomPerfect: return "full";
      case Kind::IdentityWithTwists: return "twists:" + std::to_string(p);
      case Kind::Sparse: return "sparse:" + std::to_string(p);
    }
    return "?";
  }
};

namespace detail {

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::vector<Color> random_permutation(std::mt19937_64& rng, int k) {
  std::vector<Color> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i + 1;
  for (int i = k - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
  return perm;
}

}  // namespace detail

/// Deterministic for a fixed seed. Edges are visited in ascending order.
inline MatchingAssignment random_assignment(const Graph& g, int k, std::uint64_t seed, AssignmentProfile profile) {
  if (k < 1) throw Error(ErrorCode::MalformedInput, "k must be positive");
  std::mt19937_64 rng(seed);
  MatchingAssignment M;
  for (const Edge& e : g.edges()) {
    MatchingAssignment::Pairs ps;
    switch (profile.kind) {
      case AssignmentProfile::Kind::FullRandomPerfect: {
        auto perm = detail::random_permutation(rng, k);
        for (int c = 1; c <= k; ++c) ps.emplace_back(c, perm[c - 1]);
        break;
      }
      case AssignmentProfile::Kind::IdentityWithTwists: {
        if (detail::unit(rng) < profile.p) {
          auto perm = detail::random_permutation(rng, k);
          for (int c = 1; c <= k; ++c) ps.emplace_back(c, perm[c - 1]);
        } else {
          for (int c = 1; c <= k; ++c) ps.emplace_back(c, c);
        }
        break;
      }
      case AssignmentProfile::Kind::Sparse: {
        auto perm = detail::random_permutation(rng, k);
        for (int c = 1; c <= k; ++c)
          if (detail::unit(rng) < profile.p) ps.emplace_back(c, perm[c - 1]);
        break;
      }
    }
    M.set(e, std::move(ps));
  }
  return M;
}

}  // namespace planedp
