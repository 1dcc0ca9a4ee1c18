#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "planedp/error.hpp"

namespace planedp {

/// Undirected edge between two vertex indices, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  int other(int x) const { return x == u ? v : u; }
  bool has(int x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex sequence of a simple cycle; the closing edge back to front() is implicit.
using Cycle = std::vector<int>;

/// Simple undirected graph over dense vertex indices 0..n-1. Each index carries
/// an external label (the id used in files and reports).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : labels_(n), adj_(n) {
    for (int i = 0; i < n; ++i) labels_[i] = i;
  }

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  Graph(std::vector<int> labels, const std::vector<Edge>& edges)
      : labels_(std::move(labels)), adj_(labels_.size()) {
    std::set<int> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error(ErrorCode::MalformedInput, "duplicate vertex label");
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  /// Adds edge {a,b}; loops and parallel edges are rejected.
  void add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw Error(ErrorCode::LoopOrParallelEdge, "loop at vertex " + std::to_string(labels_[a]));
    if (adjacent(a, b))
      throw Error(ErrorCode::LoopOrParallelEdge,
                  "parallel edge " + std::to_string(labels_[a]) + "-" + std::to_string(labels_[b]));
    adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
    Edge e(a, b);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
  }

  void remove_edge(int a, int b) {
    if (!adjacent(a, b)) throw Error(ErrorCode::UnknownEdge, "no edge to remove");
    adj_[a].erase(std::lower_bound(adj_[a].begin(), adj_[a].end(), b));
    adj_[b].erase(std::lower_bound(adj_[b].begin(), adj_[b].end(), a));
    edges_.erase(std::lower_bound(edges_.begin(), edges_.end(), Edge(a, b)));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int a, int b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  std::optional<std::size_t> edge_index(int a, int b) const {
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  int label(int v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }

  std::optional<int> index_of(int lbl) const {
    for (int i = 0; i < order(); ++i)
      if (labels_[i] == lbl) return i;
    return std::nullopt;
  }

  int index_or_throw(int lbl) const {
    auto i = index_of(lbl);
    if (!i) throw Error(ErrorCode::UnknownId, "vertex " + std::to_string(lbl));
    return *i;
  }

  bool valid_vertex(int v) const { return v >= 0 && v < order(); }

 private:
  void check_vertex(int v) const {
    if (!valid_vertex(v)) throw Error(ErrorCode::UnknownId, "vertex index " + std::to_string(v));
  }

  std::vector<int> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

inline std::string edge_name(const Graph& g, const Edge& e) {
  return std::to_string(g.label(e.u)) + "-" + std::to_string(g.label(e.v));
}

inline std::string cycle_name(const Graph& g, const Cycle& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << g.label(c[i]);
  return os.str();
}

/// Component id per vertex; vertices in `skip` get -1 and are treated as deleted.
inline std::vector<int> components(const Graph& g, const std::vector<bool>& skip = {}) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] != -1 || (!skip.empty() && skip[s])) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (comp[w] != -1 || (!skip.empty() && skip[w])) continue;
        comp[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return comp;
}

inline int component_count(const Graph& g, const std::vector<bool>& skip = {}) {
  auto comp = components(g, skip);
  int best = -1;
  for (int c : comp) best = std::max(best, c);
  return best + 1;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

/// True when the graph is connected, has at least three vertices, and has no cut vertex.
inline bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  std::vector<bool> skip(g.order(), false);
  for (int v = 0; v < g.order(); ++v) {
    skip[v] = true;
    bool split = component_count(g, skip) > 1;
    skip[v] = false;
    if (split) return false;
  }
  return true;
}

/// Unweighted distances from `source`; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, int source, const std::vector<bool>& skip = {}) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] != -1 || (!skip.empty() && skip[w])) continue;
      dist[w] = dist[v] + 1;
      q.push(w);
    }
  }
  return dist;
}

struct CycleLimits {
  int max_len_guard = 8;
  std::size_t max_count = 1'000'000;
};

/// All simple cycles with 3 <= length <= max_len. Each cycle is reported once,
/// starting at its smallest vertex with the second vertex smaller than the last.
/// Order: by start vertex, then depth-first with ascending neighbors.
inline std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len, CycleLimits limits = {}) {
  if (max_len > limits.max_len_guard)
    throw Error(ErrorCode::LimitExceeded,
                "max_len " + std::to_string(max_len) + " exceeds guard " + std::to_string(limits.max_len_guard));
  std::vector<Cycle> out;
  if (max_len < 3) return out;
  std::vector<bool> on_path(g.order(), false);
  Cycle path;

  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
        if (out.size() > limits.max_count)
          throw Error(ErrorCode::LimitExceeded, "cycle count exceeds " + std::to_string(limits.max_count));
        continue;
      }
      if (w <= start || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };

  for (int s = 0; s < g.order(); ++s) {
    on_path[s] = true;
    path.assign(1, s);
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return out;
}

inline std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < c.size(); ++i) es.emplace_back(c[i], c[(i + 1) % c.size()]);
  std::sort(es.begin(), es.end());
  return es;
}

/// Cycles are adjacent when they share at least one edge.
inline bool cycles_share_edge(const Cycle& a, const Cycle& b) {
  auto ea = cycle_edges(a);
  auto eb = cycle_edges(b);
  std::vector<Edge> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
  return !common.empty();
}

/// Cycles intersect when they share at least one vertex.
inline bool cycles_intersect(const Cycle& a, const Cycle& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

/// True when `c` lists distinct vertices of length >= 3 joined consecutively by edges of g.
inline bool is_cycle_of(const Graph& g, const Cycle& c) {
  if (c.size() < 3) return false;
  std::set<int> distinct(c.begin(), c.end());
  if (distinct.size() != c.size()) return false;
  for (int v : c)
    if (!g.valid_vertex(v)) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

/// Breadth-first spanning forest restricted to `edges` (all graph edges when empty).
/// Returns the tree edges; roots are taken in ascending vertex order.
inline std::vector<Edge> spanning_forest(const Graph& g, const std::vector<Edge>& edges = {}) {
  std::vector<std::vector<int>> adj(g.order());
  const auto& use = edges.empty() ? g.edges() : edges;
  for (const Edge& e : use) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<bool> seen(g.order(), false);
  std::vector<Edge> tree;
  for (int r = 0; r < g.order(); ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        tree.emplace_back(v, w);
        q.push(w);
      }
    }
  }
  return tree;
}

}  // namespace planedp
