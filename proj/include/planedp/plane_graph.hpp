#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "planedp/error.hpp"
#include "planedp/graph.hpp"

namespace planedp {

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

/// Per-vertex counterclockwise neighbor order, keyed by external vertex labels.
struct RotationTable {
  std::vector<int> labels;
  std::vector<std::vector<int>> rotation;
  std::optional<std::vector<int>> outer;
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// A facial walk. `walk[i] -> walk[i+1]` are the darts of the face, face on the left.
struct Face {
  std::vector<int> walk;
  int degree() const { return static_cast<int>(walk.size()); }
};

/// Connected simple plane graph given by a rotation system. Faces are always
/// derived by tracing; one face is designated as the outer face. Immutable
/// after construction.
class PlaneGraph {
 public:
  static PlaneGraph build(const RotationTable& table) {
    PlaneGraph pg;
    const std::size_t n = table.labels.size();
    if (table.rotation.size() != n) throw Error(ErrorCode::MalformedInput, "rotation table size mismatch");
    if (n == 0) throw Error(ErrorCode::DisconnectedInput, "empty graph");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return table.labels[a] < table.labels[b]; });
    std::vector<int> labels(n);
    std::map<int, int> index;
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = table.labels[order[i]];
      if (!index.emplace(labels[i], static_cast<int>(i)).second)
        throw Error(ErrorCode::MalformedInput, "duplicate vertex " + std::to_string(labels[i]));
    }

    pg.rot_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      std::set<int> seen;
      for (int nb : table.rotation[order[i]]) {
        auto it = index.find(nb);
        if (it == index.end())
          throw Error(ErrorCode::MalformedInput,
                      "vertex " + std::to_string(labels[i]) + " lists unknown neighbor " + std::to_string(nb));
        if (it->second == static_cast<int>(i))
          throw Error(ErrorCode::LoopOrParallelEdge, "loop at vertex " + std::to_string(labels[i]));
        if (!seen.insert(it->second).second)
          throw Error(ErrorCode::LoopOrParallelEdge,
                      "neighbor " + std::to_string(nb) + " repeated at vertex " + std::to_string(labels[i]));
        pg.rot_[i].push_back(it->second);
      }
    }

    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) {
      for (int w : pg.rot_[v]) {
        const auto& back = pg.rot_[w];
        if (std::find(back.begin(), back.end(), static_cast<int>(v)) == back.end())
          throw Error(ErrorCode::MalformedInput, "edge " + std::to_string(labels[v]) + "-" +
                                                     std::to_string(labels[w]) + " missing from one rotation");
        if (static_cast<int>(v) < w) edges.emplace_back(static_cast<int>(v), w);
      }
    }
    pg.graph_ = Graph(labels, edges);
    if (!is_connected(pg.graph_)) throw Error(ErrorCode::DisconnectedInput, "graph is not connected");

    pg.trace_faces();
    const long euler = static_cast<long>(n) - static_cast<long>(edges.size()) + static_cast<long>(pg.faces_.size());
    if (!edges.empty() && euler != 2)
      throw Error(ErrorCode::NonPlanarRotation, "V - E + F = " + std::to_string(euler));

    if (table.outer) {
      std::vector<int> hint;
      for (int lbl : *table.outer) {
        auto it = index.find(lbl);
        if (it == index.end()) throw Error(ErrorCode::MalformedInput, "outer face names unknown vertex");
        hint.push_back(it->second);
      }
      pg.outer_ = pg.find_face(hint);
      if (pg.outer_ < 0) throw Error(ErrorCode::MalformedInput, "outer face hint matches no traced face");
    } else {
      pg.outer_ = pg.default_outer();
    }
    return pg;
  }

  /// Builds from a straight-line drawing: rotations are neighbors sorted by
  /// angle. Without a hint the outer face is the unbounded face of the drawing.
  static PlaneGraph from_drawing(const std::vector<int>& labels, const std::vector<Point>& pts,
                                 const std::vector<std::pair<int, int>>& label_edges,
                                 std::optional<std::vector<int>> outer = std::nullopt) {
    const std::size_t n = labels.size();
    if (pts.size() != n) throw Error(ErrorCode::MalformedInput, "point count mismatch");
    std::map<int, int> index;
    for (std::size_t i = 0; i < n; ++i) index[labels[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> nb(n);
    for (auto [a, b] : label_edges) {
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end() || ib == index.end()) throw Error(ErrorCode::MalformedInput, "edge names unknown vertex");
      nb[ia->second].push_back(ib->second);
      nb[ib->second].push_back(ia->second);
    }
    RotationTable t;
    t.labels = labels;
    for (std::size_t v = 0; v < n; ++v) {
      auto& list = nb[v];
      std::sort(list.begin(), list.end(), [&](int a, int b) {
        return angle_less(pts[v], pts[a], pts[b]);
      });
      std::vector<int> rot;
      for (int w : list) rot.push_back(labels[w]);
      t.rotation.push_back(std::move(rot));
    }
    PlaneGraph pg = build(t);
    if (outer) return pg.with_outer_labels(*outer);
    if (pg.faces_.size() < 2) return pg;
    // Sorted labels may permute indices; map points accordingly.
    std::vector<Point> by_index(n);
    for (std::size_t i = 0; i < n; ++i) by_index[pg.graph_.index_or_throw(labels[i])] = pts[i];
    for (int f = 0; f < pg.face_count(); ++f) {
      const auto& w = pg.faces_[f].walk;
      int128 area = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Point& p = by_index[w[i]];
        const Point& q = by_index[w[(i + 1) % w.size()]];
        area += static_cast<int128>(p.x) * q.y - static_cast<int128>(q.x) * p.y;
      }
      if (area < 0) {
        pg.outer_ = f;
        break;
      }
    }
    return pg;
  }

  /// Same embedding with a different designated outer face.
  PlaneGraph with_outer(int face) const {
    check_face(face);
    PlaneGraph pg = *this;
    pg.outer_ = face;
    return pg;
  }

  PlaneGraph with_outer_labels(const std::vector<int>& cycle_labels) const {
    std::vector<int> hint;
    for (int l : cycle_labels) hint.push_back(graph_.index_or_throw(l));
    int f = find_face(hint);
    if (f < 0) throw Error(ErrorCode::MalformedInput, "outer face hint matches no traced face");
    return with_outer(f);
  }

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }
  int degree(int v) const { return graph_.degree(v); }
  int label(int v) const { return graph_.label(v); }

  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const {
    check_face(f);
    return faces_[f];
  }
  int face_count() const { return static_cast<int>(faces_.size()); }

  /// -1 when the graph has no faces (a single vertex).
  int outer_face() const { return outer_; }

  /// Face on the left of dart v -> w.
  int face_of_dart(int v, int w) const {
    const auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end()) throw Error(ErrorCode::UnknownEdge, "no dart " + std::to_string(label(v)) + "->" + std::to_string(label(w)));
    return dart_face_[v][it - r.begin()];
  }

  /// Face in the angular sector between rotation(v)[i] and rotation(v)[i+1].
  int corner_face(int v, int i) const { return dart_face_[v][i]; }

  /// The two faces on either side of an edge (equal for a bridge).
  std::pair<int, int> edge_faces(const Edge& e) const { return {face_of_dart(e.u, e.v), face_of_dart(e.v, e.u)}; }

  RotationTable to_rotation_table() const {
    RotationTable t;
    for (int v = 0; v < order(); ++v) {
      t.labels.push_back(label(v));
      std::vector<int> r;
      for (int w : rot_[v]) r.push_back(label(w));
      t.rotation.push_back(std::move(r));
    }
    if (outer_ >= 0) {
      std::vector<int> o;
      for (int v : faces_[outer_].walk) o.push_back(label(v));
      t.outer = o;
    }
    return t;
  }

  /// Relabeling-invariant code of (rotation system, outer face): the
  /// lexicographically smallest breadth-first rotation code over all roots on
  /// the outer face.
  std::vector<int> canonical_code() const {
    std::vector<int> best;
    if (outer_ < 0) return {order()};
    const auto& w = faces_[outer_].walk;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto code = rooted_code(w[i], w[(i + 1) % w.size()]);
      if (best.empty() || code < best) best = std::move(code);
    }
    return best;
  }

  std::uint64_t canonical_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : canonical_code()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  static int half_plane(const Point& o, const Point& p) {
    std::int64_t dx = p.x - o.x, dy = p.y - o.y;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  }

  static bool angle_less(const Point& o, const Point& a, const Point& b) {
    int ha = half_plane(o, a), hb = half_plane(o, b);
    if (ha != hb) return ha < hb;
    int128 cross = static_cast<int128>(a.x - o.x) * (b.y - o.y) - static_cast<int128>(a.y - o.y) * (b.x - o.x);
    return cross > 0;
  }

  void check_face(int f) const {
    if (f < 0 || f >= face_count()) throw Error(ErrorCode::UnknownId, "face " + std::to_string(f));
  }

  void trace_faces() {
    const int n = order();
    dart_face_.assign(n, {});
    for (int v = 0; v < n; ++v) dart_face_[v].assign(rot_[v].size(), -1);
    auto pos = [&](int v, int w) {
      const auto& r = rot_[v];
      return static_cast<int>(std::find(r.begin(), r.end(), w) - r.begin());
    };
    for (int v = 0; v < n; ++v) {
      std::vector<int> nbs = rot_[v];
      std::sort(nbs.begin(), nbs.end());
      for (int w0 : nbs) {
        if (dart_face_[v][pos(v, w0)] != -1) continue;
        const int id = static_cast<int>(faces_.size());
        Face f;
        int a = v, b = w0;
        while (dart_face_[a][pos(a, b)] == -1) {
          dart_face_[a][pos(a, b)] = id;
          f.walk.push_back(a);
          const auto& rb = rot_[b];
          int pa = pos(b, a);
          int c = rb[(pa + static_cast<int>(rb.size()) - 1) % static_cast<int>(rb.size())];
          a = b;
          b = c;
        }
        faces_.push_back(std::move(f));
      }
    }
  }

  int find_face(const std::vector<int>& hint) const {
    for (int f = 0; f < face_count(); ++f) {
      const auto& w = faces_[f].walk;
      if (w.size() != hint.size()) continue;
      for (int dir : {1, -1}) {
        for (std::size_t s = 0; s < w.size(); ++s) {
          bool ok = true;
          for (std::size_t i = 0; i < w.size() && ok; ++i) {
            std::size_t j = (s + (dir == 1 ? i : w.size() - i)) % w.size();
            ok = w[j] == hint[i];
          }
          if (ok) return f;
        }
      }
    }
    return -1;
  }

  int default_outer() const {
    int best = -1;
    for (int f = 0; f < face_count(); ++f)
      if (best < 0 || faces_[f].degree() > faces_[best].degree()) best = f;
    return best;
  }

  std::vector<int> rooted_code(int root, int first) const {
    std::vector<int> lab(order(), -1);
    std::vector<int> code;
    std::queue<std::pair<int, int>> q;  // vertex, neighbor to start its rotation from
    lab[root] = 0;
    int next = 1;
    q.emplace(root, first);
    while (!q.empty()) {
      auto [v, start] = q.front();
      q.pop();
      const auto& r = rot_[v];
      std::size_t s = std::find(r.begin(), r.end(), start) - r.begin();
      for (std::size_t i = 0; i < r.size(); ++i) {
        int w = r[(s + i) % r.size()];
        if (lab[w] == -1) {
          lab[w] = next++;
          q.emplace(w, v);
        }
        code.push_back(lab[w]);
      }
      code.push_back(-1);
    }
    return code;
  }

  Graph graph_;
  std::vector<std::vector<int>> rot_;
  std::vector<std::vector<int>> dart_face_;
  std::vector<Face> faces_;
  int outer_ = -1;
};

// ---------------------------------------------------------------------------
// Classification

struct VertexClass {
  int vertex = 0;
  int degree = 0;
  bool is_internal = false;
  /// Number of corners at the vertex occupied by faces of degree 3.
  int incident_triangle_count = 0;
};

struct FaceClass {
  int face = 0;
  bool is_outer = false;
  int degree = 0;
  int common_outer_vertices = 0;
  bool is_internal = false;
  bool is_special = false;
  bool in_N = false;

  /// k of a T_k-face, or -1 when the face is not an inner 3-face.
  int t_index() const { return (!is_outer && degree == 3) ? common_outer_vertices : -1; }
};

struct Classification {
  std::vector<VertexClass> vertices;
  std::vector<FaceClass> faces;
  std::vector<bool> on_outer;
  std::vector<Edge> outer_edges;
  /// Edges with an endpoint on the outer boundary that are not boundary edges.
  std::vector<Edge> special_edges;

  bool empty() const { return vertices.empty(); }
  bool is_4k(int v, int k) const { return vertices[v].degree == 4 && vertices[v].incident_triangle_count == k; }
};

inline Classification classify(const PlaneGraph& g) {
  Classification c;
  if (g.order() <= 2 || g.outer_face() < 0) return c;
  const int n = g.order();
  const int outer = g.outer_face();
  c.on_outer.assign(n, false);
  const auto& ow = g.face(outer).walk;
  for (int v : ow) c.on_outer[v] = true;
  for (std::size_t i = 0; i < ow.size(); ++i) c.outer_edges.emplace_back(ow[i], ow[(i + 1) % ow.size()]);
  std::sort(c.outer_edges.begin(), c.outer_edges.end());
  c.outer_edges.erase(std::unique(c.outer_edges.begin(), c.outer_edges.end()), c.outer_edges.end());

  for (int v = 0; v < n; ++v) {
    VertexClass vc;
    vc.vertex = v;
    vc.degree = g.degree(v);
    vc.is_internal = !c.on_outer[v];
    for (int i = 0; i < vc.degree; ++i)
      if (g.face(g.corner_face(v, i)).degree() == 3) ++vc.incident_triangle_count;
    c.vertices.push_back(vc);
  }
  for (int f = 0; f < g.face_count(); ++f) {
    FaceClass fc;
    fc.face = f;
    fc.is_outer = f == outer;
    fc.degree = g.face(f).degree();
    std::set<int> verts(g.face(f).walk.begin(), g.face(f).walk.end());
    for (int v : verts) fc.common_outer_vertices += c.on_outer[v] ? 1 : 0;
    if (!fc.is_outer) {
      fc.is_internal = fc.common_outer_vertices == 0;
      fc.in_N = fc.common_outer_vertices >= 1;
      if (fc.is_internal && fc.degree == 3)
        for (int v : verts) fc.is_special = fc.is_special || c.is_4k(v, 1);
    }
    c.faces.push_back(fc);
  }
  for (const Edge& e : g.graph().edges()) {
    if (!(c.on_outer[e.u] || c.on_outer[e.v])) continue;
    if (std::binary_search(c.outer_edges.begin(), c.outer_edges.end(), e)) continue;
    c.special_edges.push_back(e);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Cycles and regions

struct CycleRegion {
  Cycle cycle;
  std::vector<int> interior_vertices;
  std::vector<int> exterior_vertices;
  bool is_separating = false;
};

/// Splits the vertices off a simple cycle into the side containing the outer
/// face (exterior) and the other side (interior), by walking the dual graph
/// without crossing the cycle.
inline CycleRegion cycle_region(const PlaneGraph& g, const Cycle& cycle) {
  if (!is_cycle_of(g.graph(), cycle)) throw Error(ErrorCode::MalformedInput, "not a cycle of the graph");
  CycleRegion r;
  r.cycle = cycle;
  auto blocked = cycle_edges(cycle);
  std::vector<bool> outside(g.face_count(), false);
  std::queue<int> q;
  outside[g.outer_face()] = true;
  q.push(g.outer_face());
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    const auto& w = g.face(f).walk;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Edge e(w[i], w[(i + 1) % w.size()]);
      if (std::binary_search(blocked.begin(), blocked.end(), e)) continue;
      int other = g.face_of_dart(w[(i + 1) % w.size()], w[i]);
      if (!outside[other]) {
        outside[other] = true;
        q.push(other);
      }
    }
  }
  std::vector<bool> on_cycle(g.order(), false);
  for (int v : cycle) on_cycle[v] = true;
  for (int v = 0; v < g.order(); ++v) {
    if (on_cycle[v]) continue;
    (outside[g.corner_face(v, 0)] ? r.exterior_vertices : r.interior_vertices).push_back(v);
  }
  r.is_separating = !r.interior_vertices.empty() && !r.exterior_vertices.empty();
  return r;
}

inline std::vector<Cycle> enumerate_cycles(const PlaneGraph& g, int max_len, CycleLimits limits = {}) {
  return enumerate_cycles(g.graph(), max_len, limits);
}

/// Separating cycles with lo <= length <= hi.
inline std::vector<CycleRegion> separating_cycles(const PlaneGraph& g, int lo, int hi, CycleLimits limits = {}) {
  if (lo < 3) throw Error(ErrorCode::MalformedInput, "lo must be at least 3");
  std::vector<CycleRegion> out;
  if (g.outer_face() < 0) return out;
  for (const Cycle& c : enumerate_cycles(g.graph(), hi, limits)) {
    if (static_cast<int>(c.size()) < lo) continue;
    auto r = cycle_region(g, c);
    if (r.is_separating) out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adjacency queries

inline bool faces_share_edge(const PlaneGraph& g, int f1, int f2) {
  const auto& w = g.face(f1).walk;
  g.face(f2);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (g.face_of_dart(w[(i + 1) % w.size()], w[i]) == f2) return true;
  return false;
}

inline bool edge_on_face(const PlaneGraph& g, const Edge& e, int f) {
  g.face(f);
  if (!g.graph().valid_vertex(e.u) || !g.graph().valid_vertex(e.v) || !g.graph().adjacent(e.u, e.v))
    throw Error(ErrorCode::UnknownId, "edge");
  auto [a, b] = g.edge_faces(e);
  return a == f || b == f;
}

/// Faces on the other side of each boundary edge of f, in walk order.
inline std::vector<int> neighbor_faces(const PlaneGraph& g, int f) {
  const auto& w = g.face(f).walk;
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(g.face_of_dart(w[(i + 1) % w.size()], w[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Sinks and sources

struct Sink {
  int face = 0;
  /// Apex of the 3-face across each edge of the sink, in walk order.
  std::vector<int> sources;
  /// The 3-face across each edge of the sink, aligned with `sources`.
  std::vector<int> via_faces;
};

/// A sink is an internal 5-face whose vertices have degrees (4,4,4,4,4+) and
/// whose five edges each border an inner 3-face. Sources are the apexes of
/// those 3-faces.
inline std::vector<Sink> sinks_and_sources(const PlaneGraph& g, const Classification& cls) {
  std::vector<Sink> out;
  if (cls.empty()) return out;
  for (const FaceClass& fc : cls.faces) {
    if (fc.is_outer || !fc.is_internal || fc.degree != 5) continue;
    const auto& w = g.face(fc.face).walk;
    int fours = 0;
    bool low = false;
    for (int v : w) {
      fours += g.degree(v) == 4 ? 1 : 0;
      low = low || g.degree(v) < 4;
    }
    if (low || fours < 4) continue;
    Sink s;
    s.face = fc.face;
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) {
      int a = w[i], b = w[(i + 1) % w.size()];
      int t = g.face_of_dart(b, a);
      const Face& tf = g.face(t);
      if (t == g.outer_face() || tf.degree() != 3) {
        ok = false;
        break;
      }
      for (int x : tf.walk)
        if (x != a && x != b) s.sources.push_back(x);
      s.via_faces.push_back(t);
    }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Sink> sinks_and_sources(const PlaneGraph& g) { return sinks_and_sources(g, classify(g)); }

}  // namespace planedp
