#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "planedp/patterns.hpp"
#include "planedp/plane_graph.hpp"
#include "planedp/theorem.hpp"

namespace planedp {

inline constexpr int kMaxGeneratedOrder = 24;

/// Generator profile, parsed from strings such as "triangulation",
/// "outer-cycle:6", "outer-cycle:6:quad" or "named:house".
struct GenProfile {
  enum class Kind { Triangulation, OuterCycle, Named };
  Kind kind = Kind::Triangulation;
  /// Outer cycle length for OuterCycle; 0 picks one per seed.
  int k = 0;
  /// OuterCycle only: remove every triangle from the interior.
  bool triangle_free = false;
  std::string name;
  /// When set, edges are deleted from forbidden-configuration witnesses until
  /// the theorem's filter passes.
  std::optional<TheoremId> repair_for;

  static GenProfile parse(const std::string& s) {
    GenProfile p;
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.empty()) throw Error(ErrorCode::MalformedInput, "empty profile");
    if (parts[0] == "triangulation" && parts.size() == 1) return p;
    if (parts[0] == "outer-cycle" && parts.size() <= 3) {
      p.kind = Kind::OuterCycle;
      if (parts.size() >= 2) {
        try {
          p.k = std::stoi(parts[1]);
        } catch (const std::exception&) {
          throw Error(ErrorCode::MalformedInput, "bad outer-cycle length in '" + s + "'");
        }
        if (p.k < 3) throw Error(ErrorCode::MalformedInput, "outer cycle needs length at least 3");
      }
      if (parts.size() == 3) {
        if (parts[2] != "quad" && parts[2] != "mixed") throw Error(ErrorCode::MalformedInput, "unknown interior '" + parts[2] + "'");
        p.triangle_free = parts[2] == "quad";
      }
      return p;
    }
    if (parts[0] == "named" && parts.size() == 2) {
      p.kind = Kind::Named;
      p.name = parts[1];
      return p;
    }
    throw Error(ErrorCode::MalformedInput, "unknown generator profile '" + s + "'");
  }

  std::string str() const {
    switch (kind) {
      case Kind::Triangulation: return "triangulation";
      case Kind::OuterCycle:
        return "outer-cycle" + (k ? ":" + std::to_string(k) : std::string{}) + (triangle_free ? ":quad" : "");
      case Kind::Named: return "named:" + name;
    }
    return "?";
  }
};

namespace detail {

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<uint128>(rng()) * n) >> 64);
}

inline std::int64_t orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Proper crossing of open segments; shared endpoints do not count.
inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto sgn = [](std::int64_t v) { return (v > 0) - (v < 0); };
  const int o1 = sgn(orient(a, b, c)), o2 = sgn(orient(a, b, d));
  const int o3 = sgn(orient(c, d, a)), o4 = sgn(orient(c, d, b));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

struct Drawing {
  std::vector<Point> pts;
  std::vector<std::pair<int, int>> edges;
  /// Boundary vertices in cyclic order when the outer face is prescribed.
  std::vector<int> outer;

  Graph graph() const {
    std::vector<Edge> es;
    for (auto [a, b] : edges) es.emplace_back(a, b);
    return Graph(static_cast<int>(pts.size()), es);
  }

  PlaneGraph build() const {
    std::vector<int> labels(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) labels[i] = static_cast<int>(i);
    return PlaneGraph::from_drawing(labels, pts, edges);
  }

  void remove(int a, int b) {
    Edge e(a, b);
    edges.erase(std::remove_if(edges.begin(), edges.end(), [&](auto p) { return Edge(p.first, p.second) == e; }),
                edges.end());
  }
};

/// Adds points that are pairwise distinct and have no three collinear.
inline bool add_point(std::vector<Point>& pts, Point p) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].x == p.x && pts[i].y == p.y) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (orient(pts[i], pts[j], p) == 0) return false;
  }
  pts.push_back(p);
  return true;
}

/// Greedy triangulation: shortest segments first, kept when they cross no
/// earlier segment. `allow` may veto pairs.
template <class Allow>
std::vector<std::pair<int, int>> greedy_triangulation(const std::vector<Point>& pts, Allow allow) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::tuple<std::int64_t, int, int>> cand;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!allow(a, b)) continue;
      const std::int64_t dx = pts[a].x - pts[b].x, dy = pts[a].y - pts[b].y;
      cand.emplace_back(dx * dx + dy * dy, a, b);
    }
  std::sort(cand.begin(), cand.end());
  std::vector<std::pair<int, int>> edges;
  for (auto [len, a, b] : cand) {
    bool ok = true;
    for (auto [c, d] : edges) {
      if (c == a || c == b || d == a || d == b) continue;
      if (segments_cross(pts[a], pts[b], pts[c], pts[d])) {
        ok = false;
        break;
      }
    }
    if (ok) edges.emplace_back(a, b);
  }
  return edges;
}

inline bool connected_without(const Drawing& d, int a, int b) {
  Graph g = d.graph();
  g.remove_edge(a, b);
  return is_connected(g);
}

inline bool on_outer(const Drawing& d, int a, int b) {
  const auto& o = d.outer;
  for (std::size_t i = 0; i < o.size(); ++i)
    if (Edge(o[i], o[(i + 1) % o.size()]) == Edge(a, b)) return true;
  return false;
}

/// Deletes one edge of the witness, preferring edges between high-degree
/// endpoints so the result stays dense. Returns false if no edge may go.
inline bool delete_from(Drawing& d, const std::vector<Edge>& witness, std::mt19937_64& rng) {
  const Graph g = d.graph();
  std::vector<Edge> best;
  int best_score = -1;
  for (const Edge& e : witness) {
    if (on_outer(d, e.u, e.v) || !connected_without(d, e.u, e.v)) continue;
    const int score = std::min(g.degree(e.u), g.degree(e.v));
    if (score > best_score) {
      best_score = score;
      best.clear();
    }
    if (score == best_score) best.push_back(e);
  }
  if (best.empty()) return false;
  const Edge pick = best[below(rng, best.size())];
  d.remove(pick.u, pick.v);
  return true;
}

inline std::vector<Edge> witness_edges(const Graph& g, const FilterResult& fr) {
  std::vector<Edge> out;
  for (const Witness& w : fr.witnesses) {
    for (auto [a, b] : pattern(w.pattern).edges) out.emplace_back(w.mapping[a], w.mapping[b]);
  }
  for (const Cycle& c : fr.cycle_witness)
    for (const Edge& e : cycle_edges(c)) out.push_back(e);
  (void)g;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool repair(Drawing& d, TheoremId t, std::mt19937_64& rng) {
  for (int guard = 0; guard < 400; ++guard) {
    const Graph g = d.graph();
    const FilterResult fr = hypothesis_filter(g, t);
    if (fr.pass) return true;
    if (!delete_from(d, witness_edges(g, fr), rng)) return false;
  }
  return false;
}

inline bool remove_triangles(Drawing& d, std::mt19937_64& rng) {
  for (int guard = 0; guard < 400; ++guard) {
    const Graph g = d.graph();
    std::vector<Cycle> tri;
    for (auto& c : enumerate_cycles(g, 3)) tri.push_back(c);
    if (tri.empty()) return true;
    if (!delete_from(d, cycle_edges(tri[below(rng, tri.size())]), rng)) return false;
  }
  return false;
}

inline Drawing random_triangulation(int n, std::mt19937_64& rng) {
  Drawing d;
  while (static_cast<int>(d.pts.size()) < n)
    add_point(d.pts, {static_cast<std::int64_t>(below(rng, 1000)), static_cast<std::int64_t>(below(rng, 1000))});
  d.edges = greedy_triangulation(d.pts, [](int, int) { return true; });
  // Random deletions that keep the graph connected.
  auto edges = d.edges;
  for (auto [a, b] : edges)
    if (below(rng, 4) == 0 && connected_without(d, a, b)) d.remove(a, b);
  return d;
}

inline Drawing outer_cycle_drawing(int n, int k, std::mt19937_64& rng) {
  Drawing d;
  const double R = 10000.0;
  const double pi = std::acos(-1.0);
  for (int i = 0; i < k; ++i) {
    const double a = 2 * pi * i / k;
    d.pts.push_back({std::llround(R * std::cos(a)), std::llround(R * std::sin(a))});
    d.outer.push_back(i);
  }
  // Interior points stay inside the inscribed circle of the k-gon.
  const double r = R * std::cos(pi / k) * 0.9;
  int tries = 0;
  while (static_cast<int>(d.pts.size()) < n) {
    if (++tries > 100000) throw Error(ErrorCode::GenerationFailed, "could not place interior points");
    const std::int64_t x = static_cast<std::int64_t>(below(rng, 2 * static_cast<std::uint64_t>(r) + 1)) - static_cast<std::int64_t>(r);
    const std::int64_t y = static_cast<std::int64_t>(below(rng, 2 * static_cast<std::uint64_t>(r) + 1)) - static_cast<std::int64_t>(r);
    if (static_cast<double>(x) * x + static_cast<double>(y) * y > r * r) continue;
    add_point(d.pts, {x, y});
  }
  // Boundary vertices are joined only along the cycle, so no chords appear.
  d.edges = greedy_triangulation(d.pts, [&](int a, int b) {
    if (a >= k || b >= k) return true;
    return (b - a) == 1 || (a == 0 && b == k - 1);
  });
  return d;
}

inline PlaneGraph from_rotation(const std::vector<std::vector<int>>& rot, std::optional<std::vector<int>> outer = {}) {
  RotationTable t;
  for (std::size_t i = 0; i < rot.size(); ++i) t.labels.push_back(static_cast<int>(i));
  t.rotation = rot;
  t.outer = std::move(outer);
  return PlaneGraph::build(t);
}

inline PlaneGraph drawing_of(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& edges) {
  Drawing d;
  d.pts = pts;
  d.edges = edges;
  return d.build();
}

inline PlaneGraph named_graph(const std::string& spec) {
  std::string name = spec;
  int n = 0;
  if (auto p = spec.find_first_of("0123456789"); p != std::string::npos) {
    name = spec.substr(0, p);
    n = std::stoi(spec.substr(p));
  }
  auto ring = [](int m, std::int64_t r, double phase = 0) {
    std::vector<Point> pts;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < m; ++i)
      pts.push_back({std::llround(r * std::cos(phase + 2 * pi * i / m)), std::llround(r * std::sin(phase + 2 * pi * i / m))});
    return pts;
  };
  if ((name == "cycle" || name == "C") && n >= 3) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return drawing_of(ring(n, 1000), e);
  }
  if ((name == "wheel" || name == "W") && n >= 3) {
    auto pts = ring(n, 1000);
    pts.push_back({0, 0});
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
      e.emplace_back(i, (i + 1) % n);
      e.emplace_back(i, n);
    }
    return drawing_of(pts, e);
  }
  if (name == "prism" && n >= 3) {
    auto pts = ring(n, 1000);
    auto in = ring(n, 400);
    pts.insert(pts.end(), in.begin(), in.end());
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
      e.emplace_back(i, (i + 1) % n);
      e.emplace_back(n + i, n + (i + 1) % n);
      e.emplace_back(i, n + i);
    }
    return drawing_of(pts, e);
  }
  if (name == "grid" && n >= 2) {
    std::vector<Point> pts;
    std::vector<std::pair<int, int>> e;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        pts.push_back({c * 100, r * 100});
        if (c + 1 < n) e.emplace_back(r * n + c, r * n + c + 1);
        if (r + 1 < n) e.emplace_back(r * n + c, (r + 1) * n + c);
      }
    return drawing_of(pts, e);
  }
  if (name == "tree" && n >= 1) {
    // A caterpillar: spine 0..(n+1)/2-1 with one leaf per spine vertex.
    std::vector<Point> pts;
    std::vector<std::pair<int, int>> e;
    const int spine = (n + 1) / 2;
    for (int i = 0; i < spine; ++i) {
      pts.push_back({i * 100, 0});
      if (i) e.emplace_back(i - 1, i);
    }
    for (int i = 0; static_cast<int>(pts.size()) < n; ++i) {
      pts.push_back({i * 100, 100});
      e.emplace_back(i, static_cast<int>(pts.size()) - 1);
    }
    return drawing_of(pts, e);
  }
  if (spec == "k3") return named_graph("cycle3");
  if (spec == "k4") return drawing_of({{0, 1000}, {-866, -500}, {866, -500}, {0, 0}},
                                      {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
  if (spec == "bowtie")
    return drawing_of({{-200, 100}, {-200, -100}, {0, 0}, {200, 100}, {200, -100}},
                      {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  if (spec == "house")
    return drawing_of({{0, 0}, {100, 0}, {100, 100}, {0, 100}, {50, 170}},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 3}});
  if (spec == "theta")
    return drawing_of({{0, 100}, {0, -100}, {-100, 0}, {0, 0}, {100, 0}},
                      {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
  if (spec == "diamond")
    return drawing_of({{0, 100}, {-100, 0}, {0, -100}, {100, 0}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
  if (spec == "sink") {
    // Internal 5-face with five 3-faces around it; the outer 10-cycle carries
    // one of the apexes.
    std::vector<Point> pts = ring(5, 100, std::acos(-1.0) / 2);
    auto apex = ring(5, 220, std::acos(-1.0) / 2 + std::acos(-1.0) / 5);
    pts.insert(pts.end(), apex.begin(), apex.end());
    auto outer = ring(10, 600, std::acos(-1.0) / 2 + std::acos(-1.0) / 5);
    pts.insert(pts.end(), outer.begin(), outer.end());
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(5 + i, i);
      e.emplace_back(5 + i, (i + 1) % 5);
      e.emplace_back(10 + 2 * i, 5 + i);
      e.emplace_back(10 + 2 * i + 1, 5 + i);
      e.emplace_back(10 + (2 * i + 9) % 10, 5 + i);
    }
    for (int i = 0; i < 10; ++i) e.emplace_back(10 + i, 10 + (i + 1) % 10);
    return drawing_of(pts, e);
  }
  throw Error(ErrorCode::UnknownId, "unknown named graph '" + spec + "'");
}

}  // namespace detail

/// Deterministic for fixed (profile, n, seed). `n` is ignored by named
/// graphs that fix their own order.
inline PlaneGraph generate(const GenProfile& profile, int n, std::uint64_t seed) {
  if (profile.kind == GenProfile::Kind::Named) return detail::named_graph(profile.name);
  if (n > kMaxGeneratedOrder) throw Error(ErrorCode::TooLarge, "at most " + std::to_string(kMaxGeneratedOrder) + " vertices");
  if (n < 3) throw Error(ErrorCode::MalformedInput, "need at least 3 vertices");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 50; ++attempt) {
    detail::Drawing d;
    if (profile.kind == GenProfile::Kind::Triangulation) {
      d = detail::random_triangulation(n, rng);
    } else {
      int k = profile.k;
      if (k == 0) {
        const int hi = profile.repair_for ? max_precolored_cycle(*profile.repair_for) : 6;
        k = 4 + static_cast<int>(detail::below(rng, static_cast<std::uint64_t>(hi - 3)));
      }
      if (k > n) throw Error(ErrorCode::MalformedInput, "outer cycle longer than the graph");
      d = detail::outer_cycle_drawing(n, k, rng);
      if (profile.triangle_free && !detail::remove_triangles(d, rng)) continue;
    }
    if (profile.repair_for && !detail::repair(d, *profile.repair_for, rng)) continue;
    return d.build();
  }
  throw Error(ErrorCode::GenerationFailed, "retry cap reached for profile " + profile.str());
}

}  // namespace planedp
