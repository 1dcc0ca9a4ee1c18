#pragma once

// Hand-built straight-line drawings, each exhibiting one local case of the
// discharging analysis. Vertex labels are the indices into the point list.

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "planedp/plane_graph.hpp"

namespace crafted {

using planedp::PlaneGraph;
using planedp::Point;

struct Drawn {
  std::vector<Point> pts;
  std::vector<std::pair<int, int>> edges;

  int add(Point p) {
    pts.push_back(p);
    return static_cast<int>(pts.size()) - 1;
  }
  void edge(int a, int b) { edges.emplace_back(a, b); }
  void ring(const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) edge(vs[i], vs[(i + 1) % vs.size()]);
  }
  PlaneGraph build() const {
    std::vector<int> labels(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) labels[i] = static_cast<int>(i);
    return PlaneGraph::from_drawing(labels, pts, edges);
  }
};

inline Point polar(double r, double deg) {
  const double t = deg * std::numbers::pi / 180.0;
  return {std::llround(r * std::cos(t)), std::llround(r * std::sin(t))};
}

/// Internal 4-vertex 0 with two 3-faces (0,1,2) and (0,4,5); outer 6-cycle.
inline PlaneGraph four_two() {
  Drawn d;
  d.pts = {{0, 0}, {0, 10}, {10, 0}, {10, -10}, {0, -10}, {-10, 0}, {-10, 10}};
  d.edges = {{0, 1}, {0, 2}, {0, 4}, {0, 5}};
  d.ring({1, 2, 3, 4, 5, 6});
  return d.build();
}

/// Internal 4-vertex 0 whose only 3-face (0,1,2) is a T_2-face; outer 7-cycle.
/// Across from the triangle is the 4-face 0-4-5-6 (label 5 is the corner c).
inline PlaneGraph four_one_t2() {
  Drawn d;
  d.pts = {{0, 0}, {0, 10}, {10, 0}, {10, -10}, {0, -10}, {-10, -10}, {-10, 0}, {-10, 10}};
  d.edges = {{0, 1}, {0, 2}, {0, 4}, {0, 6}};
  d.ring({1, 2, 3, 4, 5, 6, 7});
  return d.build();
}

/// Inner triangle p q w where w (label 8) is an internal 4_1-vertex and p, q
/// (labels 6, 7) are internal 5-vertices; outer hexagon 0..5.
inline PlaneGraph special_face() {
  Drawn d;
  d.pts = {{50, 0}, {25, 43}, {-25, 43}, {-50, 0}, {-25, -43}, {25, -43},
           {-12, 0}, {12, 0}, {0, 12}, {-10, 25}, {10, 25}, {0, -15}};
  const int p = 6, q = 7, w = 8, a = 9, b = 10, s = 11;
  d.edges = {{p, q}, {q, w}, {w, p}, {w, a}, {w, b}, {a, 2}, {a, 3}, {b, 1}, {b, 0},
             {p, 3}, {p, 4}, {p, s}, {q, 0}, {q, 5}, {q, s}, {s, 4}, {s, 5}};
  d.ring({0, 1, 2, 3, 4, 5});
  return d.build();
}

/// Internal 5-face (labels 0..4) of 4-vertices ringed by five 3-faces. Four
/// apexes are internal 5-vertices; the fifth lies on the outer 10-cycle.
inline PlaneGraph sink() {
  Drawn d;
  std::vector<int> v(5), x(5), ring(10);
  for (int i = 0; i < 5; ++i) v[i] = d.add(polar(100, 90 + 72 * i));
  for (int j = 0; j < 10; ++j) ring[j] = d.add(polar(600, 54 + 36 * j));
  auto ring_at = [&](int deg) {
    const int j = (((deg - 54) % 360 + 360) % 360) / 36;
    return ring[j];
  };
  for (int i = 0; i < 4; ++i) {
    const int theta = 126 + 72 * i;
    x[i] = d.add(polar(220, theta));
    d.edge(x[i], v[i]);
    d.edge(x[i], v[(i + 1) % 5]);
    for (int o : {theta - 36, theta, theta + 36}) d.edge(x[i], ring_at(o));
  }
  x[4] = ring_at(54);
  d.edge(x[4], v[4]);
  d.edge(x[4], v[0]);
  d.ring(v);
  d.ring(ring);
  return d.build();
}

/// Internal 5-face 0..4 whose vertices 0 and 1 are 4_2-vertices and whose
/// vertices 2, 3, 4 are 4-vertices with a single T_2-face; outer 9-cycle.
inline PlaneGraph five_face_mrb() {
  Drawn d;
  std::vector<int> p(5);
  for (int i = 0; i < 5; ++i) p[i] = d.add(polar(100, 90 + 72 * i));
  std::vector<int> ring;
  std::vector<int> angles{0, 36, 72, 126, 180, 216, 252, 288, 324};
  for (int a : angles) ring.push_back(d.add(polar(400, a)));
  auto at = [&](int a) {
    for (std::size_t i = 0; i < angles.size(); ++i)
      if (angles[i] == a) return ring[i];
    return -1;
  };
  const std::vector<std::pair<int, int>> spokes{{72, 126}, {126, 180}, {216, 252}, {288, 324}, {0, 36}};
  for (int i = 0; i < 5; ++i) {
    d.edge(p[i], at(spokes[i].first));
    d.edge(p[i], at(spokes[i].second));
  }
  d.ring(p);
  d.ring(ring);
  return d.build();
}

/// Internal hub 0 of degree `deg` >= 5 with exactly two incident 3-faces; every
/// other face at the hub is a 4-face. Outer cycle of length 2*deg-2.
inline PlaneGraph hub(int deg) {
  Drawn d;
  const int z = d.add({0, 0});
  const int len = 2 * deg - 2;
  std::vector<int> ring, spokes;
  int slot = 0;
  for (int i = 0; i < deg; ++i) {
    const int r = d.add(polar(1000, 360.0 * slot++ / len));
    ring.push_back(r);
    spokes.push_back(r);
    if (i != 0 && i != 3) ring.push_back(d.add(polar(1000, 360.0 * slot++ / len)));
  }
  for (int r : spokes) d.edge(z, r);
  d.ring(ring);
  return d.build();
}

/// 4x4 grid with its 12-cycle boundary as the outer face.
inline PlaneGraph grid4() {
  Drawn d;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) d.add({10 * c, 10 * r});
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (c + 1 < 4) d.edge(4 * r + c, 4 * r + c + 1);
      if (r + 1 < 4) d.edge(4 * r + c, 4 * r + c + 4);
    }
  return d.build();
}

/// Outer 6-cycle 0..5 crossed by the internal path 0-6-7-3, which splits the
/// disk into two 6-faces in N.
inline PlaneGraph six_faces_in_n() {
  Drawn d;
  for (int i = 0; i < 6; ++i) d.add(polar(100, 60 * i));
  d.add({33, 0});
  d.add({-33, 0});
  d.ring({0, 1, 2, 3, 4, 5});
  d.edge(0, 6);
  d.edge(6, 7);
  d.edge(7, 3);
  return d.build();
}

/// K4 drawn with an outer triangle, so the center is an internal 3-vertex.
inline PlaneGraph k4_center() {
  Drawn d;
  d.pts = {{0, 0}, {0, 100}, {-87, -50}, {87, -50}};
  d.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};
  return d.build();
}

}  // namespace crafted
