#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planedp/graph.hpp"
#include "planedp/theorem.hpp"

namespace planedp {

enum class PatternId { FIG1_A, FIG1_B, FIG1_C, FIG2_A, FIG2_B, FIG2_C, FIG3_A, FIG3_B, FIG4_A, FIG4_B };

struct ConfigPattern {
  PatternId id;
  std::string name;
  /// Names of the pattern vertices, index-aligned.
  std::vector<std::string> vertex_names;
  std::vector<std::pair<int, int>> edges;
  std::string description;

  int order() const { return static_cast<int>(vertex_names.size()); }

  Graph graph() const {
    Graph g(order());
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }
};

/// The forbidden configurations. A drawn crossing with a filled dot is a
/// vertex subdividing both segments.
inline const std::vector<ConfigPattern>& pattern_library() {
  static const std::vector<ConfigPattern> lib = {
      {PatternId::FIG1_A, "FIG1_A", {"A", "B", "C", "D", "H"},
       {{0, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}},
       "house: triangle AHB sharing edge AB with 4-cycle ABCD"},
      {PatternId::FIG1_B, "FIG1_B", {"A", "B", "C", "D", "H", "X", "Y", "Z"},
       {{0, 5}, {5, 7}, {7, 4}, {4, 6}, {6, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 1}, {4, 5}},
       "5-cycle AHBCD with triangles AXH, HYB on consecutive edges and triangle XZH on edge XH"},
      {PatternId::FIG1_C, "FIG1_C", {"A", "B", "C", "D", "H", "X", "Y", "Z"},
       {{0, 7}, {7, 5}, {5, 4}, {4, 6}, {6, 1}, {1, 2}, {2, 3}, {3, 0}, {5, 0}, {0, 4}, {4, 1}},
       "5-cycle AHBCD with triangles AXH, HYB on consecutive edges and triangle AZX on edge AX"},
      {PatternId::FIG2_A, "FIG2_A", {"A", "B", "C", "D"},
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}},
       "two triangles ABD, BCD sharing edge BD (4-cycle with a chord)"},
      {PatternId::FIG2_B, "FIG2_B", {"A", "B", "C", "D", "E", "O"},
       {{0, 1}, {1, 5}, {5, 3}, {3, 2}, {2, 5}, {5, 0}, {0, 4}, {4, 3}},
       "triangles ABO, CDO sharing only O, plus 4-cycle OAED through O"},
      {PatternId::FIG2_C, "FIG2_C", {"A", "B", "C", "D", "E", "F", "G", "H"},
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 2}, {2, 5}, {5, 7}},
       "4-cycle ACFH with triangles ABC, FGH on opposite edges and 4-cycle CDEF on edge CF"},
      {PatternId::FIG3_A, "FIG3_A", {"A", "B", "C", "D", "O"},
       {{0, 1}, {1, 4}, {4, 3}, {3, 2}, {2, 4}, {4, 0}},
       "bowtie: triangles ABO, CDO sharing exactly vertex O"},
      {PatternId::FIG3_B, "FIG3_B", {"O", "A", "B", "C", "D", "E"},
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {3, 0}, {0, 4}},
       "triangles COD, ODE sharing edge OD, plus 4-cycle OABC on edge OC"},
      {PatternId::FIG4_A, "FIG4_A", {"A", "B", "C", "D", "H"},
       {{0, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}},
       "house: triangle AHB sharing edge AB with 4-cycle ABCD"},
      {PatternId::FIG4_B, "FIG4_B", {"A", "B", "C", "D", "H", "X", "Y"},
       {{0, 5}, {5, 4}, {4, 6}, {6, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 1}},
       "5-cycle AHBCD with triangles AXH, HYB on consecutive edges AH, HB"},
  };
  return lib;
}

inline const ConfigPattern& pattern(PatternId id) {
  for (const auto& p : pattern_library())
    if (p.id == id) return p;
  throw Error(ErrorCode::UnknownId, "pattern");
}

inline const ConfigPattern& pattern(std::string_view name) {
  for (const auto& p : pattern_library())
    if (p.name == name) return p;
  throw Error(ErrorCode::UnknownId, "pattern " + std::string(name));
}

inline std::vector<PatternId> patterns_for(TheoremId t) {
  switch (t) {
    case TheoremId::MRTHREE: return {PatternId::FIG1_A, PatternId::FIG1_B, PatternId::FIG1_C};
    case TheoremId::MRA: return {PatternId::FIG2_A, PatternId::FIG2_B, PatternId::FIG2_C};
    case TheoremId::MRB: return {PatternId::FIG3_A, PatternId::FIG3_B};
    case TheoremId::MRC: return {PatternId::FIG4_A, PatternId::FIG4_B};
    case TheoremId::LL: return {};
  }
  return {};
}

struct Witness {
  PatternId pattern;
  /// Host vertex for each pattern vertex.
  std::vector<int> mapping;
};

namespace detail {

// Each next pattern vertex has the most already placed neighbors; ties go to
// the larger degree, then the smaller index.
inline std::vector<int> match_order(const Graph& p) {
  std::vector<int> order;
  std::vector<bool> placed(p.order(), false);
  while (static_cast<int>(order.size()) < p.order()) {
    int best = -1, best_links = -1;
    for (int v = 0; v < p.order(); ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int w : p.neighbors(v)) links += placed[w] ? 1 : 0;
      if (best < 0 || links > best_links || (links == best_links && p.degree(v) > p.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

}  // namespace detail

/// First (not necessarily induced) subgraph of `host` isomorphic to the
/// pattern, under ascending host-vertex candidate order.
inline std::optional<Witness> contains(const Graph& host, const ConfigPattern& pat) {
  const Graph p = pat.graph();
  if (p.order() > host.order() || p.size() > host.size()) return std::nullopt;
  const auto order = detail::match_order(p);
  std::vector<int> map(p.order(), -1);
  std::vector<bool> used(host.order(), false);

  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int pv = order[i];
    for (int hv = 0; hv < host.order(); ++hv) {
      if (used[hv] || host.degree(hv) < p.degree(pv)) continue;
      bool ok = true;
      for (int pw : p.neighbors(pv))
        if (map[pw] >= 0 && !host.adjacent(hv, map[pw])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[pv] = hv;
      used[hv] = true;
      if (self(self, i + 1)) return true;
      map[pv] = -1;
      used[hv] = false;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return Witness{pat.id, map};
}

inline std::optional<Witness> contains(const Graph& host, PatternId id) { return contains(host, pattern(id)); }

// ---------------------------------------------------------------------------
// Generic cycle predicates

struct CyclePredicate {
  bool holds = false;
  std::vector<Cycle> witness;
};

struct GenericPredicates {
  CyclePredicate adjacent_triangles;
  CyclePredicate intersecting_triangles;
  CyclePredicate triangle_adjacent_to_4cycle;
  CyclePredicate four_cycle_adjacent_to_two_triangles;
};

inline GenericPredicates generic_predicates(const Graph& g, CycleLimits limits = {}) {
  GenericPredicates r;
  std::vector<Cycle> tri, quad;
  for (auto& c : enumerate_cycles(g, 4, limits)) (c.size() == 3 ? tri : quad).push_back(std::move(c));
  for (std::size_t i = 0; i < tri.size(); ++i) {
    for (std::size_t j = i + 1; j < tri.size(); ++j) {
      if (!r.adjacent_triangles.holds && cycles_share_edge(tri[i], tri[j]))
        r.adjacent_triangles = {true, {tri[i], tri[j]}};
      if (!r.intersecting_triangles.holds && cycles_intersect(tri[i], tri[j]))
        r.intersecting_triangles = {true, {tri[i], tri[j]}};
    }
  }
  for (const Cycle& q : quad) {
    std::vector<const Cycle*> adj;
    for (const Cycle& t : tri)
      if (cycles_share_edge(q, t)) adj.push_back(&t);
    if (!adj.empty() && !r.triangle_adjacent_to_4cycle.holds) r.triangle_adjacent_to_4cycle = {true, {*adj[0], q}};
    if (adj.size() >= 2 && !r.four_cycle_adjacent_to_two_triangles.holds)
      r.four_cycle_adjacent_to_two_triangles = {true, {q, *adj[0], *adj[1]}};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Hypothesis filter

struct FilterResult {
  bool pass = true;
  std::vector<Witness> witnesses;
  /// Cycle witness for the LL predicate (4-cycle first, then its two triangles).
  std::vector<Cycle> cycle_witness;
};

/// A graph passes when it contains none of the theorem's configurations. LL
/// uses the cycle predicate "4-cycle adjacent to two triangles" instead.
inline FilterResult hypothesis_filter(const Graph& g, TheoremId theorem) {
  FilterResult r;
  if (theorem == TheoremId::LL) {
    auto p = generic_predicates(g);
    if (p.four_cycle_adjacent_to_two_triangles.holds) {
      r.pass = false;
      r.cycle_witness = p.four_cycle_adjacent_to_two_triangles.witness;
    }
    return r;
  }
  for (PatternId id : patterns_for(theorem)) {
    if (auto w = contains(g, id)) {
      r.pass = false;
      r.witnesses.push_back(std::move(*w));
    }
  }
  return r;
}

}  // namespace planedp
