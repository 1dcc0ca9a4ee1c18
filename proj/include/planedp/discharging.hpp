#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "planedp/charge.hpp"
#include "planedp/plane_graph.hpp"
#include "planedp/theorem.hpp"

namespace planedp {

/// Something that can hold charge: a vertex, a face, or a special edge used
/// as a pass-through account by the boundary rule.
struct Element {
  enum class Kind { Vertex, Face, Edge };
  Kind kind = Kind::Vertex;
  int a = 0;
  int b = -1;

  static Element vertex(int v) { return {Kind::Vertex, v, -1}; }
  static Element face(int f) { return {Kind::Face, f, -1}; }
  static Element edge(const Edge& e) { return {Kind::Edge, e.u, e.v}; }

  friend auto operator<=>(const Element&, const Element&) = default;
};

inline std::string element_name(const PlaneGraph& g, const Element& e) {
  switch (e.kind) {
    case Element::Kind::Vertex: return "v" + std::to_string(g.label(e.a));
    case Element::Kind::Face: return e.a == g.outer_face() ? std::string("D") : "f" + std::to_string(e.a);
    case Element::Kind::Edge: return "e" + std::to_string(g.label(e.a)) + "-" + std::to_string(g.label(e.b));
  }
  return "?";
}

struct Transfer {
  std::string rule;
  Element from;
  Element to;
  Quarter amount;
};

struct RuleTotal {
  std::string rule;
  Quarter total;
};

class ChargeLedger {
 public:
  std::vector<Element> elements;
  std::map<Element, Quarter> initial;
  std::map<Element, Quarter> balance;
  std::vector<Transfer> transfers;
  /// Total charge after each rule, in application order.
  std::vector<RuleTotal> after_rule;
  /// Balances right before TOD (MRC only).
  std::optional<std::map<Element, Quarter>> before_tod;
  /// Total sent to D by TOD.
  Quarter surplus_to_D;
  std::vector<std::string> flags;
  std::optional<TheoremId> ruleset;

  Quarter initial_of(const Element& e) const { return lookup(initial, e); }
  Quarter final_of(const Element& e) const { return lookup(balance, e); }

  Quarter initial_total() const { return sum(initial); }
  Quarter final_total() const { return sum(balance); }

  void move(const std::string& rule, const Element& from, const Element& to, Quarter amount) {
    if (amount == Quarter{}) return;
    balance[from] -= amount;
    balance[to] += amount;
    transfers.push_back({rule, from, to, amount});
  }

  void close_rule(const std::string& rule) { after_rule.push_back({rule, final_total()}); }

  /// Sum of transfers into `to` from elements of the given kind.
  Quarter inflow_from(const Element& to, Element::Kind kind) const {
    Quarter s;
    for (const auto& t : transfers)
      if (t.to == to && t.from.kind == kind) s += t.amount;
    return s;
  }

  Quarter inflow(const Element& e) const {
    Quarter s;
    for (const auto& t : transfers)
      if (t.to == e) s += t.amount;
    return s;
  }

  Quarter outflow(const Element& e) const {
    Quarter s;
    for (const auto& t : transfers)
      if (t.from == e) s += t.amount;
    return s;
  }

 private:
  static Quarter lookup(const std::map<Element, Quarter>& m, const Element& e) {
    auto it = m.find(e);
    if (it == m.end()) throw Error(ErrorCode::UnknownId, "element not in ledger");
    return it->second;
  }
  static Quarter sum(const std::map<Element, Quarter>& m) {
    Quarter s;
    for (const auto& [e, q] : m) s += q;
    return s;
  }
};

/// mu(v) = 2deg(v) - 6, mu(f) = deg(f) - 6, mu(D) = deg(D) + 6.
inline ChargeLedger initial_charges(const PlaneGraph& g) {
  if (g.outer_face() < 0) throw Error(ErrorCode::MalformedInput, "graph has no outer face");
  ChargeLedger L;
  auto put = [&](const Element& e, Quarter q) {
    L.elements.push_back(e);
    L.initial[e] = q;
    L.balance[e] = q;
  };
  for (int v = 0; v < g.order(); ++v) put(Element::vertex(v), Quarter::whole(2 * g.degree(v) - 6));
  for (int f = 0; f < g.face_count(); ++f) {
    const int d = g.face(f).degree();
    put(Element::face(f), Quarter::whole(f == g.outer_face() ? d + 6 : d - 6));
  }
  if (L.initial_total() != Quarter{})
    throw Error(ErrorCode::EulerSumNonzero, "initial charge sum is " + L.initial_total().reduced());
  return L;
}

// ---------------------------------------------------------------------------
// Preconditions

struct PreconditionCheck {
  std::string id;
  bool pass = true;
  std::string witness;
};

struct PreconditionReport {
  TheoremId theorem = TheoremId::MRA;
  std::vector<PreconditionCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
  const PreconditionCheck* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c.id);
    return out;
  }
};

namespace detail {

inline std::string vertex_list(const PlaneGraph& g, const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : " ") + std::to_string(g.label(v));
  return s;
}

/// Empty when the outer boundary is an induced cycle; otherwise a reason.
inline std::string outer_cycle_defect(const PlaneGraph& g, const Classification& cls) {
  const auto& w = g.face(g.outer_face()).walk;
  std::set<int> distinct(w.begin(), w.end());
  if (w.size() < 3 || distinct.size() != w.size()) return "outer boundary walk " + vertex_list(g, w) + " is not a cycle";
  for (const Edge& e : g.graph().edges()) {
    if (!cls.on_outer[e.u] || !cls.on_outer[e.v]) continue;
    if (!std::binary_search(cls.outer_edges.begin(), cls.outer_edges.end(), e))
      return "chord " + edge_name(g.graph(), e);
  }
  return {};
}

inline bool has_internal_vertex(const Classification& cls) {
  return std::any_of(cls.vertices.begin(), cls.vertices.end(), [](const auto& v) { return v.is_internal; });
}

}  // namespace detail

/// Runs the structural checks a minimal counterexample satisfies for the
/// given theorem. Failures are reported, never thrown.
inline PreconditionReport check_preconditions(const PlaneGraph& g, TheoremId theorem, CycleLimits limits = {}) {
  if (theorem != TheoremId::MRA && theorem != TheoremId::MRB && theorem != TheoremId::MRC)
    throw Error(ErrorCode::MalformedInput, "no precondition set for " + std::string(to_string(theorem)));
  PreconditionReport rep;
  rep.theorem = theorem;
  const Classification cls = classify(g);
  auto add = [&](std::string id, std::string witness) {
    rep.checks.push_back({std::move(id), witness.empty(), std::move(witness)});
  };
  if (cls.empty()) {
    add("outer_induced_cycle", "graph has fewer than three vertices");
    return rep;
  }
  const bool A = theorem == TheoremId::MRA, B = theorem == TheoremId::MRB, C = theorem == TheoremId::MRC;
  const int n = g.order();
  const int outer = g.outer_face();

  add("outer_induced_cycle", detail::outer_cycle_defect(g, cls));
  {
    const int d = g.face(outer).degree();
    add("outer_cycle_length", d <= max_precolored_cycle(theorem)
                                  ? std::string{}
                                  : "outer face has degree " + std::to_string(d));
  }
  add("has_internal_vertex", detail::has_internal_vertex(cls) ? std::string{} : "every vertex is on the outer face");
  if (A) add("biconnected", is_biconnected(g.graph()) ? std::string{} : "graph has a cut vertex");

  {
    std::string w;
    for (const auto& vc : cls.vertices)
      if (vc.is_internal && vc.degree < 4) {
        w = "internal vertex " + std::to_string(g.label(vc.vertex)) + " has degree " + std::to_string(vc.degree);
        break;
      }
    add("internal_min_degree_4", w);
  }
  {
    std::string w;
    auto sep = separating_cycles(g, 3, separating_cycle_bound(theorem), limits);
    if (!sep.empty()) w = "separating cycle " + cycle_name(g.graph(), sep.front().cycle);
    add("no_separating_cycle", w);
  }
  if (A || C) {
    // A vertex off the boundary adjacent to two nonconsecutive boundary vertices.
    std::string w;
    const auto& ow = g.face(outer).walk;
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < ow.size(); ++i) pos[ow[i]] = static_cast<int>(i);
    const int len = static_cast<int>(ow.size());
    for (int z = 0; z < n && w.empty(); ++z) {
      if (cls.on_outer[z]) continue;
      std::vector<int> on;
      for (int x : g.graph().neighbors(z))
        if (cls.on_outer[x]) on.push_back(x);
      for (std::size_t i = 0; i < on.size() && w.empty(); ++i)
        for (std::size_t j = i + 1; j < on.size() && w.empty(); ++j) {
          int d = std::abs(pos[on[i]] - pos[on[j]]);
          if (pos[on[i]] < 0 || pos[on[j]] < 0) continue;
          if (d != 1 && d != len - 1)
            w = "vertex " + std::to_string(g.label(z)) + " adjacent to " + std::to_string(g.label(on[i])) + " and " +
                std::to_string(g.label(on[j]));
        }
    }
    add("no_common_inner_neighbor", w);
  }
  if (A || B) {
    std::string w;
    for (const auto& vc : cls.vertices) {
      if (!cls.is_4k(vc.vertex, 2)) continue;
      for (int i = 0; i < vc.degree && w.empty(); ++i) {
        int f = g.corner_face(vc.vertex, i);
        if (f != outer && g.face(f).degree() == 4)
          w = "4_2-vertex " + std::to_string(g.label(vc.vertex)) + " on 4-face f" + std::to_string(f);
      }
      if (!w.empty()) break;
    }
    add("no_4_2_vertex_on_4_face", w);
  }
  if (B) {
    std::string w;
    for (const auto& vc : cls.vertices)
      if (vc.degree >= 4 && vc.incident_triangle_count > 2) {
        w = "vertex " + std::to_string(g.label(vc.vertex)) + " on " + std::to_string(vc.incident_triangle_count) +
            " 3-faces";
        break;
      }
    add("at_most_two_3_faces_per_vertex", w);
  }
  if (A || B) {
    std::string w;
    for (const auto& fc : cls.faces) {
      if (!fc.is_special) continue;
      std::vector<int> deg;
      for (int v : g.face(fc.face).walk) deg.push_back(g.degree(v));
      std::sort(deg.begin(), deg.end());
      if (!(deg[0] == 4 && deg[1] >= 5)) {
        w = "special face f" + std::to_string(fc.face) + " on " + detail::vertex_list(g, g.face(fc.face).walk);
        break;
      }
    }
    add("special_faces_4_5p_5p", w);
  }
  if (A) {
    std::string w_outer, w_deg;
    for (const Sink& s : sinks_and_sources(g, cls)) {
      int on = 0;
      for (int x : s.sources) {
        on += cls.on_outer[x] ? 1 : 0;
        if (!cls.on_outer[x] && g.degree(x) < 5 && w_deg.empty())
          w_deg = "sink f" + std::to_string(s.face) + " has internal source " + std::to_string(g.label(x)) +
                  " of degree " + std::to_string(g.degree(x));
      }
      if (on > 1 && w_outer.empty())
        w_outer = "sink f" + std::to_string(s.face) + " has " + std::to_string(on) + " sources on the outer cycle";
    }
    add("sink_outer_sources_at_most_1", w_outer);
    add("sink_internal_sources_5p", w_deg);
  }
  if (A || B) {
    bool found = false;
    for (const Edge& e : cls.special_edges) {
      auto [f1, f2] = g.edge_faces(e);
      for (int f : {f1, f2})
        found = found || (f != outer && g.face(f).degree() >= 4);
    }
    add("fourplus_face_on_special_edge", found ? std::string{} : "no 4+-face is incident with a special edge");
  }
  if (C) {
    std::string w;
    for (const auto& fc : cls.faces) {
      if (fc.is_outer || fc.degree != 4) continue;
      for (int h : neighbor_faces(g, fc.face))
        if (g.face(h).degree() < 4) {
          w = "4-face f" + std::to_string(fc.face) + " adjacent to 3-face f" + std::to_string(h);
          break;
        }
      if (!w.empty()) break;
    }
    add("four_faces_adjacent_to_4p_faces", w);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rules

inline std::vector<std::string> rule_order(TheoremId t) {
  switch (t) {
    case TheoremId::MRA: return {"R1a", "R1b", "R1c", "R1d", "R2", "R3", "R4"};
    case TheoremId::MRB: return {"R1a", "R1b", "R2", "R3"};
    case TheoremId::MRC: return {"R1a", "R1b", "R1c", "R2", "R3", "TOD"};
    default: throw Error(ErrorCode::MalformedInput, "no rule set for " + std::string(to_string(t)));
  }
}

namespace detail {

struct RuleContext {
  const PlaneGraph& g;
  const Classification& cls;
  ChargeLedger& L;

  int deg_face(int f) const { return g.face(f).degree(); }
  bool is_tri(int f) const { return f != g.outer_face() && deg_face(f) == 3; }
  int corner(int v, int i) const {
    const int d = g.degree(v);
    return g.corner_face(v, ((i % d) + d) % d);
  }
  std::string vname(int v) const { return std::to_string(g.label(v)); }
  void send(const std::string& rule, int v, int f, Quarter q) {
    L.move(rule, Element::vertex(v), Element::face(f), q);
  }
};

// A 4_1-vertex with its 3-face at corner i: 1 to that face, 1/2 across, 1/4
// to each 4+-face on the two sides. Each side face is paid once.
inline void one_triangle_split(RuleContext& c, const std::string& rule, int v, int i) {
  const int gface = c.corner(v, i);
  c.send(rule, v, gface, Quarter::whole(1));
  const int across = c.corner(v, i + 2);
  c.send(rule, v, across, Quarter::frac(1, 2));
  const int s1 = c.corner(v, i - 1), s2 = c.corner(v, i + 1);
  std::set<int> paid;
  for (int s : {s1, s2}) {
    if (s == gface || c.deg_face(s) < 4 || !paid.insert(s).second) continue;
    c.send(rule, v, s, Quarter::frac(1, 4));
  }
  if (s1 == s2 || s1 == across || s2 == across || s1 == gface || s2 == gface)
    c.L.flags.push_back(rule + ": faces around 4-vertex " + c.vname(v) + " repeat");
}

inline int triangle_corner(const RuleContext& c, int v) {
  for (int i = 0; i < c.g.degree(v); ++i)
    if (c.is_tri(c.corner(v, i))) return i;
  return -1;
}

inline void rules_mra(RuleContext& c) {
  const int n = c.g.order();
  std::vector<int> four;
  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (vc.is_internal && vc.degree == 4) four.push_back(v);
    if (vc.is_internal && vc.degree == 4 && vc.incident_triangle_count > 2)
      c.L.flags.push_back("R1: internal 4-vertex " + c.vname(v) + " has " +
                          std::to_string(vc.incident_triangle_count) + " 3-faces and no rule");
  }
  for (int v : four)
    if (c.cls.vertices[v].incident_triangle_count == 2)
      for (int i = 0; i < 4; ++i)
        if (c.is_tri(c.corner(v, i))) c.send("R1a", v, c.corner(v, i), Quarter::whole(1));
  c.L.close_rule("R1a");

  std::vector<int> r1c;
  for (int v : four) {
    if (c.cls.vertices[v].incident_triangle_count != 1) continue;
    int t2 = 0, at = -1;
    for (int i = 0; i < 4; ++i) {
      int f = c.corner(v, i);
      if (c.is_tri(f) && c.cls.faces[f].t_index() == 2) {
        ++t2;
        at = i;
      }
    }
    if (t2 > 1) throw Error(ErrorCode::RuleAmbiguity, "R1b: vertex " + c.vname(v) + " has two T_2-faces");
    if (t2 == 1)
      one_triangle_split(c, "R1b", v, at);
    else
      r1c.push_back(v);
  }
  c.L.close_rule("R1b");
  for (int v : r1c)
    for (int i = 0; i < 4; ++i) c.send("R1c", v, c.corner(v, i), Quarter::frac(1, 2));
  c.L.close_rule("R1c");
  for (int v : four)
    if (c.cls.vertices[v].incident_triangle_count == 0)
      for (int i = 0; i < 4; ++i) c.send("R1d", v, c.corner(v, i), Quarter::frac(1, 2));
  c.L.close_rule("R1d");

  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (!vc.is_internal || vc.degree < 5) continue;
    for (int i = 0; i < vc.degree; ++i) {
      int f = c.corner(v, i);
      if (!c.is_tri(f))
        c.send("R2", v, f, Quarter::frac(1, 2));
      else
        c.send("R2", v, f, c.cls.faces[f].is_special ? Quarter::frac(5, 4) : Quarter::whole(1));
    }
  }
  c.L.close_rule("R2");
}

inline void rules_mrb(RuleContext& c) {
  const int n = c.g.order();
  const int outer = c.g.outer_face();
  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (vc.is_internal && vc.degree == 4 && vc.incident_triangle_count == 2)
      for (int i = 0; i < 4; ++i)
        if (c.is_tri(c.corner(v, i))) c.send("R1a", v, c.corner(v, i), Quarter::whole(1));
    if (vc.is_internal && vc.degree == 4 && vc.incident_triangle_count > 2)
      c.L.flags.push_back("R1: internal 4-vertex " + c.vname(v) + " has " +
                          std::to_string(vc.incident_triangle_count) + " 3-faces and no rule");
  }
  c.L.close_rule("R1a");
  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (!vc.is_internal || vc.degree != 4 || vc.incident_triangle_count > 1) continue;
    for (int i = 0; i < 4; ++i) {
      const int f = c.corner(v, i);
      const auto& fc = c.cls.faces[f];
      if (f == outer) continue;
      if (fc.degree == 3)
        c.send("R1b", v, f, fc.t_index() == 2 ? Quarter::whole(1) : Quarter::frac(1, 2));
      else if (fc.is_internal && fc.degree <= 5)
        c.send("R1b", v, f, Quarter::frac(1, 2));
      else if (fc.in_N)
        c.send("R1b", v, f, Quarter::frac(1, 4));
    }
  }
  c.L.close_rule("R1b");
  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (!vc.is_internal || vc.degree < 5) continue;
    for (int i = 0; i < vc.degree; ++i) {
      int f = c.corner(v, i);
      c.send("R2", v, f, c.is_tri(f) ? Quarter::frac(5, 4) : Quarter::frac(1, 2));
    }
  }
  c.L.close_rule("R2");
}

inline void rules_mrc(RuleContext& c) {
  const int n = c.g.order();
  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (vc.is_internal && vc.degree == 4 && vc.incident_triangle_count == 2)
      for (int i = 0; i < 4; ++i)
        if (c.is_tri(c.corner(v, i))) c.send("R1a", v, c.corner(v, i), Quarter::whole(1));
    if (vc.is_internal && vc.degree == 4 && vc.incident_triangle_count > 2)
      c.L.flags.push_back("R1: internal 4-vertex " + c.vname(v) + " has " +
                          std::to_string(vc.incident_triangle_count) + " 3-faces and no rule");
  }
  c.L.close_rule("R1a");
  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (vc.is_internal && vc.degree == 4 && vc.incident_triangle_count == 1)
      one_triangle_split(c, "R1b", v, triangle_corner(c, v));
  }
  c.L.close_rule("R1b");
  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (vc.is_internal && vc.degree == 4 && vc.incident_triangle_count == 0)
      for (int i = 0; i < 4; ++i) c.send("R1c", v, c.corner(v, i), Quarter::frac(1, 2));
  }
  c.L.close_rule("R1c");
  for (int v = 0; v < n; ++v) {
    const auto& vc = c.cls.vertices[v];
    if (!vc.is_internal || vc.degree < 5) continue;
    for (int i = 0; i < vc.degree; ++i) {
      int f = c.corner(v, i);
      c.send("R2", v, f, c.is_tri(f) ? Quarter::whole(1) : Quarter::frac(1, 2));
    }
  }
  c.L.close_rule("R2");
}

inline void rule_boundary(RuleContext& c) {
  const Element D = Element::face(c.g.outer_face());
  for (int v = 0; v < c.g.order(); ++v)
    if (c.cls.on_outer[v]) {
      const Element ev = Element::vertex(v);
      c.L.move("R3", ev, D, c.L.initial_of(ev));
    }
  for (const Edge& e : c.cls.special_edges) {
    const Element ee = Element::edge(e);
    c.L.move("R3", D, ee, Quarter::whole(2));
    c.L.move("R3", ee, Element::face(c.g.face_of_dart(e.u, e.v)), Quarter::whole(1));
    c.L.move("R3", ee, Element::face(c.g.face_of_dart(e.v, e.u)), Quarter::whole(1));
  }
  c.L.close_rule("R3");
}

inline void rule_source(RuleContext& c) {
  for (const Sink& s : sinks_and_sources(c.g, c.cls)) {
    for (std::size_t i = 0; i < s.sources.size(); ++i) {
      const int z = s.sources[i];
      const auto& zc = c.cls.vertices[z];
      if (!zc.is_internal || zc.degree < 5) continue;
      if (c.cls.faces[s.via_faces[i]].is_special)
        c.L.flags.push_back("R4: vertex " + c.vname(z) + " pays R2 and R4 through special face f" +
                            std::to_string(s.via_faces[i]));
      c.send("R4", z, s.face, Quarter::frac(1, 4));
    }
  }
  c.L.close_rule("R4");
}

inline void rule_tod(RuleContext& c) {
  c.L.before_tod = c.L.balance;
  const Element D = Element::face(c.g.outer_face());
  Quarter p;
  for (int f = 0; f < c.g.face_count(); ++f) {
    if (f == c.g.outer_face()) continue;
    const Element ef = Element::face(f);
    const Quarter q = c.L.final_of(ef);
    if (q > Quarter{}) {
      c.L.move("TOD", ef, D, q);
      p += q;
    }
  }
  c.L.surplus_to_D = p;
  c.L.close_rule("TOD");
}

}  // namespace detail

/// Applies the rule system of `theorem` in its fixed order. The boundary rule
/// needs an induced outer cycle and at least one vertex off it; otherwise this
/// throws PreconditionViolated.
inline ChargeLedger apply_rules(const PlaneGraph& g, TheoremId theorem) {
  rule_order(theorem);
  ChargeLedger L = initial_charges(g);
  L.ruleset = theorem;
  const Classification cls = classify(g);
  if (cls.empty()) throw Error(ErrorCode::PreconditionViolated, "graph has fewer than three vertices");
  if (auto d = detail::outer_cycle_defect(g, cls); !d.empty()) throw Error(ErrorCode::PreconditionViolated, d);
  if (!detail::has_internal_vertex(cls))
    throw Error(ErrorCode::PreconditionViolated, "every vertex is on the outer face");
  for (const Edge& e : cls.special_edges) {
    L.elements.push_back(Element::edge(e));
    L.initial[Element::edge(e)] = Quarter{};
    L.balance[Element::edge(e)] = Quarter{};
  }

  detail::RuleContext c{g, cls, L};
  switch (theorem) {
    case TheoremId::MRA:
      detail::rules_mra(c);
      detail::rule_boundary(c);
      detail::rule_source(c);
      break;
    case TheoremId::MRB:
      detail::rules_mrb(c);
      detail::rule_boundary(c);
      break;
    case TheoremId::MRC:
      detail::rules_mrc(c);
      detail::rule_boundary(c);
      detail::rule_tod(c);
      break;
    default: break;
  }
  for (const auto& rt : L.after_rule)
    if (rt.total != L.initial_total())
      throw Error(ErrorCode::EulerSumNonzero, "charge not conserved by " + rt.rule);
  return L;
}

// ---------------------------------------------------------------------------
// Verdict

struct Violation {
  Element element;
  Quarter value;
  /// "final" or "before-TOD".
  std::string stage;
};

struct Verdict {
  bool all_nonnegative = true;
  std::optional<Element> positive_witness;
  std::vector<Violation> violations;

  bool holds() const { return all_nonnegative && positive_witness.has_value(); }
};

inline Verdict verdict(const PlaneGraph& g, const ChargeLedger& L) {
  if (!L.ruleset) throw Error(ErrorCode::MalformedInput, "ledger has no rules applied");
  Verdict v;
  const Element D = Element::face(g.outer_face());
  if (*L.ruleset == TheoremId::MRC) {
    const auto& pre = L.before_tod ? *L.before_tod : L.balance;
    for (const Element& e : L.elements) {
      if (e == D) continue;
      if (pre.at(e) < Quarter{}) v.violations.push_back({e, pre.at(e), "before-TOD"});
    }
    if (L.final_of(D) < Quarter{}) v.violations.push_back({D, L.final_of(D), "final"});
    v.all_nonnegative = v.violations.empty();
    if (L.final_of(D) > Quarter{}) v.positive_witness = D;
    return v;
  }
  for (const Element& e : L.elements)
    if (L.final_of(e) < Quarter{}) v.violations.push_back({e, L.final_of(e), "final"});
  v.all_nonnegative = v.violations.empty();

  // Prefer a positive 4+-face on a special edge, then any positive inner
  // face, then D.
  const Classification cls = classify(g);
  for (const Edge& e : cls.special_edges) {
    auto [f1, f2] = g.edge_faces(e);
    for (int f : {f1, f2})
      if (!v.positive_witness && f != g.outer_face() && g.face(f).degree() >= 4 &&
          L.final_of(Element::face(f)) > Quarter{})
        v.positive_witness = Element::face(f);
  }
  for (int f = 0; f < g.face_count() && !v.positive_witness; ++f)
    if (f != g.outer_face() && L.final_of(Element::face(f)) > Quarter{}) v.positive_witness = Element::face(f);
  if (!v.positive_witness && L.final_of(D) > Quarter{}) v.positive_witness = D;
  return v;
}

/// Boundary-rule bookkeeping: special edges end at zero, faces in N receive
/// at least 2 through special edges, and every rule conserved the total.
struct RemarkCheck {
  bool special_edges_zero = true;
  bool n_faces_receive_two = true;
  bool conserved = true;
  std::string witness;

  bool holds() const { return special_edges_zero && n_faces_receive_two && conserved; }
};

inline RemarkCheck remark_check(const PlaneGraph& g, const ChargeLedger& L) {
  RemarkCheck r;
  const Classification cls = classify(g);
  for (const Element& e : L.elements)
    if (e.kind == Element::Kind::Edge && L.final_of(e) != Quarter{}) {
      r.special_edges_zero = false;
      if (r.witness.empty()) r.witness = element_name(g, e) + " ends at " + L.final_of(e).str();
    }
  for (const auto& fc : cls.faces) {
    if (!fc.in_N) continue;
    const Element f = Element::face(fc.face);
    const Quarter got = L.inflow_from(f, Element::Kind::Edge);
    if (got < Quarter::whole(2)) {
      r.n_faces_receive_two = false;
      if (r.witness.empty()) r.witness = element_name(g, f) + " receives " + got.str() + " via special edges";
    }
  }
  for (const auto& rt : L.after_rule)
    if (rt.total != L.initial_total() || rt.total != Quarter{}) {
      r.conserved = false;
      if (r.witness.empty()) r.witness = "total after " + rt.rule + " is " + rt.total.str();
    }
  return r;
}

// ---------------------------------------------------------------------------
// Reports

inline void write_ledger(std::ostream& os, const PlaneGraph& g, const ChargeLedger& L) {
  for (const Element& e : L.elements)
    os << "charge " << element_name(g, e) << " init=" << L.initial_of(e).str() << " final=" << L.final_of(e).str()
       << "\n";
  for (const auto& t : L.transfers)
    os << "xfer " << t.rule << " " << element_name(g, t.from) << " -> " << element_name(g, t.to) << " "
       << t.amount.str() << "\n";
  for (const auto& rt : L.after_rule) os << "total " << rt.rule << " " << rt.total.str() << "\n";
  if (L.ruleset == TheoremId::MRC) os << "surplus p=" << L.surplus_to_D.str() << "\n";
  for (const auto& f : L.flags) os << "flag " << f << "\n";
}

inline void write_verdict(std::ostream& os, const PlaneGraph& g, const ChargeLedger& L, const Verdict& v) {
  os << "verdict " << to_string(*L.ruleset) << " all_nonnegative=" << (v.all_nonnegative ? 1 : 0)
     << " witness=" << (v.positive_witness ? element_name(g, *v.positive_witness) : std::string("none"))
     << " violations=" << v.violations.size() << "\n";
  for (const auto& x : v.violations)
    os << "violation " << element_name(g, x.element) << " " << x.stage << "=" << x.value.str() << "\n";
}

inline void write_preconditions(std::ostream& os, const PreconditionReport& rep) {
  for (const auto& c : rep.checks)
    os << "check " << c.id << " " << (c.pass ? "pass" : "fail") << (c.witness.empty() ? "" : " : " + c.witness)
       << "\n";
}

// ---------------------------------------------------------------------------
// Symbolic arithmetic

struct ArithmeticCase {
  std::string name;
  /// Vertex or face degree the case was evaluated at, or 0.
  int degree = 0;
  Quarter value;
  /// "=0", ">0", ">=0", or "=<q>/4" for a fixed target.
  std::string relation;
  bool pass = false;
};

/// Evaluates each case bound of the three charge arguments exactly. Vertex
/// bounds range over degree 5..64; the boundary bound over deg(D) 3..6.
inline std::vector<ArithmeticCase> lemma_arithmetic_suite() {
  std::vector<ArithmeticCase> out;
  auto q = [](std::int64_t num, std::int64_t den) { return Quarter::frac(num, den); };
  auto add = [&](std::string name, int deg, Quarter value, std::string rel) {
    bool ok = rel == "=0"    ? value == Quarter{}
              : rel == ">0"  ? value > Quarter{}
              : rel == ">=0" ? value >= Quarter{}
                             : false;
    out.push_back({std::move(name), deg, value, std::move(rel), ok});
  };
  auto add_eq = [&](std::string name, int deg, Quarter value, Quarter target) {
    out.push_back({std::move(name), deg, value, "=" + target.str(), value == target});
  };
  const Quarter one = Quarter::whole(1);

  for (TheoremId t : {TheoremId::MRA, TheoremId::MRB}) {
    const std::string p = std::string(to_string(t)) + ".";
    add(p + "4_2-vertex", 4, Quarter::whole(2) - 2 * one, "=0");
    add(p + "4_1-vertex-T2", 4, Quarter::whole(2) - one - q(1, 2) - 2 * q(1, 4), ">=0");
    add(p + "4_1-vertex", 4, Quarter::whole(2) - 4 * q(1, 2), ">=0");
    add(p + "4_0-vertex", 4, Quarter::whole(2) - 4 * q(1, 2), ">=0");
    add(p + "T2-face", 3, Quarter::whole(-3) + one + Quarter::whole(2), ">=0");
    add(p + "T1-face", 3, Quarter::whole(-3) + 2 * q(1, 2) + Quarter::whole(2), ">=0");
    add(p + "internal-3-face", 3, Quarter::whole(-3) + 3 * one, "=0");
    add(p + "special-face", 3, Quarter::whole(-3) + q(1, 2) + 2 * q(5, 4), "=0");
    add(p + "4+-face-in-N", 4, Quarter::whole(-2) + Quarter::whole(2), ">=0");
    add(p + "internal-4-face", 4, Quarter::whole(-2) + 4 * q(1, 2), "=0");
    add(p + "f*-5+-face", 5, Quarter::whole(-1) + Quarter::whole(2), ">0");
    add(p + "f*-4-face", 4, Quarter::whole(-2) + Quarter::whole(2) + q(1, 4), ">0");
    for (int d = 3; d <= 6; ++d) add(p + "outer-face", d, Quarter::whole(6 - d), ">=0");
  }
  add("MRA.5-face-two-5+", 5, Quarter::whole(-1) + 2 * q(1, 2), ">=0");
  add("MRA.5-face-adjacent-4+", 5, Quarter::whole(-1) + 2 * q(1, 2), ">=0");
  add("MRA.sink", 5, Quarter::whole(-1) + 4 * q(1, 4), "=0");
  add("MRB.internal-5-face", 5, Quarter::whole(-1) + 3 * q(1, 2), ">0");

  for (int d = 5; d <= 64; ++d) {
    add("MRA.5+-vertex", d, Quarter::whole(2 * d - 6) - (d / 2) * q(5, 4) - ((d + 1) / 2) * q(1, 2), ">=0");
    const Quarter mrb = Quarter::whole(2 * d - 6) - 2 * q(5, 4) - (d - 2) * q(1, 2);
    add_eq("MRB.5+-vertex", d, mrb, (d - 5) * q(3, 2));
    add("MRC.5+-vertex", d, Quarter::whole(2 * d - 6) - (2 * d / 3) * one - ((d + 2) / 3) * q(1, 2), ">=0");
  }

  add("MRC.4_2-vertex", 4, Quarter::whole(2) - 2 * one, "=0");
  add("MRC.4_1-vertex", 4, Quarter::whole(2) - one - q(1, 2) - 2 * q(1, 4), "=0");
  add("MRC.4_0-vertex", 4, Quarter::whole(2) - 4 * q(1, 2), "=0");
  add("MRC.3-face-in-N", 3, Quarter::whole(-3) + Quarter::whole(2) + one, ">=0");
  add("MRC.4-face-in-N", 4, Quarter::whole(-2) + Quarter::whole(2), ">=0");
  add_eq("MRC.5+-face-in-N", 5, Quarter::whole(-1) + Quarter::whole(2), one);
  add("MRC.internal-3-face", 3, Quarter::whole(-3) + 3 * one, "=0");
  add("MRC.internal-4-face", 4, Quarter::whole(-2) + 4 * q(1, 2), "=0");
  add("MRC.internal-5-face", 5, Quarter::whole(-1) + q(1, 2) + 2 * q(1, 4), ">=0");
  add_eq("MRC.4-face-in-N-to-D", 4, Quarter::whole(4 - 6 + 2) + 2 * q(1, 2), one);
  for (int d = 6; d <= 7; ++d) {
    add("MRC.outer-6+-face-in-N", d, Quarter::whole(6 - d + 2), ">0");
    add("MRC.outer-two-4+-faces-in-N", d, Quarter::whole(6 - d) + 2 * one, ">0");
  }
  return out;
}

}  // namespace planedp
