// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crafted.hpp"
#include "oracles.hpp"
#include "planedp/campaign.hpp"
#include "planedp/discharging.hpp"
#include "planedp/generate.hpp"
#include "planedp/patterns.hpp"
#include "planedp/solver.hpp"

using namespace planedp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s : %s : %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

Quarter q(std::int64_t num, std::int64_t den = 1) { return Quarter::frac(num, den); }
Element V(int v) { return Element::vertex(v); }
Element F(int f) { return Element::face(f); }

int face_with(const PlaneGraph& g, std::set<int> labels) {
  for (int f = 0; f < g.face_count(); ++f) {
    if (f == g.outer_face() || g.face(f).degree() != static_cast<int>(labels.size())) continue;
    std::set<int> s;
    for (int v : g.face(f).walk) s.insert(g.label(v));
    if (s == labels) return f;
  }
  return -1;
}

Quarter sent(const ChargeLedger& L, const std::string& rule, Element from, Element to) {
  Quarter t;
  for (const auto& x : L.transfers)
    if (x.rule == rule && x.from == from && x.to == to) t += x.amount;
  return t;
}

// The plane-graph corpus shared by criteria 3, 4 and 6.
std::vector<PlaneGraph> corpus() {
  std::vector<PlaneGraph> out{crafted::four_two(),     crafted::four_one_t2(), crafted::special_face(),
                              crafted::sink(),         crafted::five_face_mrb(), crafted::hub(5),
                              crafted::hub(6),         crafted::grid4(),       crafted::six_faces_in_n(),
                              crafted::k4_center()};
  std::mt19937_64 rng(2024);
  const char* profiles[] = {"outer-cycle", "outer-cycle:5", "outer-cycle:7", "outer-cycle:6:quad", "triangulation"};
  for (int i = 0; i < 400; ++i) {
    GenProfile p = GenProfile::parse(profiles[i % 5]);
    if (i % 10 < 3 && p.kind != GenProfile::Kind::Named && !p.triangle_free)
      p.repair_for = std::array{TheoremId::MRA, TheoremId::MRB, TheoremId::MRC}[i % 3];
    try {
      out.push_back(generate(p, 8 + static_cast<int>(i % 13), rng()));
    } catch (const Error&) {
    }
  }
  return out;
}

constexpr std::array<TheoremId, 3> kTheorems{TheoremId::MRA, TheoremId::MRB, TheoremId::MRC};

// ---------------------------------------------------------------------------

void euler_identity() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  const char* profiles[] = {"triangulation", "outer-cycle", "outer-cycle:6:quad", "outer-cycle:7"};
  int n_graphs = 0, bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 4 + i % 21;
    GenProfile p = GenProfile::parse(profiles[i % 4]);
    if (p.kind != GenProfile::Kind::Triangulation && n < 8) p = GenProfile::parse("triangulation");
    auto g = generate(p, n, rng());
    // Independent recount: vertices 2deg-6, inner faces deg-6, outer face deg+6.
    std::int64_t sum = 0;
    for (int v = 0; v < g.order(); ++v) sum += 2 * static_cast<std::int64_t>(g.graph().degree(v)) - 6;
    for (int f = 0; f < g.face_count(); ++f) sum += g.face(f).degree() + (f == g.outer_face() ? 6 : -6);
    auto L = initial_charges(g);
    if (sum != 0 || L.initial_total() != Quarter{}) ++bad;
    ++n_graphs;
  }
  const double s = seconds_since(t0);
  report(1, "Euler charge identity", bad == 0 && n_graphs == 1000 && s < 10,
         std::to_string(n_graphs) + " graphs, " + std::to_string(bad) + " nonzero, " + std::to_string(s) + " s");
}

void case_arithmetic() {
  std::vector<std::pair<std::string, bool>> cases;
  auto add = [&](const std::string& name, bool ok) { cases.emplace_back(name, ok); };

  {
    auto g = crafted::four_two();
    auto L = apply_rules(g, TheoremId::MRA);
    add("4_2 vertex 2-2x1=0", L.outflow(V(0)) == q(2) && L.final_of(V(0)) == q(2) - q(2) * 1 &&
                                  L.final_of(V(0)) == Quarter{});
  }
  {
    auto g = crafted::four_one_t2();
    auto L = apply_rules(g, TheoremId::MRA);
    const int tri = face_with(g, {0, 1, 2}), across = face_with(g, {0, 4, 5, 6});
    const int s1 = face_with(g, {0, 2, 3, 4}), s2 = face_with(g, {0, 6, 7, 1});
    const bool found = tri >= 0 && across >= 0 && s1 >= 0 && s2 >= 0;
    add("4_1 with T_2 2-1-1/2-2x1/4=0",
        found && classify(g).faces[tri].t_index() == 2 && sent(L, "R1b", V(0), F(tri)) == q(1) &&
            sent(L, "R1b", V(0), F(across)) == q(1, 2) && sent(L, "R1b", V(0), F(s1)) == q(1, 4) &&
            sent(L, "R1b", V(0), F(s2)) == q(1, 4) && L.final_of(V(0)) == Quarter{});
  }
  {
    auto g = crafted::special_face();
    auto L = apply_rules(g, TheoremId::MRA);
    const int f = face_with(g, {6, 7, 8});
    add("special face -3+1/2+2x5/4=0", f >= 0 && classify(g).faces[f].is_special &&
                                           sent(L, "R2", V(6), F(f)) == q(5, 4) &&
                                           sent(L, "R2", V(7), F(f)) == q(5, 4) &&
                                           L.final_of(F(f)) == q(-3) + q(1, 2) + q(5, 4) * 2 &&
                                           L.final_of(F(f)) == Quarter{});
  }
  {
    auto g = crafted::sink();
    auto L = apply_rules(g, TheoremId::MRA);
    const int f = face_with(g, {0, 1, 2, 3, 4});
    int sources = 0;
    bool quarters = true;
    for (const auto& t : L.transfers)
      if (t.rule == "R4" && f >= 0 && t.to == F(f)) {
        ++sources;
        quarters = quarters && t.amount == q(1, 4);
      }
    add("sink -1+4x1/4=0", f >= 0 && L.initial_of(F(f)) == q(-1) && sources == 4 && quarters &&
                               L.final_of(F(f)) == Quarter{});
  }
  {
    bool ok = true;
    for (const auto& g : {crafted::four_two(), crafted::four_one_t2(), crafted::special_face(), crafted::sink()})
      for (TheoremId t : {TheoremId::MRA, TheoremId::MRB}) {
        auto L = apply_rules(g, t);
        ok = ok && L.final_of(F(g.outer_face())) == q(6 - g.face(g.outer_face()).degree());
      }
    add("outer face 6-deg(D)", ok);
  }
  {
    auto g = crafted::five_face_mrb();
    auto L = apply_rules(g, TheoremId::MRB);
    const int f = face_with(g, {0, 1, 2, 3, 4});
    bool ok = f >= 0 && classify(g).faces[f].is_internal;
    for (int v : {2, 3, 4}) ok = ok && sent(L, "R1b", V(v), F(f)) == q(1, 2);
    add("5-face -1+3x1/2>0", ok && L.final_of(F(f)) == q(-1) + q(1, 2) * 3 && L.final_of(F(f)) > Quarter{});
  }
  {
    bool ok = true;
    for (int d = 5; d <= 8; ++d) {
      auto L = apply_rules(crafted::hub(d), TheoremId::MRB);
      ok = ok && L.final_of(V(0)) == q(3 * (d - 5), 2) && L.final_of(V(0)) >= Quarter{};
    }
    add("hub 3/2(deg-5)>=0 for deg 5..8", ok);
  }
  {
    auto g = crafted::special_face();
    auto L = apply_rules(g, TheoremId::MRC);
    add("4_1 vertex 2-1-1/2-2x1/4=0", classify(g).is_4k(8, 1) &&
                                          L.outflow(V(8)) == q(1) + q(1, 2) + q(1, 4) * 2 &&
                                          L.final_of(V(8)) == Quarter{});
  }
  {
    bool ok = true;
    for (const auto& g : {crafted::grid4(), crafted::six_faces_in_n(), crafted::special_face(), crafted::sink()}) {
      auto L = apply_rules(g, TheoremId::MRC);
      Quarter p;
      for (const auto& t : L.transfers)
        if (t.rule == "TOD") p += t.amount;
      ok = ok && p == L.surplus_to_D &&
           L.final_of(F(g.outer_face())) == q(6 - g.face(g.outer_face()).degree()) + p;
    }
    add("mu*(D)=6-deg(D)+p", ok);
  }
  {
    auto g = crafted::grid4();
    auto L = apply_rules(g, TheoremId::MRC);
    auto cls = classify(g);
    bool ok = true;
    for (auto s : std::vector<std::set<int>>{{1, 2, 5, 6}, {4, 5, 8, 9}, {6, 7, 10, 11}, {9, 10, 13, 14}}) {
      const int f = face_with(g, s);
      ok = ok && f >= 0 && cls.faces[f].in_N && sent(L, "TOD", F(f), F(g.outer_face())) >= q(1);
    }
    add("4+-face in N sends at least 1 to D", ok);
  }
  int bad = 0;
  std::string failed;
  for (const auto& [name, ok] : cases)
    if (!ok) {
      ++bad;
      failed += " [" + name + "]";
    }
  report(2, "displayed case arithmetic", bad == 0,
         std::to_string(cases.size() - bad) + "/" + std::to_string(cases.size()) + " cases exact" + failed);
}

void conservation_and_remarks(const std::vector<PlaneGraph>& gs) {
  int runs = 0, bad_rule = 0, r3_runs = 0, remark_bad = 0;
  std::string witness;
  for (const auto& g : gs) {
    const Classification cls = classify(g);
    for (TheoremId t : kTheorems) {
      ChargeLedger L;
      try {
        L = apply_rules(g, t);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PreconditionViolated) ++bad_rule;
        continue;
      }
      ++runs;
      if (L.after_rule.size() != rule_order(t).size()) ++bad_rule;
      for (const auto& rt : L.after_rule)
        if (rt.total != Quarter{}) {
          ++bad_rule;
          if (witness.empty()) witness = "rule " + rt.rule;
        }
      // Replay the transfers from the initial charges.
      std::map<Element, Quarter> bal;
      for (const auto& e : L.elements) bal[e] = L.initial_of(e);
      for (const auto& x : L.transfers) {
        bal[x.from] -= x.amount;
        bal[x.to] += x.amount;
      }
      Quarter sum;
      for (const auto& [e, v] : bal) sum += v;
      if (sum != Quarter{} || L.final_total() != Quarter{}) ++bad_rule;

      // Special edges net zero; faces in N receive at least 2 through them.
      bool any_r3 = false;
      std::map<int, Quarter> via_edges;
      for (const auto& x : L.transfers)
        if (x.rule == "R3") {
          any_r3 = true;
          if (x.from.kind == Element::Kind::Edge && x.to.kind == Element::Kind::Face) via_edges[x.to.a] += x.amount;
        }
      if (!any_r3) continue;
      ++r3_runs;
      bool ok = true;
      for (const auto& e : L.elements)
        if (e.kind == Element::Kind::Edge && (L.inflow(e) != L.outflow(e) || L.inflow(e) != q(2))) ok = false;
      for (int f = 0; f < g.face_count(); ++f)
        if (cls.faces[f].in_N && via_edges[f] < q(2)) ok = false;
      if (!ok) ++remark_bad;
    }
  }
  report(3, "conservation after every rule", bad_rule == 0 && runs > 100,
         std::to_string(runs) + " rule runs on " + std::to_string(gs.size()) + " graphs, " +
             std::to_string(bad_rule) + " violations" + (witness.empty() ? "" : " (" + witness + ")"));
  report(4, "special edges net 0, N faces receive >= 2", remark_bad == 0 && r3_runs > 100,
         std::to_string(r3_runs) + " runs with R3, " + std::to_string(remark_bad) + " failures");
}

std::vector<CampaignResult> stress_campaigns() {
  std::vector<CampaignResult> results;
  bool pass = true;
  std::string detail;
  for (TheoremId t : kTheorems) {
    CampaignSpec spec;
    spec.theorem = t;
    spec.instances = 330;
    spec.min_order = 8;
    spec.max_order = 20;
    spec.seed = 77 + static_cast<std::uint64_t>(t);
    spec.k = 4;
    spec.assignments_per_instance = 4;
    spec.phis_per_assignment = 8;
    spec.single_vertex_cases = true;
    const auto t0 = Clock::now();
    auto r = run_campaign(spec);
    const double s = seconds_since(t0);
    const bool ok = r.filter_pass >= 300 && r.no_extension == 0 && r.budget_exhausted == 0 && r.invalid == 0 &&
                    r.errors == 0 && r.max_search_ms < 1000;
    pass = pass && ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s%s filtered=%d searches=%d noext=%d budget=%d invalid=%d max_ms=%.1f (%.0f s)",
                  detail.empty() ? "" : "; ", std::string(to_string(t)).c_str(), r.filter_pass, r.searches,
                  r.no_extension, r.budget_exhausted, r.invalid, r.max_search_ms, s);
    detail += buf;
    results.push_back(std::move(r));
  }
  report(5, "extension stress", pass, detail);
  return results;
}

void clean_verdicts(const std::vector<CampaignResult>& campaigns, const std::vector<PlaneGraph>& gs) {
  int clean = 0, holds = 0, checked = 0;
  for (const auto& r : campaigns) {
    clean += r.clean;
    holds += r.clean_verdict_holds;
    checked += static_cast<int>(r.records.size());
  }
  for (const auto& g : gs)
    for (TheoremId t : kTheorems) {
      ++checked;
      if (!hypothesis_filter(g.graph(), t).pass || !check_preconditions(g, t).all_pass()) continue;
      ++clean;
      auto L = apply_rules(g, t);
      auto v = verdict(g, L);
      if (v.holds() && v.violations.empty()) ++holds;
    }
  std::string detail = std::to_string(clean) + " clean of " + std::to_string(checked) + " checked, " +
                       std::to_string(holds) + " verdicts hold";
  if (clean == 0) detail += " (vacuous: no instance passes filter and preconditions)";
  report(6, "discharging verdict on clean instances", holds == clean, detail);
}

void solver_oracle() {
  std::mt19937_64 rng(99);
  int agree = 0, total = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + i % 7, k = 1 + i % 3;
    Graph g;
    if (i % 2 == 0) {
      g = generate(GenProfile::parse("triangulation"), std::max(n, 3), rng()).graph();
    } else {
      std::vector<Edge> es;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (detail::below(rng, 100) < 40) es.emplace_back(a, b);
      g = Graph(n, es);
    }
    const auto prof = std::array{AssignmentProfile::full(), AssignmentProfile::sparse(0.5),
                                 AssignmentProfile::twists(0.5)}[i % 3];
    auto M = random_assignment(g, k, rng(), prof);
    auto L = ListAssignment::uniform(g.order(), k);
    Coloring pre(g.order(), 0);
    if (i % 5 == 0) pre[0] = 1 + static_cast<Color>(detail::below(rng, k));
    auto out = find_mcoloring(g, L, M, pre);
    const bool truth = oracle::has_mcoloring(g, L, M, pre);
    const bool ok = out.status != SearchStatus::BudgetExhausted &&
                    (out.status == SearchStatus::Extended) == truth &&
                    (out.status != SearchStatus::Extended ||
                     (!oracle::violates(g, M, out.coloring) && (pre[0] == 0 || out.coloring[0] == pre[0])));
    agree += ok;
    ++total;
  }
  report(7, "solver vs exhaustive enumeration", agree == total,
         std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(seconds_since(t0)) +
             " s)");
}

void chi_dp_truths() {
  auto timed = [](const Graph& g, int k_max) {
    const auto t0 = Clock::now();
    auto r = adversarial_chi_dp(g, k_max, true);
    return std::pair{r.chi.value_or(-1), seconds_since(t0)};
  };
  bool pass = true;
  std::string detail;
  auto check = [&](const std::string& name, const Graph& g, int want) {
    auto [chi, s] = timed(g, 4);
    const bool ok = chi == want && s < 5;
    pass = pass && ok;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%s=%d (%.2f s)", detail.empty() ? "" : " ", name.c_str(), chi, s);
    detail += buf;
  };
  for (int n = 3; n <= 8; ++n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    check("C" + std::to_string(n), Graph(n, es), 3);
  }
  check("K4", Graph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)}), 4);
  check("P2", Graph(2, {Edge(0, 1)}), 2);
  check("star4", Graph(5, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4)}), 2);
  check("tree7", Graph(7, {Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(3, 4), Edge(4, 5), Edge(4, 6)}), 2);
  report(8, "DP-chromatic ground truths", pass, detail);
}

void straightening() {
  std::mt19937_64 rng(7);
  int holds_ok = 0, holds_n = 0, viol_ok = 0, viol_n = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 3 + i % 6, k = 2 + i % 2;
    Graph g = generate(GenProfile::parse("triangulation"), n, rng()).graph();
    // Mostly straight assignments disguised by a per-vertex renaming, so both
    // sides of the precondition show up.
    auto base = random_assignment(g, k, rng(), AssignmentProfile::twists(i % 4 == 0 ? 0.5 : 0.1));
    Renaming disguise(n, std::vector<Color>(k + 1, 0));
    for (int v = 0; v < n; ++v) {
      auto perm = detail::random_permutation(rng, k);
      for (int c = 1; c <= k; ++c) disguise[v][c] = perm[c - 1];
    }
    auto M = apply_renaming(base, disguise);
    auto L = ListAssignment::uniform(n, k);
    std::vector<Edge> h;
    for (const Edge& e : g.edges())
      if (detail::below(rng, 100) < 60) h.push_back(e);

    bool precondition = true;
    for (auto c : oracle::cycles_of(n, h)) {
      c.push_back(c.front());
      if (!oracle::walk_consistent(g, L, M, c)) precondition = false;
    }
    try {
      auto r = straighten(g, L, M, h);
      if (!precondition) {
        ++viol_n;
        continue;
      }
      ++holds_n;
      bool straight = true;
      for (const Edge& e : h) {
        if (r.matching.pairs(e).size() != static_cast<std::size_t>(k)) straight = false;
        for (auto [a, b] : r.matching.pairs(e)) straight = straight && a == b;
      }
      holds_ok += straight && oracle::count_mcolorings(g, L, M) == oracle::count_mcolorings(g, L, r.matching);
    } catch (const PreconditionError& e) {
      if (precondition) {
        ++holds_n;
        continue;
      }
      ++viol_n;
      // The reported cycle must be a cycle of h on which M is inconsistent.
      Cycle c = e.cycle();
      std::set<Edge> hs(h.begin(), h.end());
      bool in_h = c.size() >= 3;
      for (std::size_t j = 0; j < c.size(); ++j) in_h = in_h && hs.count(Edge(c[j], c[(j + 1) % c.size()]));
      c.push_back(c.front());
      viol_ok += in_h && !oracle::walk_consistent(g, L, M, c);
    }
  }
  report(9, "straightening", holds_ok == holds_n && viol_ok == viol_n && holds_n > 0 && viol_n > 0,
         std::to_string(holds_ok) + "/" + std::to_string(holds_n) + " consistent triples straight and count-preserving, " +
             std::to_string(viol_ok) + "/" + std::to_string(viol_n) + " violations reported with a verified cycle");
}

void pattern_detection() {
  std::mt19937_64 rng(10);
  int agree = 0, pairs = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + i % 7;
    Graph host;
    if (i % 2 == 0) {
      host = generate(GenProfile::parse("triangulation"), n, rng()).graph();
      // Thin it out so that not every host contains every pattern.
      std::vector<Edge> es;
      for (const Edge& e : host.edges())
        if (detail::below(rng, 100) < 75) es.push_back(e);
      host = Graph(n, es);
    } else {
      std::vector<Edge> es;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (detail::below(rng, 100) < 45) es.emplace_back(a, b);
      host = Graph(n, es);
    }
    for (const auto& p : pattern_library()) {
      ++pairs;
      agree += contains(host, p).has_value() == oracle::contains(host, p.graph());
    }
  }
  int planted = 0;
  planted += contains(detail::named_graph("k4").graph(), PatternId::FIG2_A).has_value();
  planted += contains(detail::named_graph("bowtie").graph(), PatternId::FIG3_A).has_value();
  planted += contains(detail::named_graph("house").graph(), PatternId::FIG4_A).has_value();
  int negatives = 0, neg_ok = 0;
  for (int i = 0; i < 30; ++i) {
    const int a = 2 + i % 4, b = 2 + (i / 4) % 4;
    std::vector<Edge> es;
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y)
        if (detail::below(rng, 100) < 70) es.emplace_back(x, a + y);
    Graph host(a + b, es);
    for (const auto& p : pattern_library()) {
      ++negatives;
      neg_ok += !contains(host, p).has_value();
    }
  }
  report(10, "pattern detection", agree == pairs && planted == 3 && neg_ok == negatives,
         std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree, " + std::to_string(planted) +
             "/3 planted, " + std::to_string(neg_ok) + "/" + std::to_string(negatives) + " bipartite negatives");
}

// w = 0 and its neighbors w1..w4 = 1..4, then a path from w2 to w4 and a few
// attachment vertices. FOUR1 removes {w, w1, w3}; FOUR2 has the triangle w w1 w2
// and removes {w, w1}.
struct LiftShape {
  Graph g;
  std::vector<int> removed;
  std::vector<int> order;
};

LiftShape four1_shape(int path_len, int variant) {
  std::vector<Edge> es{Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 2), Edge(1, 4), Edge(3, 2), Edge(3, 4)};
  const int p0 = 5, x = p0 + path_len, y = x + 1;
  es.emplace_back(2, p0);
  for (int i = 0; i + 1 < path_len; ++i) es.emplace_back(p0 + i, p0 + i + 1);
  es.emplace_back(p0 + path_len - 1, 4);
  es.emplace_back(1, x);
  es.emplace_back(3, y);
  es.emplace_back(x, p0 + variant % path_len);
  es.emplace_back(y, p0 + (variant + 1) % path_len);
  if (variant % 2) es.emplace_back(x, p0 + (variant + 1) % path_len);
  if (variant % 3 == 0 && path_len > 3) es.emplace_back(p0, p0 + 2);
  return {Graph(y + 1, es), {0, 1, 3}, {1, 3, 0}};
}

LiftShape four2_shape(int path_len, int variant) {
  std::vector<Edge> es{Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 2)};
  const int p0 = 5, x1 = p0 + path_len, x2 = x1 + 1;
  es.emplace_back(2, p0);
  for (int i = 0; i + 1 < path_len; ++i) es.emplace_back(p0 + i, p0 + i + 1);
  es.emplace_back(p0 + path_len - 1, 4);
  es.emplace_back(1, x1);
  es.emplace_back(1, x2);
  es.emplace_back(x1, x2);
  es.emplace_back(x2, p0 + variant % path_len);
  es.emplace_back(3, p0 + (variant + 1) % path_len);
  if (variant % 2) es.emplace_back(3, p0 + (variant + 2) % path_len);
  if (variant % 3 == 0) es.emplace_back(x1, p0);
  return {Graph(x2 + 1, es), {0, 1}, {1, 0}};
}

void identification_lift() {
  int instances = 0, ok_instances = 0;
  std::uint64_t lifted = 0;
  std::string first_bad;
  for (int i = 0; i < 50; ++i) {
    const bool one = i % 2 == 0;
    LiftShape s = one ? four1_shape(3 + i % 3, i / 2) : four2_shape(2 + i % 3, i / 2);
    const Graph& g = s.g;
    const int k = 4;
    auto L = ListAssignment::uniform(g.order(), k);
    auto M = random_assignment(g, k, 1000 + static_cast<std::uint64_t>(i), AssignmentProfile::full());
    bool ok = g.degree(0) == 4 && g.degree(1) == 4 && (!one || g.degree(3) == 4) && !g.adjacent(2, 4);
    try {
      auto st = straighten(g, L, M, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4)});
      auto id = identify(g, L, st.matching, s.removed, 2, 4);
      const Renaming back = invert(st.rename);
      std::uint64_t count = 0;
      oracle::for_each_mcoloring(id.graph, id.lists, id.matching, {}, [&](const Coloring& phi_prime) {
        ++count;
        Coloring partial = lift(id, phi_prime);
        auto full = extend_greedily(g, L, st.matching, partial, s.order);
        if (!full || oracle::violates(g, st.matching, *full) || !is_mcoloring(g, L, st.matching, *full) ||
            !is_mcoloring(g, L, M, apply_renaming(*full, back)) || (*full)[2] != (*full)[4])
          ok = false;
        return ok;
      });
      lifted += count;
      ok = ok && count > 0;
    } catch (const Error& e) {
      ok = false;
      if (first_bad.empty()) first_bad = e.what();
    }
    ++instances;
    ok_instances += ok;
    if (!ok && first_bad.empty()) first_bad = "instance " + std::to_string(i);
  }
  report(11, "identification lift", ok_instances == instances,
         std::to_string(ok_instances) + "/" + std::to_string(instances) + " instances, " + std::to_string(lifted) +
             " colorings lifted" + (first_bad.empty() ? "" : " (" + first_bad + ")"));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  euler_identity();
  case_arithmetic();
  const auto gs = corpus();
  conservation_and_remarks(gs);
  const auto campaigns = stress_campaigns();
  clean_verdicts(campaigns, gs);
  solver_oracle();
  chi_dp_truths();
  straightening();
  pattern_detection();
  identification_lift();
  std::printf("acceptance %s : %d failing, %.1f s\n", failures ? "FAIL" : "PASS", failures, seconds_since(t0));
  return failures ? 1 : 0;
}
