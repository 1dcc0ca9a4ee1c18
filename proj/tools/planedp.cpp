// planedp: command-line front end for the plane-graph DP-coloring toolkit.
//
// Exit codes: 0 success or verdict pass, 1 verdict fail, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "planedp/campaign.hpp"
#include "planedp/discharging.hpp"
#include "planedp/generate.hpp"
#include "planedp/io.hpp"
#include "planedp/patterns.hpp"
#include "planedp/solver.hpp"

using namespace planedp;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::vector<int> parse_label_list(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  return detail::parse_ints(t, "vertex");
}

std::vector<int> to_indices(const Graph& g, const std::vector<int>& labels) {
  std::vector<int> out;
  for (int l : labels) out.push_back(g.index_or_throw(l));
  return out;
}

// "3=1,5=2" -> precoloring indexed by vertex.
Coloring parse_precoloring(const Graph& g, const std::string& s) {
  Coloring pre(g.order(), 0);
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  for (std::string item; is >> item;) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::MalformedInput, "expected v=c, got '" + item + "'");
    pre[g.index_or_throw(detail::parse_int(item.substr(0, eq), "vertex"))] =
        detail::parse_int(item.substr(eq + 1), "color");
  }
  return pre;
}

std::vector<Edge> parse_edge_list(const Graph& g, const std::string& s) {
  std::vector<Edge> out;
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  for (std::string item; is >> item;) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(ErrorCode::MalformedInput, "expected u-v, got '" + item + "'");
    int u = g.index_or_throw(detail::parse_int(item.substr(0, dash), "vertex"));
    int v = g.index_or_throw(detail::parse_int(item.substr(dash + 1), "vertex"));
    if (!g.adjacent(u, v)) throw Error(ErrorCode::UnknownEdge, "not an edge: " + item);
    out.emplace_back(u, v);
  }
  return out;
}

void print_witness(std::ostream& os, const Graph& g, const Witness& w) {
  const auto& p = pattern(w.pattern);
  os << "witness " << p.name;
  for (std::size_t i = 0; i < w.mapping.size(); ++i) os << " " << p.vertex_names[i] << "=" << g.label(w.mapping[i]);
  os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DP-coloring and discharging toolkit for plane graphs"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  int workers = 1;
  app.add_option("--seed", seed, "Random seed")->envname("PLANEDP_SEED");
  app.add_option("--budget", budget, "Search node budget")->envname("PLANEDP_BUDGET");
  app.add_option("--workers", workers, "Campaign worker threads")->envname("PLANEDP_WORKERS");

  std::string in_path, cover_path, out_path, theorem_name = "MRA";

  auto* gen = app.add_subcommand("gen", "Generate a plane graph (.pg)");
  std::string profile = "triangulation";
  int order = 12;
  gen->add_option("--profile", profile, "triangulation | outer-cycle[:k[:quad|mixed]] | named:<name>");
  gen->add_option("-n,--order", order, "Vertex count");
  gen->add_option("--repair", theorem_name, "Repair toward a theorem's filter (MRTHREE, MRA, MRB, MRC, LL)");
  gen->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* detect = app.add_subcommand("detect", "Run a theorem's hypothesis filter");
  detect->add_option("--theorem", theorem_name)->required();
  detect->add_option("--in", in_path)->required();

  auto* solve = app.add_subcommand("solve", "Search for an M-coloring");
  std::string pre_text;
  solve->add_option("--in", in_path)->required();
  solve->add_option("--cover", cover_path)->required();
  solve->add_option("--pre", pre_text, "Precoloring as v=c,v=c");

  auto* extend = app.add_subcommand("extend", "Extend a precoloring of S under a theorem's S-shape rules");
  std::string s_text, phi_text;
  extend->add_option("--theorem", theorem_name)->required();
  extend->add_option("--in", in_path)->required();
  extend->add_option("--cover", cover_path)->required();
  extend->add_option("--s", s_text, "S as vertex labels in cyclic order")->required();
  extend->add_option("--phi", phi_text, "Colors aligned with S")->required();

  auto* strt = app.add_subcommand("straighten", "Rename colors so a subgraph's edges become straight");
  std::string sub_text;
  strt->add_option("--in", in_path)->required();
  strt->add_option("--cover", cover_path)->required();
  strt->add_option("--sub", sub_text, "Subgraph edges u-v,... (default: all edges)");
  strt->add_option("-o,--out", out_path, "Renamed cover file (default stdout)");

  auto* dis = app.add_subcommand("discharge", "Check preconditions and run a rule system");
  bool quiet = false;
  dis->add_option("--theorem", theorem_name)->required();
  dis->add_option("--in", in_path)->required();
  dis->add_flag("--summary", quiet, "Print checks and verdict only");

  auto* stress = app.add_subcommand("stress", "Run an extension and discharging campaign");
  CampaignSpec spec;
  std::string assign_text = "full";
  int max_ms = 0;
  stress->add_option("--theorem", theorem_name)->required();
  stress->add_option("--instances", spec.instances);
  stress->add_option("--min-n", spec.min_order);
  stress->add_option("--max-n", spec.max_order);
  stress->add_option("--generator", spec.generator);
  stress->add_option("--assignment", assign_text, "full | twists:p | sparse:p");
  stress->add_option("-k", spec.k);
  stress->add_option("--assignments", spec.assignments_per_instance);
  stress->add_option("--phis", spec.phis_per_assignment);
  stress->add_option("--max-ms", max_ms, "Fail if any single search takes longer (0 = no limit)");
  stress->add_option("-o,--out", out_path, "Result log (default stdout)");

  auto* pats = app.add_subcommand("patterns", "Pattern library");
  auto* pats_list = pats->add_subcommand("list", "Dump every pattern");
  pats->require_subcommand(1);

  auto* suite = app.add_subcommand("lemma-suite", "Evaluate the charge bounds exactly");
  bool with_chi = false;
  suite->add_flag("--chi-dp", with_chi, "Also compute DP-chromatic numbers of small graphs");

  auto* chi = app.add_subcommand("chi-dp", "Adversarial DP-chromatic number of a tiny graph");
  int kmax = 4;
  bool no_reduction = false;
  chi->add_option("--in", in_path)->required();
  chi->add_option("--kmax", kmax);
  chi->add_flag("--no-reduction", no_reduction, "Enumerate tree edges too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) {
      GenProfile p = GenProfile::parse(profile);
      if (gen->count("--repair")) p.repair_for = parse_theorem(theorem_name);
      PlaneGraph g = generate(p, order, seed);
      if (out_path.empty()) {
        write_plane_graph(std::cout, g);
      } else {
        std::ofstream os(out_path);
        write_plane_graph(os, g);
      }
      return kPass;
    }
    if (*detect) {
      const TheoremId t = parse_theorem(theorem_name);
      const PlaneGraph g = read_plane_graph(in_path);
      const FilterResult fr = hypothesis_filter(g.graph(), t);
      std::cout << "filter " << to_string(t) << " " << (fr.pass ? "pass" : "fail") << "\n";
      for (const auto& w : fr.witnesses) print_witness(std::cout, g.graph(), w);
      for (const auto& c : fr.cycle_witness) std::cout << "cycle " << cycle_name(g.graph(), c) << "\n";
      return fr.pass ? kPass : kFail;
    }
    if (*solve) {
      const PlaneGraph g = read_plane_graph(in_path);
      const CoverFile cf = read_cover(cover_path, g.graph());
      const Coloring pre = pre_text.empty() ? Coloring{} : parse_precoloring(g.graph(), pre_text);
      const SearchOutcome out = find_mcoloring(g.graph(), cf.lists, cf.matching, pre, budget);
      write_result(std::cout, in_path, out);
      if (out.status == SearchStatus::Extended) write_coloring(std::cout, g.graph(), out.coloring);
      return out.status == SearchStatus::Extended ? kPass : kFail;
    }
    if (*extend) {
      const TheoremId t = parse_theorem(theorem_name);
      const PlaneGraph g = read_plane_graph(in_path);
      const CoverFile cf = read_cover(cover_path, g.graph());
      const auto s = to_indices(g.graph(), parse_label_list(s_text));
      const auto phi = parse_label_list(phi_text);
      const SearchOutcome out = extend_precolored(g.graph(), cf.lists, cf.matching, s, phi, t, budget);
      write_result(std::cout, in_path, out);
      if (out.status == SearchStatus::Extended) write_coloring(std::cout, g.graph(), out.coloring);
      return out.status == SearchStatus::Extended ? kPass : kFail;
    }
    if (*strt) {
      const PlaneGraph g = read_plane_graph(in_path);
      const CoverFile cf = read_cover(cover_path, g.graph());
      const auto h = sub_text.empty() ? g.graph().edges() : parse_edge_list(g.graph(), sub_text);
      try {
        const StraightenResult r = straighten(g.graph(), cf.lists, cf.matching, h);
        if (out_path.empty()) {
          write_cover(std::cout, g.graph(), cf.k, cf.lists, r.matching);
        } else {
          std::ofstream os(out_path);
          write_cover(os, g.graph(), cf.k, cf.lists, r.matching);
        }
        return kPass;
      } catch (const PreconditionError& e) {
        std::cout << "precondition " << e.what() << "\n";
        if (!e.cycle().empty()) std::cout << "cycle " << cycle_name(g.graph(), e.cycle()) << "\n";
        return kFail;
      }
    }
    if (*dis) {
      const TheoremId t = parse_theorem(theorem_name);
      const PlaneGraph g = read_plane_graph(in_path);
      const FilterResult fr = hypothesis_filter(g.graph(), t);
      std::cout << "filter " << to_string(t) << " " << (fr.pass ? "pass" : "fail") << "\n";
      const PreconditionReport rep = check_preconditions(g, t);
      write_preconditions(std::cout, rep);
      ChargeLedger L;
      try {
        L = apply_rules(g, t);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PreconditionViolated) throw;
        std::cout << "verdict " << to_string(t) << " skipped : " << e.what() << "\n";
        return kFail;
      }
      const Verdict v = verdict(g, L);
      if (!quiet) write_ledger(std::cout, g, L);
      write_verdict(std::cout, g, L, v);
      return v.holds() ? kPass : kFail;
    }
    if (*stress) {
      spec.theorem = parse_theorem(theorem_name);
      spec.seed = seed;
      spec.budget = budget;
      spec.workers = workers;
      spec.assignment = AssignmentProfile::parse(assign_text);
      const CampaignResult res = run_campaign(spec);
      std::ofstream file;
      if (!out_path.empty()) file.open(out_path);
      std::ostream& os = out_path.empty() ? std::cout : file;
      for (const auto& r : res.records) write_record(os, r);
      write_summary(os, spec, res);
      const bool slow = max_ms > 0 && res.max_search_ms > max_ms;
      const bool ok = res.no_extension == 0 && res.budget_exhausted == 0 && res.invalid == 0 && res.errors == 0 &&
                      res.clean_verdict_holds == res.clean && res.remark_failures == 0 && !slow;
      if (!out_path.empty()) write_summary(std::cout, spec, res);
      return ok ? kPass : kFail;
    }
    if (*pats_list) {
      for (const auto& p : pattern_library()) {
        std::cout << p.name << " n=" << p.order() << " edges=";
        for (std::size_t i = 0; i < p.edges.size(); ++i)
          std::cout << (i ? "," : "") << p.vertex_names[p.edges[i].first] << p.vertex_names[p.edges[i].second];
        std::cout << "  # " << p.description << "\n";
      }
      return kPass;
    }
    if (*suite) {
      bool ok = true;
      for (const auto& c : lemma_arithmetic_suite()) {
        std::cout << (c.pass ? "pass " : "FAIL ") << c.name << " deg=" << c.degree << " value=" << c.value.reduced()
                  << " " << c.relation << "\n";
        ok = ok && c.pass;
      }
      if (with_chi) {
        auto report = [&](const std::string& name, int expect) {
          PlaneGraph g = generate(GenProfile::parse("named:" + name), 0, 0);
          ChiDpResult r = adversarial_chi_dp(g.graph(), 4, true);
          const bool pass = r.chi && *r.chi == expect;
          ok = ok && pass;
          std::cout << (pass ? "pass " : "FAIL ") << "chi_dp(" << name << ")="
                    << (r.chi ? std::to_string(*r.chi) : std::string("?")) << " expected " << expect << "\n";
        };
        for (int n = 3; n <= 8; ++n) report("cycle" + std::to_string(n), 3);
        report("k4", 4);
        report("tree6", 2);
      }
      return ok ? kPass : kFail;
    }
    if (*chi) {
      const PlaneGraph g = read_plane_graph(in_path);
      const ChiDpResult r = adversarial_chi_dp(g.graph(), kmax, !no_reduction);
      std::cout << "chi_dp " << (r.chi ? std::to_string(*r.chi) : ">" + std::to_string(kmax))
                << " assignments=" << r.assignments_checked << "\n";
      if (r.hard_assignment) {
        std::cout << "# uncolorable at k=" << r.hard_k << "\n";
        write_cover(std::cout, g.graph(), r.hard_k, ListAssignment::uniform(g.order(), r.hard_k), *r.hard_assignment);
      }
      return kPass;
    }
  } catch (const Error& e) {
    std::cerr << "error " << to_string(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
