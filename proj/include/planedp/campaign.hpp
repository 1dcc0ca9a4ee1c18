#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "planedp/discharging.hpp"
#include "planedp/dp_core.hpp"
#include "planedp/generate.hpp"
#include "planedp/patterns.hpp"
#include "planedp/solver.hpp"

namespace planedp {

struct CampaignSpec {
  TheoremId theorem = TheoremId::MRA;
  int instances = 100;
  int min_order = 8;
  int max_order = 20;
  std::uint64_t seed = 1;
  /// Generator profile; the generator repairs toward `theorem` unless the
  /// profile is a named graph.
  std::string generator = "outer-cycle";
  AssignmentProfile assignment = AssignmentProfile::full();
  int k = 4;
  int assignments_per_instance = 4;
  /// Valid precolorings sampled per assignment and S.
  int phis_per_assignment = 32;
  /// Also precolor single vertices when the theorem allows it.
  bool single_vertex_cases = true;
  int single_vertex_count = 2;
  std::uint64_t budget = kDefaultBudget;
  int workers = 1;
  bool run_discharging = true;
};

struct InstanceRecord {
  int index = 0;
  std::uint64_t hash = 0;
  int order = 0;
  int size = 0;
  int outer_length = 0;
  bool filter_pass = false;
  std::vector<std::string> filter_witnesses;
  int searches = 0;
  int extended = 0;
  int no_extension = 0;
  int budget_exhausted = 0;
  int invalid = 0;
  std::uint64_t max_nodes = 0;
  /// Wall clock; never written to the result log.
  double max_search_ms = 0;
  std::vector<std::string> precondition_failures;
  bool preconditions_pass = false;
  bool discharged = false;
  bool verdict_holds = false;
  int violations = 0;
  bool remarks_hold = true;
  std::string error;
};

struct CampaignResult {
  std::vector<InstanceRecord> records;
  int filter_pass = 0;
  int searches = 0;
  int extended = 0;
  int no_extension = 0;
  int budget_exhausted = 0;
  int invalid = 0;
  int clean = 0;
  int clean_verdict_holds = 0;
  int remark_failures = 0;
  int duplicates = 0;
  int errors = 0;
  double max_search_ms = 0;
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform sample of a valid precoloring of G[S] by rejection.
inline std::optional<std::vector<Color>> sample_phi(const Graph& g, const ListAssignment& L,
                                                    const MatchingAssignment& M, const std::vector<int>& s,
                                                    std::mt19937_64& rng, int attempts = 20000) {
  for (int a = 0; a < attempts; ++a) {
    std::vector<Color> phi(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) phi[i] = L[s[i]][below(rng, L[s[i]].size())];
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = i + 1; j < s.size() && ok; ++j)
        if (g.adjacent(s[i], s[j]) && M.matched(s[i], phi[i], s[j], phi[j])) ok = false;
    if (ok) return phi;
  }
  return std::nullopt;
}

inline void record_search(InstanceRecord& r, const Graph& g, const ListAssignment& L, const MatchingAssignment& M,
                          const std::vector<int>& s, const std::vector<Color>& phi, TheoremId t,
                          std::uint64_t budget) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out = extend_precolored(g, L, M, s, phi, t, budget);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  ++r.searches;
  r.max_search_ms = std::max(r.max_search_ms, ms);
  r.max_nodes = std::max(r.max_nodes, out.stats.nodes);
  switch (out.status) {
    case SearchStatus::Extended: {
      bool agrees = is_mcoloring(g, L, M, out.coloring);
      for (std::size_t i = 0; i < s.size(); ++i) agrees = agrees && out.coloring[s[i]] == phi[i];
      ++(agrees ? r.extended : r.invalid);
      break;
    }
    case SearchStatus::NoExtension: ++r.no_extension; break;
    case SearchStatus::BudgetExhausted: ++r.budget_exhausted; break;
  }
}

inline InstanceRecord run_instance(const CampaignSpec& spec, int index) {
  InstanceRecord r;
  r.index = index;
  const std::uint64_t iseed = splitmix(spec.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(index));
  try {
    GenProfile prof = GenProfile::parse(spec.generator);
    if (prof.kind != GenProfile::Kind::Named) prof.repair_for = spec.theorem;
    std::mt19937_64 rng(iseed);
    const int span = std::max(0, spec.max_order - spec.min_order);
    const int n = spec.min_order + static_cast<int>(below(rng, static_cast<std::uint64_t>(span) + 1));
    const PlaneGraph pg = generate(prof, n, rng());
    const Graph& g = pg.graph();
    r.hash = pg.canonical_hash();
    r.order = g.order();
    r.size = static_cast<int>(g.size());
    r.outer_length = pg.outer_face() >= 0 ? pg.face(pg.outer_face()).degree() : 0;

    const FilterResult fr = hypothesis_filter(g, spec.theorem);
    r.filter_pass = fr.pass;
    for (const auto& w : fr.witnesses) r.filter_witnesses.push_back(pattern(w.pattern).name);
    if (!fr.pass) return r;

    const ListAssignment L = ListAssignment::uniform(g.order(), spec.k);
    std::vector<int> s;
    if (pg.outer_face() >= 0) s = pg.face(pg.outer_face()).walk;
    const bool cycle_ok = !s.empty() && static_cast<int>(s.size()) <= max_precolored_cycle(spec.theorem) &&
                          is_cycle_of(g, s);
    for (int a = 0; a < spec.assignments_per_instance; ++a) {
      const MatchingAssignment M = random_assignment(g, spec.k, rng(), spec.assignment);
      if (cycle_ok) {
        for (int p = 0; p < spec.phis_per_assignment; ++p) {
          auto phi = sample_phi(g, L, M, s, rng);
          if (!phi) break;
          record_search(r, g, L, M, s, *phi, spec.theorem, spec.budget);
        }
      }
      if (spec.single_vertex_cases && allows_single_vertex(spec.theorem)) {
        for (int c = 0; c < spec.single_vertex_count; ++c) {
          const int v = static_cast<int>(below(rng, static_cast<std::uint64_t>(g.order())));
          const Color col = L[v][below(rng, L[v].size())];
          record_search(r, g, L, M, {v}, {col}, spec.theorem, spec.budget);
        }
      }
    }

    if (spec.run_discharging) {
      const PreconditionReport rep = check_preconditions(pg, spec.theorem);
      r.precondition_failures = rep.failed();
      r.preconditions_pass = rep.all_pass();
      const Classification cls = classify(pg);
      if (!cls.empty() && detail::outer_cycle_defect(pg, cls).empty() && detail::has_internal_vertex(cls)) {
        const ChargeLedger led = apply_rules(pg, spec.theorem);
        const Verdict v = verdict(pg, led);
        r.discharged = true;
        r.verdict_holds = v.holds();
        r.violations = static_cast<int>(v.violations.size());
        r.remarks_hold = remark_check(pg, led).holds();
      }
    }
  } catch (const Error& e) {
    r.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return r;
}

}  // namespace detail

/// Runs every instance of the spec. Records are ordered by instance index no
/// matter how many workers run, so results are reproducible from the spec.
inline CampaignResult run_campaign(const CampaignSpec& spec) {
  CampaignResult res;
  res.records.resize(std::max(0, spec.instances));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < spec.instances; i = next++) res.records[i] = detail::run_instance(spec, i);
  };
  const int workers = std::max(1, std::min(spec.workers, spec.instances));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::map<std::uint64_t, int> seen;
  for (const auto& r : res.records) {
    res.filter_pass += r.filter_pass ? 1 : 0;
    res.searches += r.searches;
    res.extended += r.extended;
    res.no_extension += r.no_extension;
    res.budget_exhausted += r.budget_exhausted;
    res.invalid += r.invalid;
    res.max_search_ms = std::max(res.max_search_ms, r.max_search_ms);
    res.errors += r.error.empty() ? 0 : 1;
    if (r.filter_pass && r.preconditions_pass && r.discharged) {
      ++res.clean;
      res.clean_verdict_holds += r.verdict_holds ? 1 : 0;
    }
    res.remark_failures += (r.discharged && !r.remarks_hold) ? 1 : 0;
    if (r.error.empty() && seen[r.hash]++ > 0) ++res.duplicates;
  }
  return res;
}

inline std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

inline void write_record(std::ostream& os, const InstanceRecord& r) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  os << "instance " << r.index << " hash=" << hex64(r.hash) << " n=" << r.order << " m=" << r.size
     << " outer=" << r.outer_length << " filter=" << (r.filter_pass ? "pass" : "fail:" + join(r.filter_witnesses))
     << " searches=" << r.searches << " extended=" << r.extended << " noext=" << r.no_extension
     << " budget=" << r.budget_exhausted << " invalid=" << r.invalid << " max_nodes=" << r.max_nodes;
  if (r.filter_pass)
    os << " pre=" << (r.preconditions_pass ? std::string("pass") : "fail:" + join(r.precondition_failures))
       << " verdict=" << (!r.discharged ? "skipped" : r.verdict_holds ? "holds" : "fails")
       << " violations=" << r.violations << " remarks=" << (r.remarks_hold ? "ok" : "broken");
  if (!r.error.empty()) os << " error=\"" << r.error << "\"";
  os << "\n";
}

inline void write_summary(std::ostream& os, const CampaignSpec& spec, const CampaignResult& res) {
  os << "summary theorem=" << to_string(spec.theorem) << " instances=" << res.records.size()
     << " filter_pass=" << res.filter_pass << " searches=" << res.searches << " extended=" << res.extended
     << " noext=" << res.no_extension << " budget=" << res.budget_exhausted << " invalid=" << res.invalid
     << " clean=" << res.clean << " clean_verdict_holds=" << res.clean_verdict_holds
     << " remark_failures=" << res.remark_failures << " duplicates=" << res.duplicates << " errors=" << res.errors
     << "\n";
}

}  // namespace planedp
