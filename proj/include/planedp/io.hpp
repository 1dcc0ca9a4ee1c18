#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "planedp/dp_core.hpp"
#include "planedp/plane_graph.hpp"
#include "planedp/solver.hpp"

namespace planedp {

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
  auto b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

inline int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedInput, "bad " + what + " '" + tok + "'");
  }
}

inline std::vector<int> parse_ints(const std::string& s, const std::string& what) {
  std::istringstream is(s);
  std::vector<int> out;
  for (std::string tok; is >> tok;) out.push_back(parse_int(tok, what));
  return out;
}

/// Splits "<head> : <tail>"; tail may be empty.
inline std::pair<std::string, std::string> split_colon(const std::string& line, int lineno) {
  auto p = line.find(':');
  if (p == std::string::npos) throw Error(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": missing ':'");
  return {line.substr(0, p), line.substr(p + 1)};
}

inline int header_value(const std::string& line, const std::string& magic, const std::string& key) {
  std::istringstream is(line);
  std::string a, b, kv;
  is >> a >> b >> kv;
  if (a + " " + b != magic || kv.rfind(key + "=", 0) != 0)
    throw Error(ErrorCode::MalformedInput, "expected header '" + magic + " " + key + "=<n>'");
  return parse_int(kv.substr(key.size() + 1), key);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// .pg plane-graph files

inline PlaneGraph read_plane_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  RotationTable t;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (line.empty()) continue;
    if (n < 0) {
      n = detail::header_value(line, "planegraph v1", "n");
      continue;
    }
    auto [head, tail] = detail::split_colon(line, lineno);
    std::istringstream hs(head);
    std::string kind;
    hs >> kind;
    if (kind == "v") {
      std::string id;
      if (!(hs >> id)) throw Error(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": missing vertex id");
      t.labels.push_back(detail::parse_int(id, "vertex id"));
      t.rotation.push_back(detail::parse_ints(tail, "neighbor"));
    } else if (kind == "outer") {
      t.outer = detail::parse_ints(tail, "outer vertex");
    } else {
      throw Error(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": unknown record '" + kind + "'");
    }
  }
  if (n < 0) throw Error(ErrorCode::MalformedInput, "missing planegraph header");
  if (static_cast<int>(t.labels.size()) != n)
    throw Error(ErrorCode::MalformedInput,
                "header says n=" + std::to_string(n) + " but " + std::to_string(t.labels.size()) + " vertices given");
  return PlaneGraph::build(t);
}

inline PlaneGraph read_plane_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  return read_plane_graph(in);
}

inline void write_plane_graph(std::ostream& os, const PlaneGraph& g) {
  os << "planegraph v1 n=" << g.order() << "\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "v " << g.label(v) << " :";
    for (int w : g.rotation(v)) os << " " << g.label(w);
    os << "\n";
  }
  if (g.outer_face() >= 0) {
    os << "outer :";
    for (int v : g.face(g.outer_face()).walk) os << " " << g.label(v);
    os << "\n";
  }
}

// ---------------------------------------------------------------------------
// .cov cover files

struct CoverFile {
  int k = 0;
  ListAssignment lists;
  MatchingAssignment matching;
};

/// Lists default to {1..k}; an optional `l <v> : c ...` line replaces one.
/// Pairs on `m <u> <v>` lines are written as (color at u)-(color at v).
inline CoverFile read_cover(std::istream& in, const Graph& g) {
  std::string line;
  int lineno = 0;
  CoverFile cf;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (line.empty()) continue;
    if (!have_header) {
      cf.k = detail::header_value(line, "cover v1", "k");
      if (cf.k < 1 || cf.k > 63) throw Error(ErrorCode::MalformedInput, "k must be in 1..63");
      cf.lists = ListAssignment::uniform(g.order(), cf.k);
      have_header = true;
      continue;
    }
    auto [head, tail] = detail::split_colon(line, lineno);
    std::istringstream hs(head);
    std::string kind;
    hs >> kind;
    auto vertex = [&](const std::string& tok) {
      auto idx = g.index_of(detail::parse_int(tok, "vertex"));
      if (!idx) throw Error(ErrorCode::UnknownId, "line " + std::to_string(lineno) + ": unknown vertex " + tok);
      return *idx;
    };
    if (kind == "l") {
      std::string a;
      hs >> a;
      const int v = vertex(a);
      auto colors = detail::parse_ints(tail, "color");
      std::sort(colors.begin(), colors.end());
      colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
      cf.lists.raw()[v] = colors;
    } else if (kind == "m") {
      std::string a, b;
      hs >> a >> b;
      const int u = vertex(a), v = vertex(b);
      if (!g.adjacent(u, v)) throw Error(ErrorCode::UnknownEdge, "line " + std::to_string(lineno) + ": not an edge");
      std::string t = tail;
      std::replace(t.begin(), t.end(), ',', ' ');
      std::istringstream ps(t);
      for (std::string pair; ps >> pair;) {
        auto dash = pair.find('-', 1);
        if (dash == std::string::npos) throw Error(ErrorCode::MalformedInput, "bad pair '" + pair + "'");
        cf.matching.add(u, detail::parse_int(pair.substr(0, dash), "color"), v,
                        detail::parse_int(pair.substr(dash + 1), "color"));
      }
    } else {
      throw Error(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": unknown record '" + kind + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::MalformedInput, "missing cover header");
  validate_cover(g, cf.lists, cf.matching);
  return cf;
}

inline CoverFile read_cover(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  return read_cover(in, g);
}

inline void write_cover(std::ostream& os, const Graph& g, int k, const ListAssignment& L,
                        const MatchingAssignment& M) {
  os << "cover v1 k=" << k << "\n";
  for (int v = 0; v < g.order(); ++v) {
    std::vector<Color> def(k);
    for (int c = 0; c < k; ++c) def[c] = c + 1;
    if (L[v] == def) continue;
    os << "l " << g.label(v) << " :";
    for (Color c : L[v]) os << " " << c;
    os << "\n";
  }
  for (const auto& [e, ps] : M.entries()) {
    os << "m " << g.label(e.u) << " " << g.label(e.v) << " :";
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? ", " : " ") << ps[i].first << "-" << ps[i].second;
    os << "\n";
  }
}

// ---------------------------------------------------------------------------
// Records

inline void write_result(std::ostream& os, const std::string& id, const SearchOutcome& out) {
  os << "result " << id << " " << to_string(out.status) << " nodes=" << out.stats.nodes
     << " depth=" << out.stats.max_depth << "\n";
}

inline void write_coloring(std::ostream& os, const Graph& g, const Coloring& phi) {
  os << "coloring";
  for (int v = 0; v < g.order(); ++v) os << " " << g.label(v) << "=" << phi[v];
  os << "\n";
}

}  // namespace planedp
