#pragma once

#include <string>
#include <string_view>

#include "planedp/error.hpp"

namespace planedp {

/// The hypothesis families the toolkit knows about. MRA, MRB and MRC carry
/// precoloring-extension statements and discharging rule sets; MRTHREE and LL
/// are available as hypothesis filters only.
enum class TheoremId { MRTHREE, MRA, MRB, MRC, LL };

inline std::string_view to_string(TheoremId t) {
  switch (t) {
    case TheoremId::MRTHREE: return "MRTHREE";
    case TheoremId::MRA: return "MRA";
    case TheoremId::MRB: return "MRB";
    case TheoremId::MRC: return "MRC";
    case TheoremId::LL: return "LL";
  }
  return "?";
}

inline TheoremId parse_theorem(std::string_view s) {
  for (TheoremId t : {TheoremId::MRTHREE, TheoremId::MRA, TheoremId::MRB, TheoremId::MRC, TheoremId::LL})
    if (to_string(t) == s) return t;
  throw Error(ErrorCode::MalformedInput, "unknown theorem id " + std::string(s));
}

/// Longest precolored cycle allowed by the extension statement.
inline int max_precolored_cycle(TheoremId t) { return t == TheoremId::MRC ? 7 : 6; }

/// Whether a single precolored vertex is an allowed S.
inline bool allows_single_vertex(TheoremId t) { return t == TheoremId::MRA; }

/// Range of separating cycle lengths excluded in a minimal counterexample.
inline int separating_cycle_bound(TheoremId t) { return t == TheoremId::MRC ? 7 : 6; }

}  // namespace planedp
