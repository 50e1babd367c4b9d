#pragma once

// Cross-checks of the hand-derived inflation algebra that the planner
// replaces. Each check substitutes the displayed parametrization or solution
// into the exact pd-vector algebra at a sample point and records a
// discrepancy only when the two disagree.

#include <string>
#include <vector>

namespace ruledcone {

struct Discrepancy {
  std::string id;
  std::string topic;
  std::string displayed;   // the expression as written in the derivation
  std::string recomputed;  // the expression the exact algebra gives
  std::string evidence;    // sample-point substitution that exposes the gap
};

std::vector<Discrepancy> detect_discrepancies();

}  // namespace ruledcone
