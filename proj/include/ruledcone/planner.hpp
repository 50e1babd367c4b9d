#pragma once

// Certified inflation plans between normalized classes of the one-point
// blow-up. Every recipe computes exact total inflation amounts from the pd
// area vectors, then a scheduler splits the totals into steps so that each
// step lies inside its t-range at the point where it is applied.

#include "ruledcone/inflation.hpp"
#include "ruledcone/strata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ruledcone {

// Which curve-existence fact licenses inflating along a class.
enum class Assumption {
  Always,   // F, E, F-E carry embedded curves for every compatible structure
  Open,     // open stratum: an embedded section B+xF with x <= g
  Stratum,  // the label class itself, by definition of the stratum
};

std::string to_string(Assumption a);
std::string justification(Assumption a);

struct PlannedStep {
  InflationStep step;
  Assumption assumption = Assumption::Always;
};

struct InflationPlan {
  NormalizedClass start;
  NormalizedClass end;
  std::string recipe;
  StratumLabel label;
  std::vector<PlannedStep> steps;
  // Classes assumed to carry curves throughout; replay keeps their areas positive.
  std::vector<ClassVector> curves;
  // Every step boundary normalizes into chamber_of(start).
  bool intra_chamber = true;

  bool empty() const noexcept { return steps.empty(); }
};

struct PlannerOptions {
  // Section coefficient for the open stratum; defaults to g.
  std::optional<int> x;
  int max_chunks = 512;
};

// Raise or lower e at fixed mu. Lowering uses E alone; raising solves the 2x2
// system along {label class or B+xF, F-E}. Throws PlanError naming the
// violated positivity constraint.
InflationPlan plan_vertical(const NormalizedClass& u, const Rational& c_target,
                            const StratumLabel& label, const SurfaceParams& params,
                            const PlannerOptions& options = {});

// Single inflation along F. Throws InputError when mu_target < mu.
InflationPlan plan_right(const NormalizedClass& u, const Rational& mu_target);

// Inflate along B+xF to reach mu_target, then restore e vertically.
// Throws PlanError when mu_target <= x (the normalized limit of the move).
InflationPlan plan_left_open(const NormalizedClass& u, const Rational& mu_target,
                             const SurfaceParams& params, const PlannerOptions& options = {});

// Inflate along the label class B-kF or B-kF-E to reach mu_target, then
// restore e vertically.
InflationPlan plan_left_stratum(const NormalizedClass& u, const Rational& mu_target,
                                const StratumLabel& label, const SurfaceParams& params,
                                const PlannerOptions& options = {});

// Parameter of a single inflation along z that moves normalized mu to
// mu_target. Throws PlanError when no non-negative parameter exists.
Rational left_parameter(const NormalizedClass& u, const ClassVector& z,
                        const Rational& mu_target);

// Open interval (lower, mu) of targets reachable leftward while keeping e and
// the label class positive, for a non-open label.
struct ReachInterval {
  Rational lower;
  Rational upper;
  bool empty() const { return lower >= upper; }
};
ReachInterval left_reach(const NormalizedClass& u, const StratumLabel& label);

// Same-chamber transport. Tries vertical-only, right-then-vertical and
// left-then-vertical and returns the applicable plan with fewest steps.
// Throws InputError for a cross-chamber pair, PlanError when no recipe applies.
InflationPlan plan(const NormalizedClass& u1, const NormalizedClass& u2,
                   const StratumLabel& label, const SurfaceParams& params,
                   const PlannerOptions& options = {});

struct ReplayResult {
  bool ok = true;
  std::string failure;
  std::vector<NormalizedClass> waypoints;  // normalized point after each step
};

// Re-applies every step with range checks, keeps the assumed curves positive
// and compares the normalized endpoint with plan.end exactly.
ReplayResult replay(const InflationPlan& plan);

// Classes assumed to carry curves under `label`.
std::vector<ClassVector> assumed_curves(const StratumLabel& label, std::int64_t x);

// True when every core class of the label has positive area at u and belongs
// to the enumerated families.
bool label_present(const NormalizedClass& u, const StratumLabel& label,
                   const SurfaceParams& params);

}  // namespace ruledcone
