#pragma once

// Grid check of same-chamber transport: for every ordered pair of grid points
// in one chamber and every stratum label present there, a plan must exist
// and replay exactly.

#include "ruledcone/planner.hpp"

#include <optional>
#include <vector>

namespace ruledcone {

struct Counterexample {
  NormalizedClass from;
  NormalizedClass to;
  StratumLabel label;
  std::string constraint;
};

struct ChamberVerdict {
  ChamberId chamber;
  std::size_t points = 0;
  std::size_t pairs = 0;    // ordered pairs of distinct points
  std::size_t checks = 0;   // (pair, label) combinations attempted
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool skipped = false;     // below the first verified chamber 2g
  std::optional<Counterexample> first_failure;
};

struct StabilityReport {
  SurfaceParams params;
  Rational mu_min;
  Rational mu_max;
  Rational step;
  std::int64_t x = 0;
  std::size_t policy_skipped_points = 0;  // grid points with mu < 1 or c >= mu
  std::size_t cross_chamber_pairs = 0;    // not attempted
  std::vector<ChamberVerdict> chambers;

  bool all_passed() const;
  std::size_t total_failed() const;
};

struct StabilityOptions {
  Rational mu_min = 0;          // grid is mu in (mu_min, mu_max]
  std::optional<int> x;         // open-stratum section coefficient, default g
  unsigned threads = 0;         // 0: hardware concurrency
};

// Grid: mu = i * step in (mu_min, mu_max], c = j * step in (0, 1). Chambers
// with index < 2g are reported as skipped. Failures are report content.
StabilityReport verify_stability(const SurfaceParams& params, const Rational& mu_max,
                                 const Rational& grid_step, const StabilityOptions& options = {});

}  // namespace ruledcone
