#pragma once

// JSON forms of the library's results. Rationals are always `p/q` strings.

#include "ruledcone/discrepancy.hpp"
#include "ruledcone/gromov.hpp"
#include "ruledcone/planner.hpp"
#include "ruledcone/stability.hpp"
#include "ruledcone/strata.hpp"

#include <json.hpp>

namespace ruledcone {

using Json = nlohmann::ordered_json;

Json to_json(const NormalizedClass& u);
Json to_json(const RawClass& w);
Json to_json(const InflationStep& step);
Json to_json(const StratumLabel& label);
Json to_json(const InflationPlan& plan);
Json to_json(const StabilityReport& report);
Json to_json(const Decomposition& d);
Json to_json(const Discrepancy& d);
Json to_json(const SectionDimensionComparison& c);

// {"z": "B-2F-E", "t": "3/20"}
InflationStep step_from_json(const Json& j, std::size_t n);

// {"chamber": int, "labels": [{"core": [...], "codim": int}]}
Json strata_json(ChamberId chamber, const std::vector<StratumLabel>& labels);

struct ReportConfig {
  SurfaceParams params;
  Rational mu_max;
  Rational step;
  Rational mu_min = 0;
  std::optional<int> x;
  unsigned threads = 0;
};

// Chambers with a representative point and their labels, the stability
// verdicts, the section-class dimension comparison and the discrepancy list.
Json build_report(const ReportConfig& config, bool* counterexample_found = nullptr);

// Interior representative of a chamber (the centroid of its triangle; the
// point (1, 1/2) for chamber 1).
NormalizedClass chamber_representative(ChamberId id);

}  // namespace ruledcone
