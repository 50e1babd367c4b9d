#include "ruledcone/serialize.hpp"

#include "ruledcone/errors.hpp"

namespace ruledcone {

Json to_json(const NormalizedClass& u) {
  Json e = Json::array();
  for (const auto& v : u.e) e.push_back(to_string(v));
  return Json{{"mu", to_string(u.mu)}, {"e", e}};
}

Json to_json(const RawClass& w) {
  Json e = Json::array();
  for (const auto& v : w.e_area) e.push_back(to_string(v));
  return Json{{"b_area", to_string(w.b_area)}, {"f_area", to_string(w.f_area)}, {"e_area", e}};
}

Json to_json(const InflationStep& step) {
  return Json{{"z", to_string(step.z)}, {"t", to_string(step.t)}};
}

InflationStep step_from_json(const Json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("z") || !j.contains("t") || !j["z"].is_string() ||
      !j["t"].is_string()) {
    throw InputError("inflation step must be {\"z\": <class>, \"t\": <p/q>}");
  }
  return {parse_class(j["z"].get<std::string>(), n), parse_rational(j["t"].get<std::string>())};
}

Json to_json(const StratumLabel& label) {
  Json core = Json::array();
  for (const auto& c : label.core) core.push_back(to_string(c));
  return Json{{"core", core}, {"codim", label.codim}};
}

Json strata_json(ChamberId chamber, const std::vector<StratumLabel>& labels) {
  Json out{{"chamber", chamber.index}, {"labels", Json::array()}};
  for (const auto& l : labels) out["labels"].push_back(to_json(l));
  return out;
}

Json to_json(const InflationPlan& plan) {
  Json steps = Json::array();
  for (const auto& s : plan.steps) {
    Json j = to_json(s.step);
    j["assumption"] = to_string(s.assumption);
    j["justification"] = justification(s.assumption);
    steps.push_back(j);
  }
  Json curves = Json::array();
  for (const auto& c : plan.curves) curves.push_back(to_string(c));
  return Json{{"start", to_json(plan.start)},
              {"end", to_json(plan.end)},
              {"label", plan.label.name()},
              {"recipe", plan.recipe},
              {"intra_chamber", plan.intra_chamber},
              {"assumed_curves", curves},
              {"steps", steps}};
}

Json to_json(const StabilityReport& report) {
  Json chambers = Json::array();
  for (const auto& c : report.chambers) {
    Json j{{"chamber", c.chamber.index}, {"points", c.points},   {"pairs", c.pairs},
           {"checks", c.checks},         {"passed", c.passed},   {"failed", c.failed},
           {"skipped", c.skipped}};
    if (c.first_failure) {
      j["counterexample"] = Json{{"from", to_json(c.first_failure->from)},
                                 {"to", to_json(c.first_failure->to)},
                                 {"label", c.first_failure->label.name()},
                                 {"constraint", c.first_failure->constraint}};
    }
    chambers.push_back(j);
  }
  return Json{{"g", report.params.g},
              {"mu_min", to_string(report.mu_min)},
              {"mu_max", to_string(report.mu_max)},
              {"step", to_string(report.step)},
              {"x", report.x},
              {"first_verified_chamber", 2 * report.params.g},
              {"policy_skipped_points", report.policy_skipped_points},
              {"cross_chamber_pairs", report.cross_chamber_pairs},
              {"all_passed", report.all_passed()},
              {"chambers", chambers}};
}

Json to_json(const Decomposition& d) {
  Json parts = Json::array();
  for (const auto& p : d.parts) parts.push_back(to_string(p));
  Json j{{"parts", parts}, {"section", to_string(d.section)}, {"section_is_bxf", d.section_is_bxf}};
  j["x"] = d.x ? Json(*d.x) : Json(nullptr);
  return j;
}

Json to_json(const Discrepancy& d) {
  return Json{{"id", d.id},
              {"topic", d.topic},
              {"displayed", d.displayed},
              {"recomputed", d.recomputed},
              {"evidence", d.evidence}};
}

Json to_json(const SectionDimensionComparison& c) {
  return Json{{"g", c.g},
              {"from_canonical", to_string(c.from_canonical)},
              {"literal_reading", to_string(c.literal_reading)},
              {"stated_value", to_string(c.stated_value)},
              {"agree", c.from_canonical == c.stated_value}};
}

NormalizedClass chamber_representative(ChamberId id) {
  if (id.index <= 1) return NormalizedClass::one_point(1, Rational(1, 2));
  const long k = id.k();
  if (id.even()) return NormalizedClass::one_point(Rational(3 * k + 1, 3), Rational(2, 3));
  return NormalizedClass::one_point(Rational(3 * k + 2, 3), Rational(1, 3));
}

Json build_report(const ReportConfig& config, bool* counterexample_found) {
  const auto& params = config.params;
  if (params.n != 1) throw InputError("report is defined for n = 1");
  Json chambers = Json::array();
  const long top_k = ceil(config.mu_max).get_si() - 1;
  for (long idx = 1; idx <= 2 * top_k + 1; ++idx) {
    ChamberId id{static_cast<int>(idx)};
    auto rep = chamber_representative(id);
    rep.mu.canonicalize();
    Json ineq = Json::array();
    for (const auto& i : defining_inequalities(id)) ineq.push_back(i.to_string());
    Json entry{{"index", id.index}, {"representative", to_json(rep)}, {"inequalities", ineq}};
    entry["labels"] = strata_json(chamber_of(rep), stratum_labels(rep, params, std::nullopt))["labels"];
    chambers.push_back(entry);
  }

  StabilityOptions opts;
  opts.mu_min = config.mu_min;
  opts.x = config.x;
  opts.threads = config.threads;
  auto stability = verify_stability(params, config.mu_max, config.step, opts);
  if (counterexample_found) *counterexample_found = !stability.all_passed();

  Json verdicts = Json::array();
  for (const auto& c : stability.chambers) {
    if (c.skipped) continue;
    verdicts.push_back(Json{{"chamber", c.chamber.index},
                            {"verified", c.failed == 0},
                            {"checks", c.checks},
                            {"failed", c.failed}});
  }

  Json discrepancies = Json::array();
  for (const auto& d : detect_discrepancies()) discrepancies.push_back(to_json(d));

  return Json{{"g", params.g},
              {"mu_max", to_string(config.mu_max)},
              {"step", to_string(config.step)},
              {"chambers", chambers},
              {"verdicts", verdicts},
              {"stability", to_json(stability)},
              {"gromov",
               Json{{"section_dimension", to_json(compare_section_dimension(params.g))},
                    {"gr_section", gromov_invariant(1, params.g, params).value.get_str()}}},
              {"paper_discrepancies", discrepancies}};
}

}  // namespace ruledcone
