#include "ruledcone/planner.hpp"

#include "ruledcone/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ruledcone {

namespace {

const ClassVector kE = ClassVector::of(0, 0, 1);
const ClassVector kF = ClassVector::of(0, 1, 0);
const ClassVector kFminusE = ClassVector::of(0, 1, -1);

struct Amount {
  ClassVector z;
  Rational total;
  Assumption assumption;
};

struct Transport {
  ClassVector z;
  Assumption assumption;
  std::int64_t x = 0;  // section coefficient when open
};

Assumption assumption_for(const ClassVector& z, const Transport& tr) {
  if (z == kE || z == kF || z == kFminusE) return Assumption::Always;
  return tr.assumption;
}

std::int64_t section_coefficient(const SurfaceParams& params, const PlannerOptions& options) {
  std::int64_t x = options.x.value_or(params.g);
  if (x < 0 || x > params.g) {
    throw InputError("section coefficient x = " + std::to_string(x) +
                     " must satisfy 0 <= x <= g = " + std::to_string(params.g));
  }
  return x;
}

Transport transport_for(const StratumLabel& label, const SurfaceParams& params,
                        const PlannerOptions& options) {
  if (label.is_open()) {
    auto x = section_coefficient(params, options);
    return {ClassVector::of(1, x, 0), Assumption::Open, x};
  }
  if (label.core.size() != 1) {
    throw InputError("planner supports labels with a single core class, got " + label.name());
  }
  return {label.core.front(), Assumption::Stratum, 0};
}

void require_planar_input(const NormalizedClass& u) {
  if (u.n() != 1) throw DimensionError("planning is only defined for n = 1");
  auto v = check_validity(u);
  if (!v.ok()) {
    std::string msg = "invalid normalized class " + to_string(u) + ", violates:";
    for (const auto& s : v.violations) msg += " [" + s + "]";
    throw InputError(msg);
  }
}

Rational mu_of(const RawClass& w) { return w.b_area / w.f_area; }
Rational c_of(const RawClass& w) { return w.e_area.front() / w.f_area; }

// normalize(w + t1 v1 + t2 v2) = (mu2, 1, c2), by Cramer's rule.
std::optional<std::pair<Rational, Rational>> solve_two(const RawClass& w, const Rational& mu2,
                                                       const Rational& c2, const RawClass& v1,
                                                       const RawClass& v2) {
  Rational a11 = v1.b_area - mu2 * v1.f_area;
  Rational a12 = v2.b_area - mu2 * v2.f_area;
  Rational a21 = v1.e_area.front() - c2 * v1.f_area;
  Rational a22 = v2.e_area.front() - c2 * v2.f_area;
  Rational b1 = mu2 * w.f_area - w.b_area;
  Rational b2 = c2 * w.f_area - w.e_area.front();
  Rational det = a11 * a22 - a12 * a21;
  if (det == 0) return std::nullopt;
  return std::make_pair((b1 * a22 - a12 * b2) / det, (a11 * b2 - a21 * b1) / det);
}

std::vector<Amount> vertical_amounts(const RawClass& w, const Rational& c_target,
                                     const Transport& tr, const std::string& recipe) {
  Rational c = c_of(w);
  if (c_target == c) return {};
  if (c_target < c) {
    return {{kE, w.e_area.front() - c_target * w.f_area, Assumption::Always}};
  }
  Rational mu = mu_of(w);
  auto sol = solve_two(w, mu, c_target, pd_area_vector(tr.z), pd_area_vector(kFminusE));
  if (!sol || sol->first <= 0 || sol->second <= 0) {
    std::string why;
    if (tr.assumption == Assumption::Open) {
      why = "raising e to " + to_string(c_target) + " at mu = " + to_string(mu) +
            " along B+xF and F-E needs mu > x + c_target (x = " + std::to_string(tr.x) +
            ", mu - x - c_target = " + to_string(mu - tr.x - c_target) + ")";
    } else if (!sol) {
      why = "singular system along " + to_string(tr.z) + " and F-E";
    } else {
      why = "no positive solution along " + to_string(tr.z) + " and F-E (t1 = " +
            to_string(sol->first) + ", t2 = " + to_string(sol->second) + ")";
    }
    throw PlanError(recipe, why);
  }
  return {{tr.z, sol->first, tr.assumption}, {kFminusE, sol->second, Assumption::Always}};
}

std::vector<Amount> merge(std::vector<Amount> amounts) {
  std::vector<Amount> out;
  for (auto& a : amounts) {
    if (a.total == 0) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const Amount& b) { return b.z == a.z; });
    if (it == out.end()) {
      out.push_back(std::move(a));
    } else {
      it->total += a.total;
    }
  }
  std::sort(out.begin(), out.end(), [](const Amount& a, const Amount& b) { return a.z < b.z; });
  return out;
}

bool curves_positive(const RawClass& w, const std::vector<ClassVector>& curves) {
  return std::all_of(curves.begin(), curves.end(),
                     [&](const ClassVector& a) { return area(w, a) > 0; });
}

std::optional<std::vector<PlannedStep>> simulate(const RawClass& start,
                                                 const std::vector<Amount>& amounts,
                                                 const std::vector<std::size_t>& order, int chunks,
                                                 const std::vector<ClassVector>& curves) {
  std::vector<PlannedStep> steps;
  RawClass cur = start;
  for (int chunk = 0; chunk < chunks; ++chunk) {
    for (auto idx : order) {
      const auto& a = amounts[idx];
      Rational t = a.total / chunks;
      Rational before = area(cur, a.z);
      if (before <= 0) return std::nullopt;
      auto zz = square(a.z);
      if (zz < 0 && t >= before / Rational(-zz)) return std::nullopt;
      cur += t * pd_area_vector(a.z);
      if (!curves_positive(cur, curves)) return std::nullopt;
      steps.push_back({{a.z, t}, a.assumption});
    }
  }
  return steps;
}

// Fewest uniform chunks first; within a chunk count, class orders are tried in
// lexicographic order.
std::vector<PlannedStep> schedule(const RawClass& start, const std::vector<Amount>& amounts,
                                  const std::vector<ClassVector>& curves, int max_chunks,
                                  const std::string& recipe) {
  if (amounts.empty()) return {};
  for (const auto& a : amounts) {
    if (a.total < 0) {
      throw PlanError(recipe, "negative inflation amount " + to_string(a.total) + " along " +
                                  to_string(a.z));
    }
  }
  RawClass end = start;
  for (const auto& a : amounts) end += a.total * pd_area_vector(a.z);
  for (const auto& c : curves) {
    if (area(end, c) <= 0) {
      throw PlanError(recipe, "curve " + to_string(c) + " would reach non-positive area " +
                                  to_string(area(end, c)) + " at the endpoint");
    }
  }
  std::vector<std::size_t> base(amounts.size());
  std::iota(base.begin(), base.end(), 0);
  for (int chunks = 1; chunks <= max_chunks; ++chunks) {
    auto order = base;
    do {
      if (auto steps = simulate(start, amounts, order, chunks, curves)) return *steps;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  throw PlanError(recipe, "no schedule within " + std::to_string(max_chunks) + " chunks");
}

InflationPlan finish(const NormalizedClass& start, const NormalizedClass& end,
                     std::string recipe, const StratumLabel& label,
                     const std::vector<Amount>& amounts, std::vector<ClassVector> curves,
                     int max_chunks) {
  InflationPlan p;
  p.start = start;
  p.end = end;
  p.recipe = std::move(recipe);
  p.label = label;
  p.curves = std::move(curves);
  const RawClass raw = RawClass::from(start);
  if (!curves_positive(raw, p.curves)) {
    throw PlanError(p.recipe, "an assumed curve has non-positive area at the start point");
  }
  p.steps = schedule(raw, merge(amounts), p.curves, max_chunks, p.recipe);

  RawClass cur = raw;
  const auto home = chamber_of(start);
  for (const auto& s : p.steps) {
    cur += s.step.t * pd_area_vector(s.step.z);
    auto w = normalize(cur);
    if (!is_valid(w) || chamber_of(w) != home) p.intra_chamber = false;
  }
  if (normalize(cur) != end) {
    throw std::logic_error("planner endpoint mismatch: reached " + to_string(normalize(cur)) +
                           ", expected " + to_string(end));
  }
  return p;
}

InflationPlan identity_plan(const NormalizedClass& u, const StratumLabel& label,
                            std::vector<ClassVector> curves) {
  InflationPlan p;
  p.start = u;
  p.end = u;
  p.recipe = "identity";
  p.label = label;
  p.curves = std::move(curves);
  return p;
}

}  // namespace

std::string to_string(Assumption a) {
  switch (a) {
    case Assumption::Always: return "always";
    case Assumption::Open: return "open";
    case Assumption::Stratum: return "stratum";
  }
  return "?";
}

std::string justification(Assumption a) {
  switch (a) {
    case Assumption::Always:
      return "embedded curves in F, F-E and E exist for every compatible structure "
             "(singular fiber foliation)";
    case Assumption::Open:
      return "open stratum: the stable curve in B+gF has a section component B+xF with x <= g";
    case Assumption::Stratum:
      return "the label class carries an embedded curve by definition of the stratum";
  }
  return "";
}

std::vector<ClassVector> assumed_curves(const StratumLabel& label, std::int64_t x) {
  std::vector<ClassVector> curves{kE, kFminusE, kF};
  if (label.is_open()) {
    curves.push_back(ClassVector::of(1, x, 0));
  } else {
    for (const auto& c : label.core) curves.push_back(c);
  }
  return curves;
}

bool label_present(const NormalizedClass& u, const StratumLabel& label,
                   const SurfaceParams& params) {
  if (label.is_open()) return true;
  auto present = negative_classes(u, params, std::nullopt);
  return std::all_of(label.core.begin(), label.core.end(), [&](const ClassVector& c) {
    return std::find(present.begin(), present.end(), c) != present.end();
  });
}

InflationPlan plan_vertical(const NormalizedClass& u, const Rational& c_target,
                            const StratumLabel& label, const SurfaceParams& params,
                            const PlannerOptions& options) {
  require_planar_input(u);
  if (c_target <= 0 || c_target >= 1) throw InputError("c_target must lie in (0, 1)");
  if (!label_present(u, label, params)) {
    throw InputError("label " + label.name() + " is not present at " + to_string(u));
  }
  auto tr = transport_for(label, params, options);
  auto curves = assumed_curves(label, tr.x);
  auto end = NormalizedClass::one_point(u.mu, c_target);
  if (c_target == u.c()) return identity_plan(u, label, curves);
  auto amounts = vertical_amounts(RawClass::from(u), c_target, tr, "vertical");
  return finish(u, end, "vertical", label, amounts, std::move(curves), options.max_chunks);
}

InflationPlan plan_right(const NormalizedClass& u, const Rational& mu_target) {
  require_planar_input(u);
  if (mu_target < u.mu) {
    throw InputError("rightward target " + to_string(mu_target) + " is below mu = " +
                     to_string(u.mu));
  }
  std::vector<ClassVector> curves{kE, kFminusE, kF};
  if (mu_target == u.mu) return identity_plan(u, open_label(), curves);
  auto end = NormalizedClass::one_point(mu_target, u.c());
  return finish(u, end, "right", open_label(), {{kF, mu_target - u.mu, Assumption::Always}},
                std::move(curves), 1);
}

Rational left_parameter(const NormalizedClass& u, const ClassVector& z,
                        const Rational& mu_target) {
  auto v = pd_area_vector(z);
  Rational denom = v.b_area - mu_target * v.f_area;
  if (denom == 0) {
    throw PlanError("left", "inflation along " + to_string(z) + " keeps normalized mu at " +
                                to_string(mu_target));
  }
  Rational t = (mu_target - u.mu) / denom;
  if (t < 0) {
    throw PlanError("left", "inflation along " + to_string(z) + " cannot move mu from " +
                                to_string(u.mu) + " to " + to_string(mu_target));
  }
  return t;
}

InflationPlan plan_left_open(const NormalizedClass& u, const Rational& mu_target,
                             const SurfaceParams& params, const PlannerOptions& options) {
  require_planar_input(u);
  auto label = open_label();
  auto tr = transport_for(label, params, options);
  auto curves = assumed_curves(label, tr.x);
  if (mu_target == u.mu) return identity_plan(u, label, curves);
  if (mu_target > u.mu) throw InputError("leftward target exceeds mu");
  if (mu_target <= tr.x) {
    throw PlanError("left-open", "mu_target = " + to_string(mu_target) +
                                     " is unreachable: inflating along B+" +
                                     std::to_string(tr.x) + "F only approaches mu = " +
                                     std::to_string(tr.x));
  }
  Rational t = left_parameter(u, tr.z, mu_target);
  RawClass mid = RawClass::from(u) + t * pd_area_vector(tr.z);
  auto amounts = vertical_amounts(mid, u.c(), tr, "left-open");
  amounts.push_back({tr.z, t, tr.assumption});
  auto end = NormalizedClass::one_point(mu_target, u.c());
  return finish(u, end, "left-then-vertical", label, amounts, std::move(curves),
                options.max_chunks);
}

ReachInterval left_reach(const NormalizedClass& u, const StratumLabel& label) {
  if (label.core.size() != 1) throw InputError("left_reach needs a single-class label");
  const auto& z = label.core.front();
  // Target (m, c) keeps area(z) = m*p + q + r*c positive, with p = 1.
  Rational lower = Rational(-z.q) - Rational(z.r.front()) * u.c();
  if (lower < 1) lower = 1;
  return {lower, u.mu};
}

InflationPlan plan_left_stratum(const NormalizedClass& u, const Rational& mu_target,
                                const StratumLabel& label, const SurfaceParams& params,
                                const PlannerOptions& options) {
  require_planar_input(u);
  if (label.is_open()) throw InputError("plan_left_stratum needs a non-open label");
  if (!label_present(u, label, params)) {
    throw InputError("label " + label.name() + " is not present at " + to_string(u));
  }
  auto tr = transport_for(label, params, options);
  auto curves = assumed_curves(label, tr.x);
  if (mu_target == u.mu) return identity_plan(u, label, curves);
  if (mu_target > u.mu) throw InputError("leftward target exceeds mu");
  auto reach = left_reach(u, label);
  if (mu_target <= reach.lower) {
    throw PlanError("left-stratum",
                    "mu_target = " + to_string(mu_target) + " outside reachable interval (" +
                        to_string(reach.lower) + ", " + to_string(reach.upper) + ") for " +
                        label.name() + " (area of the label class must stay positive, mu > 1)");
  }
  Rational t = left_parameter(u, tr.z, mu_target);
  RawClass mid = RawClass::from(u) + t * pd_area_vector(tr.z);
  auto amounts = vertical_amounts(mid, u.c(), tr, "left-stratum");
  amounts.push_back({tr.z, t, tr.assumption});
  auto end = NormalizedClass::one_point(mu_target, u.c());
  return finish(u, end, "left-then-vertical", label, amounts, std::move(curves),
                options.max_chunks);
}

InflationPlan plan(const NormalizedClass& u1, const NormalizedClass& u2,
                   const StratumLabel& label, const SurfaceParams& params,
                   const PlannerOptions& options) {
  require_planar_input(u1);
  require_planar_input(u2);
  if (!same_chamber(u1, u2)) {
    throw InputError("cross-chamber pair " + to_string(u1) + " -> " + to_string(u2) +
                     " is out of scope");
  }
  if (!label_present(u1, label, params) || !label_present(u2, label, params)) {
    throw InputError("label " + label.name() + " is not present in this chamber");
  }
  auto tr = transport_for(label, params, options);
  auto curves = assumed_curves(label, tr.x);
  if (u1 == u2) return identity_plan(u1, label, curves);

  const RawClass start = RawClass::from(u1);
  std::vector<Amount> amounts;
  std::string recipe;
  if (u1.mu == u2.mu) {
    recipe = "vertical";
    amounts = vertical_amounts(start, u2.c(), tr, recipe);
  } else if (u2.mu > u1.mu) {
    recipe = "right-then-vertical";
    Rational t = u2.mu - u1.mu;
    RawClass mid = start + t * pd_area_vector(kF);
    amounts = vertical_amounts(mid, u2.c(), tr, recipe);
    amounts.push_back({kF, t, Assumption::Always});
  } else {
    recipe = "left-then-vertical";
    if (tr.assumption == Assumption::Open && u2.mu <= tr.x) {
      throw PlanError(recipe, "mu_target <= x: inflating along B+xF only approaches mu = x");
    }
    Rational t = left_parameter(u1, tr.z, u2.mu);
    RawClass mid = start + t * pd_area_vector(tr.z);
    amounts = vertical_amounts(mid, u2.c(), tr, recipe);
    amounts.push_back({tr.z, t, tr.assumption});
  }
  for (auto& a : amounts) a.assumption = assumption_for(a.z, tr);
  return finish(u1, u2, recipe, label, amounts, std::move(curves), options.max_chunks);
}

ReplayResult replay(const InflationPlan& plan) {
  ReplayResult result;
  auto fail = [&](std::string why) {
    result.ok = false;
    result.failure = std::move(why);
    return result;
  };
  RawClass cur = RawClass::from(plan.start);
  if (!curves_positive(cur, plan.curves)) return fail("assumed curve non-positive at start");
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& s = plan.steps[i].step;
    try {
      cur = inflate(cur, s);
    } catch (const InputError& e) {
      return fail("step " + std::to_string(i) + ": " + e.what());
    }
    for (const auto& c : plan.curves) {
      if (area(cur, c) <= 0) {
        return fail("step " + std::to_string(i) + ": curve " + to_string(c) +
                    " reaches area " + to_string(area(cur, c)));
      }
    }
    result.waypoints.push_back(normalize(cur));
  }
  if (normalize(cur) != plan.end) {
    return fail("replay ends at " + to_string(normalize(cur)) + ", plan claims " +
                to_string(plan.end));
  }
  return result;
}

}  // namespace ruledcone
